#pragma once

// Exact dense linear algebra over prime fields GF(p).
//
// Everything downstream (group representations, endomorphism algebras,
// Ext groups) reduces to rank / kernel / solve over GF(p), so this file is
// the computational substrate of the whole library. Entries are machine-word
// residues in [0, p); elimination uses first-nonzero pivoting so that every
// result is bit-exact reproducible. Matrices are immutable values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comack/error.hpp"

namespace comack::gf {

// ---------------------------------------------------------------------------
// PrimeField
// ---------------------------------------------------------------------------

struct PrimeField {
    uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(uint32_t prime);

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t(a) * b) % p);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t inv(uint32_t a) const;
    uint32_t reduce(int64_t v) const {
        int64_t r = v % int64_t(p);
        return static_cast<uint32_t>(r < 0 ? r + p : r);
    }
};

bool is_prime(uint32_t n);

// ---------------------------------------------------------------------------
// Mat: dense row-major matrix with reduced entries
// ---------------------------------------------------------------------------

class Mat {
public:
    Mat() : field_(), rows_(0), cols_(0) {}
    Mat(PrimeField f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(PrimeField f, size_t n);
    // Rows given as initializer-style nested vectors; entries reduced mod p.
    static Mat from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    uint32_t& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const uint32_t* row(size_t i) const { return a_.data() + i * cols_; }
    uint32_t* row(size_t i) { return a_.data() + i * cols_; }

    bool operator==(const Mat& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    Mat transpose() const;
    Mat mul(const Mat& rhs) const;
    Mat add(const Mat& rhs) const;
    Mat sub(const Mat& rhs) const;
    Mat scale(uint32_t c) const;

    // Column/row slicing used for block-structured representations.
    Mat submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
    void paste(size_t r0, size_t c0, const Mat& block);

    // Stacks rhs below this.
    Mat vstack(const Mat& below) const;
    Mat hstack(const Mat& right) const;

    // Row-major flattening of the matrix as a single column vector.
    Mat flatten_column() const;

    std::string to_string() const;

private:
    PrimeField field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// Kronecker product, standard convention:
//   kron(a, b)[(i*b.rows + k), (j*b.cols + l)] = a(i,j) * b(k,l).
// The left factor indexes the coarse blocks (left-factor-major), and each
// block is laid out row-major like b. Used to assemble Hom equivariance
// systems: with row-major vec(X), vec(A·X·B) = kron(A, B^T)·vec(X).
Mat kron(const Mat& a, const Mat& b);

// ---------------------------------------------------------------------------
// Gaussian elimination
// ---------------------------------------------------------------------------

struct RrefResult {
    Mat r;                       // reduced row-echelon form
    size_t rank = 0;
    std::vector<size_t> pivots;  // strictly increasing pivot column indices
};

// Unique reduced row-echelon form, first-nonzero pivoting.
RrefResult rref(const Mat& m);

size_t rank(const Mat& m);

// Solve a·x = b (matrix right-hand side). Returns a deterministic particular
// solution (free variables set to zero) or nullopt when inconsistent.
// a.rows != b.rows is a contract violation and throws.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Precomputed elimination of a fixed coefficient matrix for repeated solves.
class Solver {
public:
    explicit Solver(const Mat& a);

    size_t rank() const { return pivots_.size(); }
    const std::vector<size_t>& pivots() const { return pivots_; }

    std::optional<Mat> solve(const Mat& b) const;

private:
    PrimeField field_;
    size_t rows_, cols_;
    Mat reduced_;               // rref of a
    Mat transform_;             // transform_ · a = reduced_
    std::vector<size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Subspace: canonical RREF basis, one vector per row
// ---------------------------------------------------------------------------

class Subspace {
public:
    static Subspace zero(PrimeField f, size_t ambient);
    static Subspace full(PrimeField f, size_t ambient);
    // Rows of `vectors` span the subspace; the stored basis is their RREF.
    static Subspace span_rows(const Mat& vectors);

    size_t dim() const { return basis_.rows(); }
    size_t ambient() const { return ambient_; }
    const Mat& basis() const { return basis_; }
    const PrimeField& field() const { return field_; }

    bool contains_row(const Mat& v) const;  // v: 1 x ambient
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

private:
    Subspace(PrimeField f, size_t ambient, Mat rref_basis)
        : field_(f), ambient_(ambient), basis_(std::move(rref_basis)) {}

    PrimeField field_;
    size_t ambient_ = 0;
    Mat basis_;
};

// Null space {v : m·v = 0}, returned with its canonical RREF basis
// (basis vectors are the rows).
Subspace kernel(const Mat& m);

// Basis of {X : X·A_t = B_t·X for all t}, i.e. of the intertwiner space of
// the operator pairs. Each returned matrix has shape (B rows) x (A rows).
// Ordering is derived from the RREF of the stacked equivariance system and
// is therefore deterministic.
std::vector<Mat> intertwiner_basis(PrimeField f, size_t src_dim, size_t dst_dim,
                                   const std::vector<std::pair<Mat, Mat>>& ops);

}  // namespace comack::gf
