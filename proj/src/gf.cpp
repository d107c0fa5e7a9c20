#include "comack/gf.hpp"

#include <algorithm>
#include <sstream>

namespace comack::gf {

// ---------------------------------------------------------------------------
// PrimeField
// ---------------------------------------------------------------------------

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t prime) : p(prime) {
    if (!is_prime(prime)) usage_error("PrimeField: " + std::to_string(prime) + " is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const {
    a %= p;
    if (a == 0) internal_error("PrimeField::inv of zero");
    // Fermat: a^(p-2) mod p
    uint64_t base = a, acc = 1;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

Mat Mat::identity(PrimeField f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) usage_error("Mat::from_rows: ragged rows");
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % f.p;
    }
    return m;
}

bool Mat::is_zero() const {
    for (uint32_t v : a_)
        if (v != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::mul(const Mat& rhs) const {
    if (field_ != rhs.field_) usage_error("Mat::mul: field mismatch");
    if (cols_ != rhs.rows_)
        usage_error("Mat::mul: dimension mismatch " + std::to_string(cols_) + " vs " +
                    std::to_string(rhs.rows_));
    Mat out(field_, rows_, rhs.cols_);
    const uint32_t p = field_.p;
    for (size_t i = 0; i < rows_; ++i) {
        const uint32_t* ai = row(i);
        uint32_t* oi = out.row(i);
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t v = ai[k];
            if (v == 0) continue;
            const uint32_t* bk = rhs.row(k);
            // accumulate unreduced; reduce per chunk to stay in 64 bits
            for (size_t j = 0; j < rhs.cols_; ++j)
                oi[j] = static_cast<uint32_t>((uint64_t(oi[j]) + uint64_t(v) * bk[j]) % p);
        }
    }
    return out;
}

Mat Mat::add(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        usage_error("Mat::add: shape/field mismatch");
    Mat out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], rhs.a_[i]);
    return out;
}

Mat Mat::sub(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        usage_error("Mat::sub: shape/field mismatch");
    Mat out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
    return out;
}

Mat Mat::scale(uint32_t c) const {
    Mat out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], c);
    return out;
}

Mat Mat::submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) internal_error("Mat::submatrix out of range");
    Mat out(field_, nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Mat::paste(size_t r0, size_t c0, const Mat& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        internal_error("Mat::paste out of range");
    for (size_t i = 0; i < block.rows(); ++i)
        for (size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

Mat Mat::vstack(const Mat& below) const {
    if (cols_ != below.cols_ || field_ != below.field_) usage_error("Mat::vstack mismatch");
    Mat out(field_, rows_ + below.rows_, cols_);
    out.paste(0, 0, *this);
    out.paste(rows_, 0, below);
    return out;
}

Mat Mat::hstack(const Mat& right) const {
    if (rows_ != right.rows_ || field_ != right.field_) usage_error("Mat::hstack mismatch");
    Mat out(field_, rows_, cols_ + right.cols_);
    out.paste(0, 0, *this);
    out.paste(0, cols_, right);
    return out;
}

Mat Mat::flatten_column() const {
    Mat out(field_, rows_ * cols_, 1);
    for (size_t i = 0; i < rows_ * cols_; ++i) out(i, 0) = a_[i];
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) usage_error("kron: field mismatch");
    Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            uint32_t v = a(i, j);
            if (v == 0) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a.field().mul(v, b(k, l));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination engines
// ---------------------------------------------------------------------------
//
// Two interchangeable engines compute the same unique RREF with identical
// (first-nonzero) pivoting: a bit-packed XOR engine for GF(2) and a dense
// word engine with lazily reduced accumulators for odd p. The odd-p engine
// keeps rows unreduced between pivot steps; the accumulated magnitude is
// bounded by axpy counting so a row is folded back mod p only when needed.

namespace {

struct ElimOut {
    std::vector<size_t> pivots;
};

// data: rows x total_cols, row-major; pivots searched in [0, main_cols).
ElimOut eliminate_gf2(size_t rows, size_t main_cols, size_t total_cols,
                      std::vector<uint32_t>& data) {
    const size_t words = (total_cols + 63) / 64;
    std::vector<uint64_t> packed(rows * words, 0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < total_cols; ++j)
            if (data[i * total_cols + j] & 1u)
                packed[i * words + (j >> 6)] |= uint64_t(1) << (j & 63);

    ElimOut out;
    size_t r = 0;
    for (size_t c = 0; c < main_cols && r < rows; ++c) {
        const size_t w = c >> 6;
        const uint64_t bit = uint64_t(1) << (c & 63);
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (packed[i * words + w] & bit) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (size_t k = 0; k < words; ++k)
                std::swap(packed[piv * words + k], packed[r * words + k]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            if (packed[i * words + w] & bit) {
                uint64_t* ri = &packed[i * words];
                const uint64_t* rr = &packed[r * words];
                for (size_t k = w; k < words; ++k) ri[k] ^= rr[k];
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < total_cols; ++j)
            data[i * total_cols + j] =
                (packed[i * words + (j >> 6)] >> (j & 63)) & 1u;
    return out;
}

ElimOut eliminate_dense(PrimeField f, size_t rows, size_t main_cols, size_t total_cols,
                        std::vector<uint32_t>& data) {
    const uint32_t p = f.p;
    const uint64_t step = uint64_t(p - 1) * (p - 1);
    const uint64_t cap = step == 0 ? ~uint64_t(0) : (uint64_t(0xFFFFFFFFu) - p) / step;
    std::vector<uint32_t> ops(rows, 0);  // axpys since last reduction, per row

    auto reduce_row = [&](size_t i) {
        uint32_t* ri = &data[i * total_cols];
        for (size_t j = 0; j < total_cols; ++j) ri[j] %= p;
        ops[i] = 0;
    };

    ElimOut out;
    size_t r = 0;
    for (size_t c = 0; c < main_cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (data[i * total_cols + c] % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r) {
            for (size_t j = 0; j < total_cols; ++j)
                std::swap(data[piv * total_cols + j], data[r * total_cols + j]);
            std::swap(ops[piv], ops[r]);
        }
        reduce_row(r);
        uint32_t lead = data[r * total_cols + c];
        if (lead != 1) {
            uint32_t il = f.inv(lead);
            uint32_t* rr = &data[r * total_cols];
            for (size_t j = c; j < total_cols; ++j) rr[j] = f.mul(rr[j], il);
        }
        const uint32_t* rr = &data[r * total_cols];
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t v = data[i * total_cols + c] % p;
            if (v == 0) continue;
            if (ops[i] >= cap) reduce_row(i);
            uint32_t fmul = p - v;
            uint32_t* ri = &data[i * total_cols];
            for (size_t j = c; j < total_cols; ++j) ri[j] += fmul * rr[j];
            ++ops[i];
        }
        out.pivots.push_back(c);
        ++r;
    }
    for (size_t i = 0; i < rows; ++i) reduce_row(i);
    return out;
}

ElimOut eliminate(PrimeField f, size_t rows, size_t main_cols, size_t total_cols,
                  std::vector<uint32_t>& data) {
    if (f.p == 2) return eliminate_gf2(rows, main_cols, total_cols, data);
    return eliminate_dense(f, rows, main_cols, total_cols, data);
}

std::vector<uint32_t> copy_entries(const Mat& m) {
    std::vector<uint32_t> data(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) data[i * m.cols() + j] = m(i, j);
    return data;
}

}  // namespace

RrefResult rref(const Mat& m) {
    std::vector<uint32_t> data = copy_entries(m);
    ElimOut e = eliminate(m.field(), m.rows(), m.cols(), m.cols(), data);
    RrefResult res{Mat(m.field(), m.rows(), m.cols()), e.pivots.size(), e.pivots};
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) res.r(i, j) = data[i * m.cols() + j];
    return res;
}

size_t rank(const Mat& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------
// Solver / solve
// ---------------------------------------------------------------------------

Solver::Solver(const Mat& a) : field_(a.field()), rows_(a.rows()), cols_(a.cols()) {
    const size_t total = cols_ + rows_;
    std::vector<uint32_t> data(rows_ * total, 0);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) data[i * total + j] = a(i, j);
        data[i * total + cols_ + i] = 1;
    }
    ElimOut e = eliminate(field_, rows_, cols_, total, data);
    pivots_ = e.pivots;
    reduced_ = Mat(field_, rows_, cols_);
    transform_ = Mat(field_, rows_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) reduced_(i, j) = data[i * total + j];
        for (size_t j = 0; j < rows_; ++j) transform_(i, j) = data[i * total + cols_ + j];
    }
}

std::optional<Mat> Solver::solve(const Mat& b) const {
    if (b.rows() != rows_) usage_error("Solver::solve: right-hand side has wrong row count");
    if (b.field() != field_) usage_error("Solver::solve: field mismatch");
    Mat c = transform_.mul(b);
    const size_t rk = pivots_.size();
    for (size_t i = rk; i < rows_; ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            if (c(i, j) != 0) return std::nullopt;
    Mat x(field_, cols_, b.cols());
    for (size_t i = 0; i < rk; ++i)
        for (size_t j = 0; j < b.cols(); ++j) x(pivots_[i], j) = c(i, j);
    return x;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) usage_error("solve: a.rows != b.rows");
    return Solver(a).solve(b);
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::zero(PrimeField f, size_t ambient) {
    return Subspace(f, ambient, Mat(f, 0, ambient));
}

Subspace Subspace::full(PrimeField f, size_t ambient) {
    return Subspace(f, ambient, Mat::identity(f, ambient));
}

Subspace Subspace::span_rows(const Mat& vectors) {
    RrefResult r = rref(vectors);
    return Subspace(vectors.field(), vectors.cols(),
                    r.r.submatrix(0, 0, r.rank, vectors.cols()));
}

bool Subspace::contains_row(const Mat& v) const {
    if (v.rows() != 1 || v.cols() != ambient_) usage_error("Subspace::contains_row: bad shape");
    // reduce v against the RREF basis; pivot of row i = its leading column
    Mat w = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t c = 0;
        while (c < ambient_ && basis_(i, c) == 0) ++c;
        if (c == ambient_) continue;
        uint32_t coef = w(0, c);
        if (coef == 0) continue;
        for (size_t j = 0; j < ambient_; ++j)
            w(0, j) = field_.sub(w(0, j), field_.mul(coef, basis_(i, j)));
    }
    return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        usage_error("Subspace::contains: ambient mismatch");
    for (size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains_row(other.basis_.submatrix(i, 0, 1, ambient_))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        usage_error("Subspace::sum: ambient mismatch");
    return span_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        usage_error("Subspace::intersect: ambient mismatch");
    // Zassenhaus: rref of [U | U; W | 0]; rows with zero left half carry the
    // intersection in their right half.
    const size_t n = ambient_;
    Mat stacked(field_, dim() + other.dim(), 2 * n);
    stacked.paste(0, 0, basis_);
    stacked.paste(0, n, basis_);
    stacked.paste(dim(), 0, other.basis_);
    RrefResult r = rref(stacked);
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j)
            if (r.r(i, j) != 0) left_zero = false;
        if (left_zero) {
            std::vector<uint32_t> v(n);
            for (size_t j = 0; j < n; ++j) v[j] = r.r(i, n + j);
            rows.push_back(std::move(v));
        }
    }
    Mat basis = Mat::from_rows(field_, rows);
    if (rows.empty()) basis = Mat(field_, 0, n);
    return span_rows(basis);
}

Subspace kernel(const Mat& m) {
    RrefResult r = rref(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> rows;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint32_t> v(n, 0);
        v[j] = 1;
        for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = m.field().neg(r.r(i, j));
        rows.push_back(std::move(v));
    }
    Mat basis = rows.empty() ? Mat(m.field(), 0, n) : Mat::from_rows(m.field(), rows);
    return Subspace::span_rows(basis);
}

// ---------------------------------------------------------------------------
// Intertwiner spaces
// ---------------------------------------------------------------------------

std::vector<Mat> intertwiner_basis(PrimeField f, size_t src_dim, size_t dst_dim,
                                   const std::vector<std::pair<Mat, Mat>>& ops) {
    const size_t unknowns = src_dim * dst_dim;  // X is dst_dim x src_dim, row-major
    Mat sys(f, ops.size() * unknowns, unknowns);
    size_t r0 = 0;
    for (const auto& [a, b] : ops) {
        if (a.rows() != src_dim || a.cols() != src_dim || b.rows() != dst_dim ||
            b.cols() != dst_dim)
            usage_error("intertwiner_basis: operator shape mismatch");
        // constraint (i,j):  sum_k X[i][k] A[k][j] - sum_k B[i][k] X[k][j] = 0
        for (size_t i = 0; i < dst_dim; ++i)
            for (size_t j = 0; j < src_dim; ++j) {
                size_t row = r0 + i * src_dim + j;
                for (size_t k = 0; k < src_dim; ++k) {
                    uint32_t c = a(k, j);
                    if (c) sys(row, i * src_dim + k) = f.add(sys(row, i * src_dim + k), c);
                }
                for (size_t k = 0; k < dst_dim; ++k) {
                    uint32_t c = b(i, k);
                    if (c)
                        sys(row, k * src_dim + j) =
                            f.sub(sys(row, k * src_dim + j), c);
                }
            }
        r0 += unknowns;
    }
    Subspace null = kernel(sys);
    std::vector<Mat> basis;
    basis.reserve(null.dim());
    for (size_t i = 0; i < null.dim(); ++i) {
        Mat x(f, dst_dim, src_dim);
        for (size_t a2 = 0; a2 < dst_dim; ++a2)
            for (size_t b2 = 0; b2 < src_dim; ++b2)
                x(a2, b2) = null.basis()(i, a2 * src_dim + b2);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace comack::gf
