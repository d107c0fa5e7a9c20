#pragma once

// The endomorphism algebra F = End_kP(V) of V = ⊕_{Q≤P} k[P/Q], realized by
// structure constants over GF(p), with its Peirce decomposition by the
// component projections e_Q.
//
// Composition convention, fixed once and enforced by the Peirce invariant:
// a basis element in block (Q, R) maps component Q into component R, and the
// algebra product a·b means "apply b, then a", i.e. the matrix product A·B
// on column vectors. Precomposition is therefore the natural right action of
// F on Hom(V, W).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "comack/ext.hpp"
#include "comack/rep.hpp"

namespace comack::endo {

// V (or U over kG) together with the subgroup list indexing its components.
struct ModuleWithSubgroups {
    rep::RepPtr module;
    std::vector<grp::Subgroup> subgroups;  // canonical all_subgroups order
};

// V = ⊕_{Q ≤ P} k[P/Q] over the p-group P itself.
ModuleWithSubgroups build_V(const grp::GroupPtr& p_group, gf::PrimeField f);

// U = ⊕_{Q ≤ P} k[G/Q] over kG, Q running over the subgroups of the given
// Sylow subgroup P ≤ G.
ModuleWithSubgroups build_U(const grp::GroupPtr& g, const grp::Subgroup& sylow,
                            gf::PrimeField f);

// ---------------------------------------------------------------------------
// Structure-constant algebras
// ---------------------------------------------------------------------------

struct StructureConstantAlgebra {
    gf::PrimeField field;
    size_t dim = 0;
    std::vector<std::string> labels;
    // mult[i*dim + j] = sparse coordinates of b_i · b_j
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> mult;
    std::vector<uint32_t> unit;

    std::vector<uint32_t> multiply(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) const;
    const std::vector<std::pair<uint32_t, uint32_t>>& basis_product(size_t i, size_t j) const {
        return mult[i * dim + j];
    }
};

// Group algebra kG as a structure-constant algebra (basis = group elements).
StructureConstantAlgebra group_algebra(const grp::GroupPtr& g, gf::PrimeField f);

struct PeirceData {
    // e_Q as algebra coordinates, one per subgroup, in subgroup order
    std::vector<std::vector<uint32_t>> idempotents;
    // basis index -> (source component Q, target component R)
    std::vector<std::pair<uint32_t, uint32_t>> block_of;
};

struct ValidationReport {
    bool pass = true;
    std::string first_failure;
};

// Exhaustive validation: associativity on all basis triples (organized by
// composable blocks; incomposable products vanish identically), two-sided
// unit, idempotent orthogonality and completeness, Peirce block
// compatibility e_R · b · e_Q = b.
ValidationReport validate_algebra(const StructureConstantAlgebra& a, const PeirceData& peirce);

// F = End(V) with everything the pipelines need: the hom-space context, the
// basis endomorphisms as full matrices, structure constants and Peirce data.
struct EndAlgebra {
    rep::RepPtr v;
    std::vector<grp::Subgroup> subgroups;
    std::shared_ptr<rep::HomSpace> hom;  // Hom(V, V); basis order = algebra basis order
    StructureConstantAlgebra algebra;
    PeirceData peirce;
    std::vector<size_t> hom_dims;    // per (Q, R) block, Q outer
    std::vector<gf::Mat> basis_mats;  // basis endomorphisms as full matrices
    size_t block_dim(size_t q, size_t r) const {
        return hom_dims[q * subgroups.size() + r];
    }
    const gf::Mat& basis_matrix(size_t i) const { return basis_mats[i]; }
};

// Structure constants are computed from full-matrix composition of the
// embedded endomorphisms, then re-expressed in the basis; the construction
// validates the algebra exhaustively and throws Internal on any failure.
EndAlgebra end_algebra(const ModuleWithSubgroups& v);

// Text dump of the structure constants: field, dim, labels, nonzero
// constants as (i, j, k, value) quadruples.
std::string algebra_dump(const StructureConstantAlgebra& a);

// ---------------------------------------------------------------------------
// Hom(V, W) as a right F-module
// ---------------------------------------------------------------------------

struct RightModule {
    std::shared_ptr<rep::HomSpace> hom;  // Hom(V, W); coordinates index the module
    size_t dim = 0;
    // Explicit action matrix of the algebra basis element f_idx
    // (precomposition with f_idx), dim x dim.
    std::vector<gf::Mat> action;
};

// The right action of End(v) on Hom(v, w) by precomposition, with explicit
// matrices per algebra basis element.
RightModule hom_as_right_module(const EndAlgebra& f, const rep::RepPtr& w);

}  // namespace comack::endo
