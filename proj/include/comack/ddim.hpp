#pragma once

// Dominant-dimension calculators and verifiers.
//
// The workhorse is Müller's criterion: for a generator-cogenerator v over a
// symmetric algebra, ddim End(v) = 2 + max{n : Ext^i(v,v) = 0 for 1 <= i <= n}.
// The lower bound ddim >= 2 is witnessed explicitly by the exact sequence
// 0 -> F -> Hom(V, I^0) -> Hom(V, I^1) obtained from a coresolution of V by
// free modules, with the Hom terms verified to be projective right F-modules
// by exhibiting a splitting into a free module. Tiny algebras additionally
// get an independent brute-force oracle that implements the injective-
// resolution definition literally by exhaustive submodule enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comack/endo.hpp"

namespace comack::ddim {

// ---------------------------------------------------------------------------
// DdimValue
// ---------------------------------------------------------------------------

struct DdimValue {
    enum class Kind { Exact, AtLeast, Infinite };
    Kind kind = Kind::Exact;
    size_t value = 0;  // meaningful for Exact / AtLeast

    static DdimValue exact(size_t v) { return {Kind::Exact, v}; }
    static DdimValue at_least(size_t v) { return {Kind::AtLeast, v}; }
    static DdimValue infinite() { return {Kind::Infinite, 0}; }
    bool operator==(const DdimValue& o) const {
        return kind == o.kind && (kind == Kind::Infinite || value == o.value);
    }
    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Müller criterion
// ---------------------------------------------------------------------------

// ddim End(v) from the Ext table of v. Preconditions: v carries component
// tags including a regular summand (generator; cogenerator follows because
// group algebras are symmetric). Semisimple group algebras give Infinite.
DdimValue ddim_mueller(const rep::RepPtr& v, size_t cutoff,
                       const rep::ExtOptions& opts = {});

// The same value computed from an already-known table of dims of
// Ext^1..Ext^k (k <= cutoff, possibly truncated at the first nonzero).
DdimValue ddim_from_ext_table(const std::vector<size_t>& table, size_t cutoff);

// ---------------------------------------------------------------------------
// Lower-bound witness
// ---------------------------------------------------------------------------

struct LowerBoundWitness {
    rep::ExactSequenceWitness module_sequence;  // 0 -> V -> I^0 -> I^1 over kP
    size_t dim_f = 0, dim_j0 = 0, dim_j1 = 0;   // ranks of 0 -> F -> J^0 -> J^1
    bool exact_at_f = false;
    bool exact_at_j0 = false;
    bool j0_projective = false;  // splitting into a free right F-module verified
    bool j1_projective = false;
    bool ok() const {
        return module_sequence.exact && exact_at_f && exact_at_j0 && j0_projective &&
               j1_projective;
    }
};

// Builds I^0 = E(V), I^1 = E(I^0/V) (free kP-modules), applies Hom(V, -) and
// verifies exactness of 0 -> F -> J^0 -> J^1 plus projectivity of both J
// terms. Requires a p-group.
LowerBoundWitness verify_lower_bound_witness(const endo::EndAlgebra& f);

// ---------------------------------------------------------------------------
// Brute-force oracle for tiny algebras
// ---------------------------------------------------------------------------

// Literal injective-resolution computation over the regular right module of
// a: all submodules by exhaustive subspace enumeration, injective hulls by
// exhaustive essential-extension search inside a power of the dual regular
// module, projectivity by split surjections from free modules. Requires
// dim a <= 6 and p = 2. Builds I^0..I^2 and reports AtLeast(3) if undecided.
DdimValue brute_ddim_small(const endo::StructureConstantAlgebra& a);

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string group_spec;
    uint32_t p = 2;
    size_t ext_cutoff = 3;
    size_t order_bound = grp::kDefaultOrderBound;
    size_t term_ceiling = 5000;
    bool check_double_cosets = false;
    bool check_theorem2 = false;
    bool check_remark = false;
    bool check_oracle = false;
    bool emit_timing = false;
};

enum class CheckStatus { NotRun, Pass, Fail };
std::string to_string(CheckStatus s);

struct HomTableEntry {
    size_t q = 0, r = 0;
    size_t dim = 0;            // dim Hom(k[P/Q], k[P/R])
    size_t double_cosets = 0;  // |Q\P/R|
};

struct Theorem2Report {
    CheckStatus status = CheckStatus::NotRun;
    DdimValue ddim_group;  // End_kG(U)
    DdimValue ddim_sylow;  // End_kP(V)
    bool induction_in_add_u = false;    // kG ⊗_kP k[P/Q] ≅ k[G/Q], by construction
    bool restriction_in_add_v = false;  // Res^G_P k[G/Q] decomposes into k[P/S]
    size_t stabilizers_checked = 0;
};

struct RemarkReport {
    CheckStatus status = CheckStatus::NotRun;
    size_t ext1_group = 0;  // dim Ext^1_kG(U, U)
    size_t ext1_sylow = 0;  // dim Ext^1_kP(k, k)
};

struct OracleReport {
    CheckStatus status = CheckStatus::NotRun;
    DdimValue brute;
    DdimValue mueller;
};

struct DoubleCosetCheck {
    CheckStatus status = CheckStatus::NotRun;
    size_t pairs_checked = 0;
};

struct DdimReport {
    std::string group_spec;
    size_t group_order = 0;
    size_t sylow_order = 0;
    uint32_t p = 2;
    std::string scope;  // "p-group" | "single-block" | "whole-group-algebra"
    bool trivial_defect = false;

    size_t subgroup_count = 0;
    size_t dim_v = 0;
    size_t dim_f = 0;
    std::vector<HomTableEntry> hom_dims;
    std::vector<size_t> ext;  // dim Ext^i(V,V), i = 1..(entries)
    DdimValue ddim;

    bool witness_present = false;
    size_t witness_dim_f = 0, witness_dim_j0 = 0, witness_dim_j1 = 0;
    bool witness_ok = false;

    DoubleCosetCheck check_double_cosets;
    Theorem2Report check_theorem2;
    RemarkReport check_remark;
    OracleReport check_oracle;

    std::string algebra_dump;  // structure-constant dump of F
    int64_t timing_ms = 0;
    bool emit_timing = false;

    bool verified = false;  // every computed claim matched its expectation
};

// Full pipeline: Sylow subgroup, subgroup lattice, V over kP, F = End(V),
// Ext table, Müller value, lower-bound witness, optional extra checks.
DdimReport comack_ddim(const RunConfig& config);

// Theorem-2 instance over (kG, kP): verifies the add-category hypotheses and
// compares ddim End_kG(U) with ddim End_kP(V). Requires p | |g|.
Theorem2Report verify_theorem2_instance(const grp::GroupPtr& g, uint32_t p,
                                        size_t cutoff = 3,
                                        const rep::ExtOptions& opts = {});

// Remark check: dim Ext^1_kG(U,U) >= dim Ext^1_kP(k,k) >= 1.
RemarkReport remark_check(const grp::GroupPtr& g, uint32_t p,
                          const rep::ExtOptions& opts = {});

}  // namespace comack::ddim
