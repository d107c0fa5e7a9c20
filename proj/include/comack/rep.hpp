#pragma once

// kG-modules as explicit matrix representations over GF(p).
//
// A Representation stores one invertible action matrix per group generator;
// actions of arbitrary elements are derived through the group's BFS word
// table and memoized. All maps between modules are checked for equivariance.
// The p-group-local operations (radical, socle, projective cover, injective
// hull) rely on kP being a local symmetric algebra: the radical is the
// augmentation-ideal image, the socle is the fixed space, covers and hulls
// are free modules matched to top and socle dimensions.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "comack/gf.hpp"
#include "comack/groups.hpp"

namespace comack::rep {

struct ComponentTag {
    std::string label;
    size_t offset = 0;
    size_t dim = 0;
    // Index into the subgroup list the representation was built from, and the
    // subgroup's order; subgroup_order == 1 marks a regular (free rank one)
    // summand. -1 / 0 when not applicable.
    int subgroup_index = -1;
    size_t subgroup_order = 0;
};

class Representation;
using RepPtr = std::shared_ptr<const Representation>;

class Representation {
public:
    // Validates generator invertibility and all Cayley relations (by BFS
    // closure) unless the degree exceeds the validation threshold, in which
    // case callers are internal builders whose constructions are sound by
    // derivation and separately spot-checked.
    static RepPtr make(grp::GroupPtr group, gf::PrimeField field,
                       std::vector<gf::Mat> gen_action, std::vector<ComponentTag> tags = {},
                       bool validate = true);

    const grp::GroupPtr& group() const { return group_; }
    const gf::PrimeField& field() const { return field_; }
    size_t degree() const { return degree_; }
    const std::vector<gf::Mat>& gen_action() const { return gen_action_; }
    const std::vector<ComponentTag>& tags() const { return tags_; }

    // Memoized action of an arbitrary group element.
    const gf::Mat& element_action(grp::Elem g) const;

    bool is_p_group_module() const;  // |G| is a power of field.p (includes the trivial group)

private:
    Representation() = default;

    grp::GroupPtr group_;
    gf::PrimeField field_;
    size_t degree_ = 0;
    std::vector<gf::Mat> gen_action_;
    std::vector<ComponentTag> tags_;

    mutable std::mutex memo_mutex_;
    mutable std::vector<std::unique_ptr<gf::Mat>> memo_;
};

// ---------------------------------------------------------------------------
// Module builders
// ---------------------------------------------------------------------------

RepPtr trivial_module(const grp::GroupPtr& g, gf::PrimeField f);
RepPtr regular_module(const grp::GroupPtr& g, gf::PrimeField f);

// Permutation module k[G/Q]: basis the left cosets in canonical order,
// action by translation.
RepPtr perm_module(const grp::GroupPtr& g, const grp::Subgroup& q, gf::PrimeField f);

// Free module of the given rank, tagged one regular component per copy.
RepPtr free_module(const grp::GroupPtr& g, gf::PrimeField f, size_t rank);

RepPtr direct_sum(const std::vector<RepPtr>& parts);

// Same action matrices, different component tags (which must tile the degree
// and respect the block-diagonal structure).
RepPtr retag(const RepPtr& m, std::vector<ComponentTag> tags);

// Contragredient module: g acts by transpose(action(g)^{-1}).
RepPtr dual(const RepPtr& m);

RepPtr zero_module(const grp::GroupPtr& g, gf::PrimeField f);

// ---------------------------------------------------------------------------
// Module maps
// ---------------------------------------------------------------------------

struct ModuleMap {
    RepPtr source, target;
    gf::Mat matrix;  // target.degree x source.degree

    // verifies equivariance against every generator
    static ModuleMap make(RepPtr source, RepPtr target, gf::Mat matrix);
    bool is_equivariant() const;
    ModuleMap then(const ModuleMap& next) const;  // next ∘ this
};

ModuleMap dual_map(const ModuleMap& f);

struct ExactnessJunction {
    size_t image_rank = 0;
    size_t kernel_dim = 0;
    bool exact = false;
};

// A composable chain f_1, f_2, ... with exactness image(f_i) = kernel(f_{i+1})
// verified at every interior junction.
struct ExactSequenceWitness {
    std::vector<ModuleMap> maps;
    std::vector<ExactnessJunction> junctions;
    bool exact = false;

    static ExactSequenceWitness check(std::vector<ModuleMap> maps);
};

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

// Basis of Hom_kG(m, n) in deterministic order. When both modules carry
// component tags the computation is done block by block (a big speedup for
// sums of permutation modules) with the same ordering guarantees.
std::vector<gf::Mat> hom_space(const RepPtr& m, const RepPtr& n);
size_t hom_dim(const RepPtr& m, const RepPtr& n);

// Precomputed Hom_kG(v, w) with per-block solvers for expressing maps in the
// basis. Blocks are indexed (source component, target component).
class HomSpace {
public:
    HomSpace(RepPtr v, RepPtr w);

    size_t dim() const { return dim_; }
    const RepPtr& source() const { return v_; }
    const RepPtr& target() const { return w_; }
    // Global basis matrices, materialized lazily on first use.
    const std::vector<gf::Mat>& basis() const;
    size_t block_count_src() const { return src_tags_.size(); }
    size_t block_count_dst() const { return dst_tags_.size(); }
    // (src block, dst block) -> [offset, offset+dim) within the basis
    std::pair<size_t, size_t> block_range(size_t src_blk, size_t dst_blk) const;

    // Coordinates of an equivariant map in the basis; Internal error if the
    // map is not in the span (it always is for equivariant maps).
    std::vector<uint32_t> express(const gf::Mat& map) const;
    gf::Mat materialize(const std::vector<uint32_t>& coords) const;

private:
    RepPtr v_, w_;
    std::vector<ComponentTag> src_tags_, dst_tags_;
    size_t dim_ = 0;
    mutable std::vector<gf::Mat> basis_;
    struct Block {
        size_t offset = 0, dim = 0;
        std::vector<gf::Mat> local;          // maps dst_tag.dim x src_tag.dim
        std::unique_ptr<gf::Solver> solver;  // flattened local basis
    };
    std::vector<Block> blocks_;  // src_blk * dst_count + dst_blk
};

// ---------------------------------------------------------------------------
// p-group-local structure
// ---------------------------------------------------------------------------

// rad(m) = sum of the images of (action(g) - 1) over the generators; equals
// rad(kP)·m for p-groups. Throws Usage for non-p-groups.
gf::Subspace radical_submodule(const RepPtr& m);

// soc(m) = common fixed space of the generators; the largest semisimple
// submodule for p-groups.
gf::Subspace socle(const RepPtr& m);

// Projective cover kP^t ->> m with t = dim(m / rad m); the map sends the free
// generators to lifts of a top basis. Returned as the covering ModuleMap.
ModuleMap projective_cover(const RepPtr& m);

// Injective hull m ^-> kP^s with s = dim soc(m), via duality with the
// projective cover of the dual module.
ModuleMap injective_hull(const RepPtr& m);

// Submodule spanned by the rows of `space`, as a representation on its own
// basis together with the inclusion map.
std::pair<RepPtr, ModuleMap> submodule_rep(const RepPtr& m, const gf::Subspace& space);

// Quotient m / space with the projection map.
std::pair<RepPtr, ModuleMap> quotient_rep(const RepPtr& m, const gf::Subspace& space);

// First syzygy: kernel of the projective cover (p-groups).
RepPtr syzygy(const RepPtr& m);

// ---------------------------------------------------------------------------
// Restriction decomposition
// ---------------------------------------------------------------------------

struct RestrictionDecomposition {
    std::vector<grp::Subgroup> stabilizers;  // one per orbit, subgroups of the parent
    bool isomorphism_verified = false;       // permutation iso Res ≅ ⊕ k[P/stab] checked
};

// Orbit decomposition of Res^G_P k[G/Q] into P-permutation modules: returns
// the orbit stabilizers and verifies the explicit permutation isomorphism.
RestrictionDecomposition decompose_permutation_restriction(const grp::GroupPtr& g,
                                                           const grp::Subgroup& p_sub,
                                                           const grp::Subgroup& q,
                                                           gf::PrimeField f);

}  // namespace comack::rep
