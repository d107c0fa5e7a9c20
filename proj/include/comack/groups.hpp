#pragma once

// Finite groups given by explicit Cayley tables, capped at a configurable
// order bound (default 64). Every structural claim — associativity, Latin
// square, inverses, generation — is verified exhaustively at construction;
// at this scale brute force beats cleverness. Element, subgroup and coset
// orderings are canonical everywhere so that all bases built downstream are
// reproducible.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "comack/error.hpp"

namespace comack::grp {

inline constexpr size_t kDefaultOrderBound = 64;

using Elem = uint16_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    // Validates the table exhaustively; throws Usage errors on any defect.
    static GroupPtr from_cayley(std::vector<Elem> cayley, size_t order, Elem identity,
                                std::vector<Elem> generators,
                                std::vector<std::string> labels = {});

    size_t order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return cayley_[size_t(a) * order_ + b]; }
    Elem inverse(Elem a) const { return inverse_[a]; }
    const std::vector<Elem>& generators() const { return generators_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Elem a) const;

    // BFS factorization g = generator(bfs_gen[g]) * bfs_prev[g]; identity has
    // bfs_gen = -1. Representations use it to derive element actions from
    // generator actions.
    int bfs_gen(Elem g) const { return bfs_gen_[g]; }
    Elem bfs_prev(Elem g) const { return bfs_prev_[g]; }

    bool is_abelian() const;
    // Order of the element (smallest n > 0 with a^n = e).
    size_t element_order(Elem a) const;

private:
    FiniteGroup() = default;

    size_t order_ = 0;
    std::vector<Elem> cayley_;
    Elem identity_ = 0;
    std::vector<Elem> inverse_;
    std::vector<Elem> generators_;
    std::vector<std::string> labels_;
    std::vector<int> bfs_gen_;
    std::vector<Elem> bfs_prev_;
};

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

class Subgroup {
public:
    // elements must be sorted; closure / identity / Lagrange are verified.
    Subgroup(GroupPtr parent, std::vector<Elem> elements);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<Elem>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }
    bool contains(Elem e) const;
    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    GroupPtr parent_;
    std::vector<Elem> elements_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_subgroup(const GroupPtr& g);

// Subgroup generated by the given elements.
Subgroup generated_subgroup(const GroupPtr& g, std::vector<Elem> seed);

// All subgroups, each exactly once, sorted by (order, element set).
// Built from cyclic seeds closed under pairwise joins.
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    size_t order_bound = kDefaultOrderBound);

// A Sylow p-subgroup: deterministically the least (in the all_subgroups sort
// order) subgroup of maximal p-power order. The trivial subgroup if p ∤ |g|.
Subgroup sylow_subgroup(const GroupPtr& g, uint32_t p);

// The subgroup as a standalone group: elements relabelled 0..m-1 in sorted
// order, generators recomputed greedily (irredundant, deterministic).
struct SubgroupGroup {
    GroupPtr group;
    std::vector<Elem> to_parent;  // new index -> parent element
};
SubgroupGroup subgroup_as_group(const Subgroup& sub);

// ---------------------------------------------------------------------------
// Cosets, double cosets, orbits
// ---------------------------------------------------------------------------

struct CosetDecomposition {
    Subgroup subgroup;
    std::vector<Elem> reps;      // canonical representative (least element) per coset
    std::vector<Elem> coset_of;  // element -> coset index
    size_t count() const { return reps.size(); }
};

// Left cosets g·Q in canonical order (cosets numbered by least representative).
CosetDecomposition left_cosets(const Subgroup& q);

struct DoubleCosets {
    size_t count = 0;
    std::vector<Elem> reps;      // least representative per class
    std::vector<Elem> class_of;  // element -> class index
};

// (q, r) double cosets QgR of the common parent group.
DoubleCosets double_cosets(const Subgroup& q, const Subgroup& r);

struct CosetOrbit {
    std::vector<Elem> coset_indices;  // sorted
    Subgroup stabilizer;              // stabilizer of the least coset, as a subgroup of the parent
};

// Orbits of `sub` acting by left translation on the cosets of `cosets`,
// ordered by least coset index, each with the stabilizer of its
// representative coset.
std::vector<CosetOrbit> orbits_on_cosets(const Subgroup& sub,
                                         const CosetDecomposition& cosets);

// ---------------------------------------------------------------------------
// Group builders
// ---------------------------------------------------------------------------

GroupPtr cyclic_group(size_t m);
GroupPtr elementary_abelian_group(uint32_t p, uint32_t r,
                                  size_t order_bound = kDefaultOrderBound);
// Dihedral group OF ORDER m (m even): dihedral_group(8) is D_8 with 8
// elements, dihedral_group(4) the Klein four group.
GroupPtr dihedral_group(size_t m);
GroupPtr quaternion_group_8();
GroupPtr symmetric_group_3();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        size_t order_bound = kDefaultOrderBound);

// Permutations as image vectors on 0-based points.
using Perm = std::vector<uint8_t>;

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". "()" is the
// identity. Points up to 64.
Perm parse_cycles(const std::string& text);

GroupPtr permutation_group(const std::vector<Perm>& generators,
                           size_t order_bound = kDefaultOrderBound);

// Group spec grammar used by the CLI and the C API:
//   cyclic:N | elemab:p:r | dihedral:N | quaternion:8 | sym:3
//   | product:<spec>,<spec> | perm:"<cycles>[;<cycles>...]"
GroupPtr parse_group_spec(const std::string& spec,
                          size_t order_bound = kDefaultOrderBound);

}  // namespace comack::grp
