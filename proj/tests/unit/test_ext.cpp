#include <doctest.h>

#include "comack/endo.hpp"
#include "comack/ext.hpp"

using namespace comack;
using gf::PrimeField;
using grp::GroupPtr;
using rep::RepPtr;

namespace {

const PrimeField f2(2);
const PrimeField f3(3);

// smallest size of a generating set, by exhaustive search over subsets
size_t minimal_generator_count(const GroupPtr& g) {
    const size_t n = g->order();
    if (n == 1) return 0;
    std::vector<grp::Elem> elems;
    for (grp::Elem e = 0; e < n; ++e)
        if (e != g->identity()) elems.push_back(e);
    for (size_t size = 1; size <= elems.size(); ++size) {
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<grp::Elem> seed;
            for (size_t i : idx) seed.push_back(elems[i]);
            std::sort(seed.begin(), seed.end());
            if (grp::generated_subgroup(g, seed).order() == n) return size;
            // next combination
            size_t k = size;
            while (k > 0 && idx[k - 1] == elems.size() - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return elems.size();
}

}  // namespace

TEST_CASE("Ext vanishes on projective first arguments") {
    for (const GroupPtr& g : {grp::cyclic_group(2), grp::elementary_abelian_group(2, 2),
                              grp::quaternion_group_8()}) {
        RepPtr reg = rep::regular_module(g, f2);
        RepPtr k = rep::trivial_module(g, f2);
        for (size_t i = 1; i <= 2; ++i) {
            CHECK(rep::ext_dim(reg, k, i) == 0);
            CHECK(rep::ext_dim(reg, reg, i) == 0);
        }
    }
}

TEST_CASE("dim Ext^1(k,k) equals the minimal generator count of P") {
    auto check = [](const GroupPtr& g, uint32_t p, size_t expected) {
        PrimeField f(p);
        RepPtr k = rep::trivial_module(g, f);
        size_t d = rep::ext_dim(k, k, 1);
        CHECK(d == expected);
        CHECK(d == minimal_generator_count(g));
    };
    check(grp::cyclic_group(2), 2, 1);
    check(grp::cyclic_group(4), 2, 1);
    check(grp::cyclic_group(8), 2, 1);
    check(grp::cyclic_group(9), 3, 1);
    check(grp::elementary_abelian_group(2, 2), 2, 2);
    check(grp::quaternion_group_8(), 2, 2);
    check(grp::dihedral_group(8), 2, 2);
    check(grp::elementary_abelian_group(3, 2), 3, 2);
    check(grp::elementary_abelian_group(2, 3), 2, 3);
}

TEST_CASE("Ext over semisimple group algebras vanishes") {
    GroupPtr c3 = grp::cyclic_group(3);
    RepPtr k = rep::trivial_module(c3, f2);
    CHECK(rep::algebra_is_semisimple(c3, f2));
    CHECK(rep::ext_dim(k, k, 1) == 0);
    CHECK(rep::ext_dim(k, k, 2) == 0);
}

TEST_CASE("Ext^1(V,V) is nonzero for nontrivial p-groups") {
    auto check = [](const GroupPtr& g, uint32_t p) {
        PrimeField f(p);
        endo::ModuleWithSubgroups v = endo::build_V(g, f);
        CHECK(rep::ext_dim(v.module, v.module, 1) > 0);
    };
    check(grp::cyclic_group(2), 2);
    check(grp::cyclic_group(3), 3);
    check(grp::cyclic_group(4), 2);
    check(grp::elementary_abelian_group(2, 2), 2);
}

TEST_CASE("two-path consistency: minimal vs generic resolutions") {
    // (k, k) for p-groups of order <= 8
    for (auto [g, p] : std::vector<std::pair<GroupPtr, uint32_t>>{
             {grp::cyclic_group(2), 2},
             {grp::cyclic_group(3), 3},
             {grp::cyclic_group(4), 2},
             {grp::elementary_abelian_group(2, 2), 2},
             {grp::cyclic_group(5), 5}}) {
        PrimeField f(p);
        RepPtr k = rep::trivial_module(g, f);
        for (size_t i = 1; i <= 2; ++i)
            CHECK(rep::ext_dim_minimal(k, k, i) == rep::ext_dim_generic(k, k, i));
        // and (V, V) where the generic path stays small
        endo::ModuleWithSubgroups v = endo::build_V(g, f);
        for (size_t i = 1; i <= 2; ++i)
            CHECK(rep::ext_dim_minimal(v.module, v.module, i) ==
                  rep::ext_dim_generic(v.module, v.module, i));
    }
}

TEST_CASE("dimension shift: Ext^i(m,n) = Ext^(i-1)(syzygy m, n)") {
    for (const GroupPtr& g :
         {grp::cyclic_group(2), grp::cyclic_group(4), grp::elementary_abelian_group(2, 2)}) {
        RepPtr k = rep::trivial_module(g, f2);
        endo::ModuleWithSubgroups v = endo::build_V(g, f2);
        RepPtr om_k = rep::syzygy(k);
        CHECK(rep::ext_dim(k, k, 2) == rep::ext_dim(om_k, k, 1));
        RepPtr om_v = rep::syzygy(v.module);
        CHECK(rep::ext_dim(v.module, v.module, 2) == rep::ext_dim(om_v, v.module, 1));
    }
}

TEST_CASE("resolution term ceiling raises a resource error") {
    GroupPtr c4 = grp::cyclic_group(4);
    RepPtr k = rep::trivial_module(c4, f2);
    rep::ExtOptions tiny;
    tiny.term_ceiling = 2;
    CHECK_THROWS_AS(rep::ext_dim_minimal(k, k, 1, tiny), Error);
    try {
        rep::ext_dim_generic(k, k, 1, tiny);
        FAIL("expected resource error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Resource);
    }
}

TEST_CASE("ext_table truncation at the first nonzero entry") {
    GroupPtr c2 = grp::cyclic_group(2);
    RepPtr k = rep::trivial_module(c2, f2);
    auto full = rep::ext_table(k, k, 3);
    CHECK(full == std::vector<size_t>{1, 1, 1});
    auto stopped = rep::ext_table(k, k, 3, {}, /*stop_at_first_nonzero=*/true);
    CHECK(stopped == std::vector<size_t>{1});
}
