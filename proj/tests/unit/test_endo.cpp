#include <doctest.h>

#include "comack/endo.hpp"

using namespace comack;
using gf::PrimeField;
using grp::GroupPtr;

namespace {

const PrimeField f2(2);
const PrimeField f3(3);

size_t double_coset_sum(const GroupPtr& g) {
    auto subs = grp::all_subgroups(g);
    size_t total = 0;
    for (const auto& q : subs)
        for (const auto& r : subs) total += grp::double_cosets(q, r).count;
    return total;
}

}  // namespace

TEST_CASE("build_V: degrees and component tags") {
    endo::ModuleWithSubgroups triv = endo::build_V(grp::cyclic_group(1), f2);
    CHECK(triv.module->degree() == 1);
    CHECK(triv.subgroups.size() == 1);

    endo::ModuleWithSubgroups c2 = endo::build_V(grp::cyclic_group(2), f2);
    CHECK(c2.module->degree() == 3);  // 2 + 1
    REQUIRE(c2.module->tags().size() == 2);
    CHECK(c2.module->tags()[0].subgroup_order == 1);  // trivial subgroup first: regular summand
    CHECK(c2.module->tags()[0].dim == 2);

    endo::ModuleWithSubgroups klein = endo::build_V(grp::elementary_abelian_group(2, 2), f2);
    CHECK(klein.module->degree() == 11);
    CHECK(klein.subgroups.size() == 5);
}

TEST_CASE("end_algebra dimensions match the double-coset sums") {
    auto dim_f = [](const GroupPtr& g, PrimeField f) {
        return endo::end_algebra(endo::build_V(g, f)).algebra.dim;
    };
    CHECK(dim_f(grp::cyclic_group(1), f2) == 1);
    CHECK(dim_f(grp::cyclic_group(2), f2) == 5);
    CHECK(dim_f(grp::cyclic_group(3), f3) == 6);
    CHECK(dim_f(grp::elementary_abelian_group(2, 2), f2) == 37);
    for (const GroupPtr& g : {grp::cyclic_group(4), grp::quaternion_group_8()})
        CHECK(dim_f(g, f2) == double_coset_sum(g));
}

TEST_CASE("validate_algebra passes constructions and catches mutations") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    auto ok = endo::validate_algebra(f.algebra, f.peirce);
    CHECK(ok.pass);

    // unit = sum of the idempotents
    std::vector<uint32_t> sum(f.algebra.dim, 0);
    for (const auto& e : f.peirce.idempotents)
        for (size_t k = 0; k < sum.size(); ++k) sum[k] = f.algebra.field.add(sum[k], e[k]);
    CHECK(sum == f.algebra.unit);

    // negative control: corrupt one structure constant
    endo::StructureConstantAlgebra bad = f.algebra;
    bool mutated = false;
    for (size_t i = 0; i < bad.dim * bad.dim && !mutated; ++i)
        if (!bad.mult[i].empty()) {
            bad.mult[i][0].second = bad.field.add(bad.mult[i][0].second, 1);
            if (bad.mult[i][0].second == 0) bad.mult[i].erase(bad.mult[i].begin());
            mutated = true;
        }
    REQUIRE(mutated);
    auto res = endo::validate_algebra(bad, f.peirce);
    CHECK_FALSE(res.pass);
    CHECK_FALSE(res.first_failure.empty());
}

TEST_CASE("group algebras validate as structure-constant algebras") {
    GroupPtr q8 = grp::quaternion_group_8();
    endo::StructureConstantAlgebra kq8 = endo::group_algebra(q8, f2);
    // Peirce data for the single-idempotent decomposition
    endo::PeirceData pd;
    pd.idempotents = {kq8.unit};
    pd.block_of.assign(kq8.dim, {0, 0});
    CHECK(endo::validate_algebra(kq8, pd).pass);
}

TEST_CASE("Peirce block dimensions are swap-symmetric") {
    for (const GroupPtr& g : {grp::elementary_abelian_group(2, 2), grp::dihedral_group(8)}) {
        endo::EndAlgebra f = endo::end_algebra(endo::build_V(g, f2));
        size_t ns = f.subgroups.size();
        for (size_t q = 0; q < ns; ++q)
            for (size_t r = 0; r < ns; ++r) CHECK(f.block_dim(q, r) == f.block_dim(r, q));
    }
}

TEST_CASE("hom_as_right_module: regular module and axioms") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    // w = V: the regular right module, dimension dim F
    endo::RightModule reg = endo::hom_as_right_module(f, f.v);
    CHECK(reg.dim == f.algebra.dim);

    // w = 0: zero module
    endo::RightModule zero =
        endo::hom_as_right_module(f, rep::zero_module(f.v->group(), f2));
    CHECK(zero.dim == 0);

    // w = k[C_2]: dim Hom(V, kC_2) = 2 + 1 = 3
    endo::RightModule m = endo::hom_as_right_module(f, rep::regular_module(f.v->group(), f2));
    CHECK(m.dim == 3);

    // right-module axioms on all basis pairs: (h·a)·b = h·(ab), h·1 = h
    const size_t n = f.algebra.dim;
    auto act_of = [&](const std::vector<uint32_t>& coords) {
        gf::Mat a(f2, m.dim, m.dim);
        for (size_t k = 0; k < n; ++k) {
            if (coords[k] == 0) continue;
            for (size_t i = 0; i < m.dim; ++i)
                for (size_t j = 0; j < m.dim; ++j)
                    a(i, j) = f2.add(a(i, j), f2.mul(coords[k], m.action[k](i, j)));
        }
        return a;
    };
    CHECK(act_of(f.algebra.unit).is_identity());
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            std::vector<uint32_t> ea(n, 0), eb(n, 0);
            ea[a] = 1;
            eb[b] = 1;
            gf::Mat lhs = act_of(eb).mul(m.action[a]);  // h ↦ (h·a)·b
            gf::Mat rhs = act_of(f.algebra.multiply(ea, eb));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("functoriality: a module map induces a right-module homomorphism") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    rep::RepPtr reg = rep::regular_module(f.v->group(), f2);
    rep::RepPtr k = rep::trivial_module(f.v->group(), f2);
    rep::ModuleMap aug = rep::ModuleMap::make(reg, k, gf::Mat::from_rows(f2, {{1, 1}}));

    endo::RightModule hr = endo::hom_as_right_module(f, reg);
    endo::RightModule hk = endo::hom_as_right_module(f, k);
    // induced map Hom(V, reg) -> Hom(V, k), φ ↦ aug∘φ
    gf::Mat ind(f2, hk.dim, hr.dim);
    for (size_t h = 0; h < hr.dim; ++h) {
        std::vector<uint32_t> coords(hr.dim, 0);
        coords[h] = 1;
        auto col = hk.hom->express(aug.matrix.mul(hr.hom->materialize(coords)));
        for (size_t i = 0; i < hk.dim; ++i) ind(i, h) = col[i];
    }
    // commutes with every right action
    for (size_t b = 0; b < f.algebra.dim; ++b)
        CHECK(ind.mul(hr.action[b]) == hk.action[b].mul(ind));
}

TEST_CASE("algebra dump format") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    std::string dump = endo::algebra_dump(f.algebra);
    CHECK(dump.rfind("comack-algebra v1\n", 0) == 0);
    CHECK(dump.find("p 2\n") != std::string::npos);
    CHECK(dump.find("dim 5\n") != std::string::npos);
    CHECK(dump.find("\nc ") != std::string::npos);
    // deterministic: emitting twice gives identical bytes
    CHECK(dump == endo::algebra_dump(f.algebra));
}
