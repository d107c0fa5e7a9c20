#include <doctest.h>

#include "comack/ddim.hpp"

using namespace comack;
using ddim::DdimValue;
using gf::PrimeField;
using grp::GroupPtr;

namespace {

const PrimeField f2(2);
const PrimeField f3(3);

}  // namespace

TEST_CASE("ddim_from_ext_table applies the Müller rule") {
    using ddim::ddim_from_ext_table;
    CHECK(ddim_from_ext_table({1}, 3) == DdimValue::exact(2));
    CHECK(ddim_from_ext_table({0, 2}, 3) == DdimValue::exact(3));
    CHECK(ddim_from_ext_table({0, 0, 0}, 3) == DdimValue::at_least(5));
}

TEST_CASE("ddim_mueller on small instances") {
    endo::ModuleWithSubgroups v2 = endo::build_V(grp::cyclic_group(2), f2);
    CHECK(ddim::ddim_mueller(v2.module, 3) == DdimValue::exact(2));

    endo::ModuleWithSubgroups v1 = endo::build_V(grp::cyclic_group(1), f2);
    CHECK(ddim::ddim_mueller(v1.module, 3) == DdimValue::infinite());

    // generator precondition: a module without a regular summand is rejected
    GroupPtr c2 = grp::cyclic_group(2);
    rep::RepPtr just_k = rep::trivial_module(c2, f2);
    CHECK_THROWS_AS(ddim::ddim_mueller(just_k, 3), Error);
}

TEST_CASE("lower-bound witness for C_2: ranks 5, 6, 3") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    ddim::LowerBoundWitness w = ddim::verify_lower_bound_witness(f);
    CHECK(w.ok());
    CHECK(w.dim_f == 5);
    CHECK(w.dim_j0 == 6);  // s = dim soc V = 2, dim Hom(V, kC_2^2) = 2*3
    CHECK(w.dim_j1 == 3);
    CHECK(w.module_sequence.exact);
}

TEST_CASE("lower-bound witness degenerates gracefully for the trivial group") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(1), f2));
    ddim::LowerBoundWitness w = ddim::verify_lower_bound_witness(f);
    CHECK(w.ok());
    CHECK(w.dim_f == 1);
    CHECK(w.dim_j0 == 1);
    CHECK(w.dim_j1 == 0);
}

TEST_CASE("lower-bound witness across the p-group test set") {
    auto run = [](const GroupPtr& g, uint32_t p) {
        PrimeField f(p);
        endo::EndAlgebra fa = endo::end_algebra(endo::build_V(g, f));
        ddim::LowerBoundWitness w = ddim::verify_lower_bound_witness(fa);
        CHECK(w.ok());
        // s0 = #subgroups (each permutation summand has socle dimension 1)
        CHECK(w.dim_j0 == fa.subgroups.size() * fa.v->degree());
    };
    run(grp::cyclic_group(2), 2);
    run(grp::cyclic_group(3), 3);
    run(grp::cyclic_group(4), 2);
    run(grp::elementary_abelian_group(2, 2), 2);
}

TEST_CASE("brute-force oracle: semisimple and self-injective algebras") {
    endo::StructureConstantAlgebra k = endo::group_algebra(grp::cyclic_group(1), f2);
    CHECK(ddim::brute_ddim_small(k) == DdimValue::infinite());

    endo::StructureConstantAlgebra kc2 = endo::group_algebra(grp::cyclic_group(2), f2);
    CHECK(ddim::brute_ddim_small(kc2) == DdimValue::infinite());

    endo::StructureConstantAlgebra kc4 = endo::group_algebra(grp::cyclic_group(4), f2);
    CHECK(ddim::brute_ddim_small(kc4) == DdimValue::infinite());
}

TEST_CASE("brute-force oracle agrees with the Müller path on F for C_2") {
    endo::EndAlgebra f = endo::end_algebra(endo::build_V(grp::cyclic_group(2), f2));
    REQUIRE(f.algebra.dim == 5);
    DdimValue brute = ddim::brute_ddim_small(f.algebra);
    DdimValue mueller = ddim::ddim_mueller(f.v, 3);
    CHECK(brute == DdimValue::exact(2));
    CHECK(brute == mueller);
}

TEST_CASE("brute-force oracle rejects out-of-range inputs") {
    endo::StructureConstantAlgebra kc8 = endo::group_algebra(grp::cyclic_group(8), f2);
    CHECK_THROWS_AS(ddim::brute_ddim_small(kc8), Error);  // dim 8 > 6
    endo::StructureConstantAlgebra kc3 = endo::group_algebra(grp::cyclic_group(3), f3);
    CHECK_THROWS_AS(ddim::brute_ddim_small(kc3), Error);  // p != 2
}

TEST_CASE("comack_ddim: C_2 at p = 2") {
    ddim::RunConfig cfg;
    cfg.group_spec = "cyclic:2";
    cfg.p = 2;
    cfg.check_oracle = true;
    ddim::DdimReport r = ddim::comack_ddim(cfg);
    CHECK(r.verified);
    CHECK(r.ddim == DdimValue::exact(2));
    CHECK(r.dim_v == 3);
    CHECK(r.dim_f == 5);
    CHECK(r.subgroup_count == 2);
    CHECK(r.scope == "p-group");
    CHECK_FALSE(r.trivial_defect);
    CHECK(r.witness_ok);
    CHECK(r.check_oracle.status == ddim::CheckStatus::Pass);
    REQUIRE(!r.ext.empty());
    CHECK(r.ext[0] == 1);  // dim Ext^1(V,V) over kC_2
}

TEST_CASE("comack_ddim: C_6 at p = 3 computes over the Sylow subgroup") {
    ddim::RunConfig cfg;
    cfg.group_spec = "cyclic:6";
    cfg.p = 3;
    ddim::DdimReport r = ddim::comack_ddim(cfg);
    CHECK(r.verified);
    CHECK(r.group_order == 6);
    CHECK(r.sylow_order == 3);
    CHECK(r.scope == "whole-group-algebra");
    CHECK(r.ddim == DdimValue::exact(2));
    CHECK(r.dim_f == 6);  // F for C_3
}

TEST_CASE("comack_ddim: trivial defect group is flagged and Infinite") {
    ddim::RunConfig cfg;
    cfg.group_spec = "cyclic:3";
    cfg.p = 2;
    ddim::DdimReport r = ddim::comack_ddim(cfg);
    CHECK(r.verified);
    CHECK(r.trivial_defect);
    CHECK(r.sylow_order == 1);
    CHECK(r.ddim == DdimValue::infinite());
}

TEST_CASE("comack_ddim rejects bad configuration") {
    ddim::RunConfig cfg;
    cfg.group_spec = "cyclic:2";
    cfg.p = 2;
    cfg.ext_cutoff = 0;
    CHECK_THROWS_AS(ddim::comack_ddim(cfg), Error);
    cfg.ext_cutoff = 3;
    cfg.order_bound = 100;
    CHECK_THROWS_AS(ddim::comack_ddim(cfg), Error);
    cfg.order_bound = 64;
    cfg.group_spec = "nonsense";
    CHECK_THROWS_AS(ddim::comack_ddim(cfg), Error);
}

TEST_CASE("theorem-2 instance: S_3 at p = 3") {
    ddim::Theorem2Report t = ddim::verify_theorem2_instance(grp::symmetric_group_3(), 3);
    CHECK(t.status == ddim::CheckStatus::Pass);
    CHECK(t.ddim_group == DdimValue::exact(2));
    CHECK(t.ddim_sylow == DdimValue::exact(2));
    CHECK(t.induction_in_add_u);
    CHECK(t.restriction_in_add_v);
    CHECK(t.stabilizers_checked > 0);
}

TEST_CASE("theorem-2 instance: degenerate p-group case") {
    ddim::Theorem2Report t = ddim::verify_theorem2_instance(grp::cyclic_group(2), 2);
    CHECK(t.status == ddim::CheckStatus::Pass);
    CHECK(t.ddim_group == t.ddim_sylow);
}

TEST_CASE("theorem-2 instance requires p | |G|") {
    CHECK_THROWS_AS(ddim::verify_theorem2_instance(grp::cyclic_group(3), 2), Error);
}

TEST_CASE("remark check") {
    ddim::RemarkReport r2 = ddim::remark_check(grp::cyclic_group(2), 2);
    CHECK(r2.status == ddim::CheckStatus::Pass);
    CHECK(r2.ext1_sylow == 1);
    CHECK(r2.ext1_group >= 1);

    ddim::RemarkReport rs3 = ddim::remark_check(grp::symmetric_group_3(), 3);
    CHECK(rs3.status == ddim::CheckStatus::Pass);
    CHECK(rs3.ext1_sylow == 1);
    CHECK(rs3.ext1_group >= rs3.ext1_sylow);

    ddim::RemarkReport rk = ddim::remark_check(grp::elementary_abelian_group(2, 2), 2);
    CHECK(rk.status == ddim::CheckStatus::Pass);
    CHECK(rk.ext1_sylow == 2);
}
