#include "comack/endo.hpp"

#include <algorithm>
#include <sstream>

namespace comack::endo {

// ---------------------------------------------------------------------------
// build_V / build_U
// ---------------------------------------------------------------------------

namespace {

ModuleWithSubgroups build_sum(const grp::GroupPtr& g, const std::vector<grp::Subgroup>& subs,
                              gf::PrimeField f) {
    std::vector<rep::RepPtr> parts;
    parts.reserve(subs.size());
    for (const auto& q : subs) parts.push_back(rep::perm_module(g, q, f));
    rep::RepPtr v = rep::direct_sum(parts);
    // one tag per summand, carrying the subgroup index
    std::vector<rep::ComponentTag> tags;
    size_t offset = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
        size_t d = parts[i]->degree();
        tags.push_back(rep::ComponentTag{"k[G/Q" + std::to_string(i) + "]", offset, d,
                                         int(i), subs[i].order()});
        offset += d;
    }
    return ModuleWithSubgroups{rep::retag(v, std::move(tags)), subs};
}

}  // namespace

ModuleWithSubgroups build_V(const grp::GroupPtr& p_group, gf::PrimeField f) {
    return build_sum(p_group, grp::all_subgroups(p_group), f);
}

ModuleWithSubgroups build_U(const grp::GroupPtr& g, const grp::Subgroup& sylow,
                            gf::PrimeField f) {
    if (sylow.parent() != g) usage_error("build_U: Sylow subgroup of a different group");
    // subgroups of P, as subgroups of G, in the canonical order of the
    // subgroup lattice of P
    grp::SubgroupGroup pg = grp::subgroup_as_group(sylow);
    std::vector<grp::Subgroup> subs;
    for (const auto& q : grp::all_subgroups(pg.group)) {
        std::vector<grp::Elem> elems;
        for (grp::Elem e : q.elements()) elems.push_back(pg.to_parent[e]);
        std::sort(elems.begin(), elems.end());
        subs.emplace_back(g, std::move(elems));
    }
    return build_sum(g, subs, f);
}

// ---------------------------------------------------------------------------
// StructureConstantAlgebra
// ---------------------------------------------------------------------------

std::vector<uint32_t> StructureConstantAlgebra::multiply(const std::vector<uint32_t>& a,
                                                         const std::vector<uint32_t>& b) const {
    if (a.size() != dim || b.size() != dim) usage_error("algebra multiply: wrong coordinate size");
    std::vector<uint32_t> out(dim, 0);
    for (size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            uint32_t c = field.mul(a[i], b[j]);
            for (const auto& [k, v] : mult[i * dim + j])
                out[k] = field.add(out[k], field.mul(c, v));
        }
    }
    return out;
}

StructureConstantAlgebra group_algebra(const grp::GroupPtr& g, gf::PrimeField f) {
    StructureConstantAlgebra a;
    a.field = f;
    a.dim = g->order();
    a.mult.resize(a.dim * a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        a.labels.push_back(g->label(grp::Elem(i)));
        for (size_t j = 0; j < a.dim; ++j)
            a.mult[i * a.dim + j] = {{uint32_t(g->mul(grp::Elem(i), grp::Elem(j))), 1u}};
    }
    a.unit.assign(a.dim, 0);
    a.unit[g->identity()] = 1;
    return a;
}

// ---------------------------------------------------------------------------
// end_algebra
// ---------------------------------------------------------------------------

EndAlgebra end_algebra(const ModuleWithSubgroups& v) {
    if (v.module->tags().size() != v.subgroups.size())
        usage_error("end_algebra: module must carry one component tag per subgroup");
    EndAlgebra f;
    f.v = v.module;
    f.subgroups = v.subgroups;
    f.hom = std::make_shared<rep::HomSpace>(v.module, v.module);
    const size_t n = f.hom->dim();
    const size_t ns = v.subgroups.size();
    const auto field = v.module->field();

    f.algebra.field = field;
    f.algebra.dim = n;
    f.algebra.mult.resize(n * n);

    // block layout from the hom space (source component outer)
    f.hom_dims.assign(ns * ns, 0);
    f.peirce.block_of.resize(n);
    for (size_t q = 0; q < ns; ++q)
        for (size_t r = 0; r < ns; ++r) {
            auto [lo, hi] = f.hom->block_range(q, r);
            f.hom_dims[q * ns + r] = hi - lo;
            for (size_t k = lo; k < hi; ++k) {
                f.peirce.block_of[k] = {uint32_t(q), uint32_t(r)};
                f.algebra.labels.push_back("h[Q" + std::to_string(q) + "->Q" +
                                           std::to_string(r) + "]#" + std::to_string(k - lo));
            }
        }

    // basis endomorphisms as full matrices
    std::vector<gf::Mat>& basis = f.basis_mats;
    basis.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint32_t> coords(n, 0);
        coords[i] = 1;
        basis.push_back(f.hom->materialize(coords));
    }

    // structure constants: full-matrix composition, re-expressed in the basis.
    // b_i · b_j = b_i ∘ b_j is supported on block (src(b_j) -> dst(b_i)) and
    // vanishes identically unless src(b_i) = dst(b_j), because the embedded
    // matrices have disjoint column/row supports otherwise.
    for (size_t i = 0; i < n; ++i) {
        const auto [qi, ri] = f.peirce.block_of[i];
        for (size_t j = 0; j < n; ++j) {
            const auto [qj, rj] = f.peirce.block_of[j];
            if (qi != rj) continue;  // structurally zero product
            gf::Mat prod = basis[i].mul(basis[j]);
            std::vector<uint32_t> coords = f.hom->express(prod);
            auto& entry = f.algebra.mult[i * n + j];
            for (size_t k = 0; k < n; ++k)
                if (coords[k] != 0) entry.emplace_back(uint32_t(k), coords[k]);
        }
    }

    // spot-check the structural-zero claim on a deterministic sample
    {
        size_t checked = 0;
        for (size_t i = 0; i < n && checked < 16; ++i)
            for (size_t j = 0; j < n && checked < 16; ++j) {
                const auto [qi, ri] = f.peirce.block_of[i];
                const auto [qj, rj] = f.peirce.block_of[j];
                if (qi == rj) continue;
                if (!basis[i].mul(basis[j]).is_zero())
                    internal_error("end_algebra: incomposable product is nonzero");
                ++checked;
            }
    }

    // unit and idempotents
    f.algebra.unit = f.hom->express(gf::Mat::identity(field, v.module->degree()));
    for (size_t q = 0; q < ns; ++q) {
        const auto& tag = v.module->tags()[q];
        gf::Mat eq(field, v.module->degree(), v.module->degree());
        for (size_t k = 0; k < tag.dim; ++k) eq(tag.offset + k, tag.offset + k) = 1;
        f.peirce.idempotents.push_back(f.hom->express(eq));
    }

    ValidationReport report = validate_algebra(f.algebra, f.peirce);
    if (!report.pass) internal_error("end_algebra: validation failed: " + report.first_failure);
    return f;
}

// ---------------------------------------------------------------------------
// validate_algebra
// ---------------------------------------------------------------------------

ValidationReport validate_algebra(const StructureConstantAlgebra& a, const PeirceData& peirce) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        if (rep.pass) {
            rep.pass = false;
            rep.first_failure = msg;
        }
    };
    const size_t n = a.dim;
    if (peirce.block_of.size() != n) {
        fail("block map size mismatch");
        return rep;
    }

    auto unit_vec = [&](size_t i) {
        std::vector<uint32_t> e(n, 0);
        e[i] = 1;
        return e;
    };

    // products respect blocks; incomposable products vanish
    for (size_t i = 0; i < n && rep.pass; ++i)
        for (size_t j = 0; j < n && rep.pass; ++j) {
            const auto [qi, ri] = peirce.block_of[i];
            const auto [qj, rj] = peirce.block_of[j];
            for (const auto& [k, val] : a.basis_product(i, j)) {
                if (val == 0) fail("stored zero structure constant");
                if (qi != rj)
                    fail("incomposable product (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is nonzero");
                else if (peirce.block_of[k] != std::make_pair(qj, ri))
                    fail("product (" + std::to_string(i) + "," + std::to_string(j) +
                         ") leaves its Peirce block");
            }
        }

    // two-sided unit
    for (size_t i = 0; i < n && rep.pass; ++i) {
        if (a.multiply(a.unit, unit_vec(i)) != unit_vec(i))
            fail("unit fails on the left of basis " + std::to_string(i));
        else if (a.multiply(unit_vec(i), a.unit) != unit_vec(i))
            fail("unit fails on the right of basis " + std::to_string(i));
    }

    // associativity on all basis triples, organized by composable chains;
    // triples with an incomposable adjacent pair vanish on both sides given
    // the block compatibility above.
    size_t nblocks = 0;
    for (auto [q, r] : peirce.block_of) nblocks = std::max<size_t>(nblocks, std::max(q, r) + 1);
    std::vector<std::vector<uint32_t>> by_src(std::max<size_t>(nblocks, 1));
    for (size_t i = 0; i < n; ++i) by_src[peirce.block_of[i].first].push_back(uint32_t(i));

    for (size_t z = 0; z < n && rep.pass; ++z) {
        const uint32_t bz = peirce.block_of[z].second;
        for (uint32_t y : by_src[bz]) {
            if (!rep.pass) break;
            const uint32_t by_dst = peirce.block_of[y].second;
            // y·z once
            std::vector<uint32_t> yz(n, 0);
            for (const auto& [k, v] : a.basis_product(y, z)) yz[k] = v;
            for (uint32_t x : by_src[by_dst]) {
                // (x·y)·z
                std::vector<uint32_t> lhs(n, 0);
                for (const auto& [l, v] : a.basis_product(x, y))
                    for (const auto& [k, w] : a.basis_product(l, z))
                        lhs[k] = a.field.add(lhs[k], a.field.mul(v, w));
                // x·(y·z)
                std::vector<uint32_t> rhs(n, 0);
                for (size_t l = 0; l < n; ++l) {
                    if (yz[l] == 0) continue;
                    for (const auto& [k, w] : a.basis_product(x, l))
                        rhs[k] = a.field.add(rhs[k], a.field.mul(yz[l], w));
                }
                if (lhs != rhs) {
                    fail("associativity fails on triple (" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + ")");
                    break;
                }
            }
        }
    }

    // idempotents: orthogonal, idempotent, complete
    const size_t ns = peirce.idempotents.size();
    for (size_t q = 0; q < ns && rep.pass; ++q)
        for (size_t r = 0; r < ns && rep.pass; ++r) {
            auto prod = a.multiply(peirce.idempotents[q], peirce.idempotents[r]);
            if (q == r && prod != peirce.idempotents[q])
                fail("e_" + std::to_string(q) + " is not idempotent");
            else if (q != r && prod != std::vector<uint32_t>(n, 0))
                fail("e_" + std::to_string(q) + "·e_" + std::to_string(r) + " != 0");
        }
    if (rep.pass && ns > 0) {
        std::vector<uint32_t> sum(n, 0);
        for (const auto& e : peirce.idempotents)
            for (size_t k = 0; k < n; ++k) sum[k] = a.field.add(sum[k], e[k]);
        if (sum != a.unit) fail("idempotents do not sum to the unit");
    }

    // Peirce compatibility: e_R · b · e_Q = b for b in block (Q, R)
    for (size_t i = 0; i < n && rep.pass; ++i) {
        const auto [q, r] = peirce.block_of[i];
        if (q >= ns || r >= ns) {
            fail("block index out of range");
            break;
        }
        auto b = unit_vec(i);
        auto res = a.multiply(peirce.idempotents[r], a.multiply(b, peirce.idempotents[q]));
        if (res != b) fail("Peirce compatibility fails for basis " + std::to_string(i));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dump format
// ---------------------------------------------------------------------------

std::string algebra_dump(const StructureConstantAlgebra& a) {
    std::ostringstream os;
    os << "comack-algebra v1\n";
    os << "p " << a.field.p << "\n";
    os << "dim " << a.dim << "\n";
    for (size_t i = 0; i < a.dim; ++i) os << "label " << i << " " << a.labels[i] << "\n";
    os << "unit";
    for (size_t k = 0; k < a.dim; ++k)
        if (a.unit[k] != 0) os << " " << k << ":" << a.unit[k];
    os << "\n";
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (const auto& [k, v] : a.basis_product(i, j))
                os << "c " << i << " " << j << " " << k << " " << v << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Right modules
// ---------------------------------------------------------------------------

RightModule hom_as_right_module(const EndAlgebra& f, const rep::RepPtr& w) {
    RightModule rm;
    rm.hom = std::make_shared<rep::HomSpace>(f.v, w);
    rm.dim = rm.hom->dim();
    const size_t n = f.algebra.dim;
    rm.action.reserve(n);
    for (size_t b = 0; b < n; ++b) {
        gf::Mat fb = f.basis_matrix(b);
        gf::Mat act(f.v->field(), rm.dim, rm.dim);
        for (size_t h = 0; h < rm.dim; ++h) {
            std::vector<uint32_t> coords(rm.dim, 0);
            coords[h] = 1;
            gf::Mat hm = rm.hom->materialize(coords);
            std::vector<uint32_t> res = rm.hom->express(hm.mul(fb));  // h ∘ f_b
            for (size_t k = 0; k < rm.dim; ++k) act(k, h) = res[k];
        }
        rm.action.push_back(std::move(act));
    }
    return rm;
}

}  // namespace comack::endo
