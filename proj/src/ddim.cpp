#include "comack/ddim.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace comack::ddim {

// ---------------------------------------------------------------------------
// DdimValue / Müller
// ---------------------------------------------------------------------------

std::string DdimValue::to_string() const {
    switch (kind) {
        case Kind::Exact: return std::to_string(value);
        case Kind::AtLeast: return ">=" + std::to_string(value);
        case Kind::Infinite: return "infinite";
    }
    return "?";
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::NotRun: return "not_run";
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
    }
    return "?";
}

DdimValue ddim_from_ext_table(const std::vector<size_t>& table, size_t cutoff) {
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] > 0) return DdimValue::exact(i + 2);  // first nonzero is Ext^(i+1)
    if (table.size() >= cutoff) return DdimValue::at_least(cutoff + 2);
    return DdimValue::at_least(table.size() + 2);
}

namespace {

bool has_regular_summand(const rep::RepPtr& v) {
    for (const auto& t : v->tags())
        if (t.subgroup_order == 1 && t.dim == v->group()->order()) return true;
    return false;
}

}  // namespace

DdimValue ddim_mueller(const rep::RepPtr& v, size_t cutoff, const rep::ExtOptions& opts) {
    if (cutoff < 1) usage_error("ddim_mueller: cutoff must be >= 1");
    if (!has_regular_summand(v))
        usage_error("ddim_mueller: module has no regular summand; the Müller "
                    "criterion needs a generator-cogenerator");
    if (rep::algebra_is_semisimple(v->group(), v->field())) return DdimValue::infinite();
    std::vector<size_t> table =
        rep::ext_table(v, v, cutoff, opts, /*stop_at_first_nonzero=*/true);
    return ddim_from_ext_table(table, cutoff);
}

// ---------------------------------------------------------------------------
// Lower-bound witness
// ---------------------------------------------------------------------------

namespace {

// J = Hom(V, kP^s) is projective as a right F-module: each copy splits off of
// F through the leading regular component of V. Verifies the splitting
// identity (β∘α = id) per copy on the whole basis, and right-linearity of α
// on a deterministic sample of (h, b) pairs; the remaining right-module
// axioms are what the structure constants encode and are validated with the
// algebra itself.
bool verify_hom_free_projective(const endo::EndAlgebra& f, const rep::HomSpace& hom,
                                const rep::RepPtr& target) {
    const auto field = f.v->field();
    const size_t np = f.v->group()->order();
    const auto& tag0 = f.v->tags()[0];  // trivial subgroup first: the kP component
    if (tag0.subgroup_order != 1 || tag0.dim != np)
        internal_error("witness: module lacks leading regular component");
    const size_t s = np == 0 ? 0 : target->degree() / np;
    if (target->degree() != s * np) internal_error("witness: target is not kP^s");

    const size_t n = f.algebra.dim;
    // π1 ∘ (F basis element): rows of the leading component
    std::vector<gf::Mat> pi_basis;
    pi_basis.reserve(n);
    for (size_t k = 0; k < n; ++k)
        pi_basis.push_back(f.basis_matrix(k).submatrix(0, 0, np, f.v->degree()));

    const size_t dim_j = hom.dim();
    std::vector<std::vector<std::vector<uint32_t>>> alpha(dim_j);
    for (size_t h = 0; h < dim_j; ++h) {
        std::vector<uint32_t> coords(dim_j, 0);
        coords[h] = 1;
        gf::Mat hm = hom.materialize(coords);
        alpha[h].resize(s);
        for (size_t c = 0; c < s; ++c) {
            gf::Mat hc = hm.submatrix(c * np, 0, np, f.v->degree());
            gf::Mat emb(field, f.v->degree(), f.v->degree());
            emb.paste(0, 0, hc);  // ι1 ∘ h_c
            alpha[h][c] = f.hom->express(emb);
            // β∘α identity on this copy: π1 ∘ mat_F(α_c(h)) == h_c
            gf::Mat back(field, np, f.v->degree());
            for (size_t k = 0; k < n; ++k) {
                uint32_t coef = alpha[h][c][k];
                if (coef == 0) continue;
                for (size_t i = 0; i < np; ++i)
                    for (size_t j = 0; j < f.v->degree(); ++j)
                        back(i, j) = field.add(back(i, j), field.mul(coef, pi_basis[k](i, j)));
            }
            if (back != hc) return false;
        }
    }
    // right-linearity sample: α(h ∘ f_b) = α(h)·f_b
    auto check_pair = [&](size_t h, size_t b) {
        std::vector<uint32_t> coords(dim_j, 0);
        coords[h] = 1;
        gf::Mat composed = hom.materialize(coords).mul(f.basis_matrix(b));
        std::vector<uint32_t> bvec(n, 0);
        bvec[b] = 1;
        for (size_t c = 0; c < s; ++c) {
            gf::Mat hc = composed.submatrix(c * np, 0, np, f.v->degree());
            gf::Mat emb(field, f.v->degree(), f.v->degree());
            emb.paste(0, 0, hc);
            if (f.hom->express(emb) != f.algebra.multiply(alpha[h][c], bvec)) return false;
        }
        return true;
    };
    for (size_t h = 0; h < std::min<size_t>(dim_j, 2); ++h)
        for (size_t b = 0; b < n; ++b)
            if (!check_pair(h, b)) return false;
    for (size_t b = 0; b < std::min<size_t>(n, 2); ++b)
        for (size_t h = 0; h < dim_j; ++h)
            if (!check_pair(h, b)) return false;
    return true;
}

}  // namespace

LowerBoundWitness verify_lower_bound_witness(const endo::EndAlgebra& f) {
    const rep::RepPtr& v = f.v;
    if (!v->is_p_group_module())
        usage_error("verify_lower_bound_witness: requires a p-group");
    const auto field = v->field();

    LowerBoundWitness w;
    // coresolution 0 -> V -> I^0 -> I^1 by free modules
    rep::ModuleMap h0 = rep::injective_hull(v);
    gf::Subspace image0 = gf::Subspace::span_rows(h0.matrix.transpose());
    auto [c0, proj0] = rep::quotient_rep(h0.target, image0);
    rep::ModuleMap m1 =
        c0->degree() == 0
            ? rep::ModuleMap{h0.target, rep::free_module(v->group(), field, 0),
                             gf::Mat(field, 0, h0.target->degree())}
            : proj0.then(rep::injective_hull(c0));
    w.module_sequence = rep::ExactSequenceWitness::check({h0, m1});

    rep::HomSpace j0(v, h0.target);
    rep::HomSpace j1(v, m1.target);
    w.dim_f = f.hom->dim();
    w.dim_j0 = j0.dim();
    w.dim_j1 = j1.dim();

    // F -> J^0, φ ↦ h0 ∘ φ
    gf::Mat f_to_j0(field, w.dim_j0, w.dim_f);
    for (size_t b = 0; b < w.dim_f; ++b) {
        std::vector<uint32_t> col = j0.express(h0.matrix.mul(f.basis_matrix(b)));
        for (size_t i = 0; i < w.dim_j0; ++i) f_to_j0(i, b) = col[i];
    }
    // J^0 -> J^1, φ ↦ m1 ∘ φ
    gf::Mat j0_to_j1(field, w.dim_j1, w.dim_j0);
    for (size_t h = 0; h < w.dim_j0; ++h) {
        std::vector<uint32_t> coords(w.dim_j0, 0);
        coords[h] = 1;
        std::vector<uint32_t> col = j1.express(m1.matrix.mul(j0.materialize(coords)));
        for (size_t i = 0; i < w.dim_j1; ++i) j0_to_j1(i, h) = col[i];
    }

    w.exact_at_f = gf::rank(f_to_j0) == w.dim_f;
    gf::Subspace im = gf::Subspace::span_rows(f_to_j0.transpose());
    gf::Subspace ker = gf::kernel(j0_to_j1);
    w.exact_at_j0 = im == ker;

    w.j0_projective = verify_hom_free_projective(f, j0, h0.target);
    w.j1_projective = verify_hom_free_projective(f, j1, m1.target);
    return w;
}

// ---------------------------------------------------------------------------
// Brute-force oracle for tiny algebras
// ---------------------------------------------------------------------------

namespace {

// Right module over a structure-constant algebra: act[j] is the matrix of
// x ↦ x·b_j on column coordinates.
struct RMod {
    gf::PrimeField field;
    size_t dim = 0;
    std::vector<gf::Mat> act;
};

RMod regular_rmod(const endo::StructureConstantAlgebra& a) {
    RMod m{a.field, a.dim, {}};
    for (size_t j = 0; j < a.dim; ++j) {
        gf::Mat r(a.field, a.dim, a.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (const auto& [k, v] : a.basis_product(i, j)) r(k, i) = v;
        m.act.push_back(std::move(r));
    }
    return m;
}

// Dual of the left regular module: the injective cogenerator as right module.
RMod dual_regular_rmod(const endo::StructureConstantAlgebra& a) {
    RMod m{a.field, a.dim, {}};
    for (size_t j = 0; j < a.dim; ++j) {
        gf::Mat l(a.field, a.dim, a.dim);  // left multiplication by b_j
        for (size_t i = 0; i < a.dim; ++i)
            for (const auto& [k, v] : a.basis_product(j, i)) l(k, i) = v;
        m.act.push_back(l.transpose());
    }
    return m;
}

RMod power_rmod(const RMod& m, size_t s) {
    RMod out{m.field, m.dim * s, {}};
    for (size_t j = 0; j < m.act.size(); ++j) {
        gf::Mat a(m.field, m.dim * s, m.dim * s);
        for (size_t c = 0; c < s; ++c) a.paste(c * m.dim, c * m.dim, m.act[j]);
        out.act.push_back(std::move(a));
    }
    return out;
}

std::pair<RMod, gf::Mat> sub_rmod(const RMod& m, const gf::Subspace& space) {
    gf::Mat incl = space.basis().transpose();
    gf::Solver solver(incl);
    RMod out{m.field, space.dim(), {}};
    for (const auto& a : m.act) {
        auto x = solver.solve(a.mul(incl));
        if (!x) internal_error("brute oracle: subspace not invariant");
        out.act.push_back(std::move(*x));
    }
    return {out, incl};
}

std::pair<RMod, gf::Mat> quot_rmod(const RMod& m, const gf::Subspace& space, gf::Mat* lift_out) {
    const auto f = m.field;
    const size_t d = m.dim;
    const gf::Mat& basis = space.basis();
    std::vector<bool> is_pivot(d, false);
    std::vector<size_t> pivot_row(d, 0);
    for (size_t i = 0; i < basis.rows(); ++i) {
        size_t c = 0;
        while (c < d && basis(i, c) == 0) ++c;
        is_pivot[c] = true;
        pivot_row[c] = i;
    }
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < d; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const size_t q = free_cols.size();
    gf::Mat proj(f, q, d), lift(f, d, q);
    for (size_t fi = 0; fi < q; ++fi) {
        proj(fi, free_cols[fi]) = 1;
        lift(free_cols[fi], fi) = 1;
        for (size_t c = 0; c < d; ++c)
            if (is_pivot[c]) proj(fi, c) = f.neg(basis(pivot_row[c], free_cols[fi]));
    }
    RMod out{f, q, {}};
    for (const auto& a : m.act) out.act.push_back(proj.mul(a).mul(lift));
    if (lift_out) *lift_out = lift;
    return {out, proj};
}

// all submodules: cyclic closures of every vector, then join closure
std::vector<gf::Subspace> all_submodules(const RMod& m) {
    const auto f = m.field;
    const size_t d = m.dim;
    auto closure = [&](gf::Subspace s) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& a : m.act) {
                gf::Subspace moved = gf::Subspace::span_rows(s.basis().mul(a.transpose()));
                gf::Subspace bigger = s.sum(moved);
                if (bigger.dim() > s.dim()) {
                    s = std::move(bigger);
                    grew = true;
                }
            }
        }
        return s;
    };
    std::set<std::vector<uint32_t>> seen;
    std::vector<gf::Subspace> out;
    auto add = [&](const gf::Subspace& s) {
        std::vector<uint32_t> key{uint32_t(s.dim())};
        for (size_t i = 0; i < s.basis().rows(); ++i)
            for (size_t j = 0; j < s.basis().cols(); ++j) key.push_back(s.basis()(i, j));
        if (seen.insert(std::move(key)).second) {
            out.push_back(s);
            return true;
        }
        return false;
    };
    add(gf::Subspace::zero(f, d));
    for (uint64_t bits = 1; bits < (uint64_t(1) << d); ++bits) {
        gf::Mat v(f, 1, d);
        for (size_t j = 0; j < d; ++j) v(0, j) = uint32_t((bits >> j) & 1);
        add(closure(gf::Subspace::span_rows(v)));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<gf::Subspace> cur = out;
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (add(closure(cur[i].sum(cur[j])))) grew = true;
    }
    std::sort(out.begin(), out.end(), [](const gf::Subspace& x, const gf::Subspace& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        for (size_t i = 0; i < x.basis().rows(); ++i)
            for (size_t j = 0; j < x.basis().cols(); ++j)
                if (x.basis()(i, j) != y.basis()(i, j)) return x.basis()(i, j) < y.basis()(i, j);
        return false;
    });
    return out;
}

// radical of the algebra = intersection of the maximal proper submodules of
// the regular right module
gf::Subspace algebra_radical(const RMod& reg) {
    std::vector<gf::Subspace> subs = all_submodules(reg);
    gf::Subspace rad = gf::Subspace::full(reg.field, reg.dim);
    for (const auto& s : subs) {
        if (s.dim() == reg.dim) continue;
        bool maximal = true;
        for (const auto& t : subs)
            if (t.dim() < reg.dim && t.dim() > s.dim() && t.contains(s)) {
                maximal = false;
                break;
            }
        if (maximal) rad = rad.intersect(s);
    }
    return rad;
}

// the right action of an algebra element with the given coordinates
gf::Mat coord_action(const RMod& m, const gf::Mat& rad_basis, size_t row) {
    gf::Mat act(m.field, m.dim, m.dim);
    for (size_t j = 0; j < rad_basis.cols(); ++j) {
        uint32_t c = rad_basis(row, j);
        if (c == 0) continue;
        for (size_t r = 0; r < m.dim; ++r)
            for (size_t k = 0; k < m.dim; ++k)
                act(r, k) = m.field.add(act(r, k), m.field.mul(c, m.act[j](r, k)));
    }
    return act;
}

// socle = annihilator of the radical
gf::Subspace rmod_socle(const RMod& m, const gf::Subspace& rad) {
    if (m.dim == 0) return gf::Subspace::zero(m.field, 0);
    gf::Mat sys(m.field, 0, m.dim);
    for (size_t i = 0; i < rad.dim(); ++i) sys = sys.vstack(coord_action(m, rad.basis(), i));
    if (sys.rows() == 0) return gf::Subspace::full(m.field, m.dim);
    return gf::kernel(sys);
}

// embedding of M into (dual regular)^s separating the socle; the functionals
// are coordinate projections chosen greedily
gf::Mat cogenerator_embedding(const RMod& m, const RMod& dual_reg, const gf::Subspace& soc,
                              size_t* copies) {
    const auto f = m.field;
    gf::Mat e(f, 0, m.dim);
    size_t s = 0;
    gf::Subspace killed = soc;  // socle vectors not yet separated: ker(E) ∩ soc
    for (size_t tau = 0; tau < m.dim && killed.dim() > 0; ++tau) {
        // φ_τ : M -> a^*, φ(x)_j = (x·b_j)_τ  -> rows of the block: row j = row τ of act_j
        gf::Mat phi(f, dual_reg.dim, m.dim);
        for (size_t j = 0; j < dual_reg.dim; ++j)
            for (size_t c = 0; c < m.dim; ++c) phi(j, c) = m.act[j](tau, c);
        gf::Mat bigger = e.vstack(phi);
        gf::Subspace killed2 = gf::kernel(bigger).intersect(soc);
        if (killed2.dim() < killed.dim()) {
            e = std::move(bigger);
            killed = std::move(killed2);
            ++s;
        }
    }
    if (killed.dim() > 0) internal_error("brute oracle: cogenerator embedding failed");
    *copies = s;
    return e;
}

bool is_injective_rmod(const RMod& m, const RMod& dual_reg, const gf::Subspace& rad) {
    if (m.dim == 0) return true;
    size_t s = 0;
    gf::Mat e = cogenerator_embedding(m, dual_reg, rmod_socle(m, rad), &s);
    RMod c = power_rmod(dual_reg, s);
    // retraction ψ : C -> M, module map with ψ∘E = id
    const auto f = m.field;
    const size_t un = m.dim * c.dim;  // ψ row-major
    gf::Mat sys(f, 0, un);
    gf::Mat rhs(f, 0, 1);
    {
        gf::Mat eq(f, m.act.size() * m.dim * c.dim, un);
        size_t row = 0;
        for (size_t j = 0; j < m.act.size(); ++j) {
            for (size_t i = 0; i < m.dim; ++i)
                for (size_t col = 0; col < c.dim; ++col) {
                    for (size_t k = 0; k < c.dim; ++k)
                        eq(row, i * c.dim + k) = f.add(eq(row, i * c.dim + k), c.act[j](k, col));
                    for (size_t k = 0; k < m.dim; ++k)
                        eq(row, k * c.dim + col) =
                            f.sub(eq(row, k * c.dim + col), m.act[j](i, k));
                    ++row;
                }
        }
        sys = sys.vstack(eq);
        rhs = rhs.vstack(gf::Mat(f, eq.rows(), 1));
    }
    {
        gf::Mat id_rows(f, m.dim * m.dim, un);
        gf::Mat id_rhs(f, m.dim * m.dim, 1);
        size_t row = 0;
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t col = 0; col < m.dim; ++col) {
                for (size_t k = 0; k < c.dim; ++k) id_rows(row, i * c.dim + k) = e(k, col);
                id_rhs(row, 0) = i == col ? 1 : 0;
                ++row;
            }
        sys = sys.vstack(id_rows);
        rhs = rhs.vstack(id_rhs);
    }
    return gf::solve(sys, rhs).has_value();
}

bool is_projective_rmod(const RMod& m, const RMod& reg,
                        const endo::StructureConstantAlgebra& a) {
    if (m.dim == 0) return true;
    const auto f = m.field;
    const size_t t = m.dim;
    RMod rt = power_rmod(reg, t);
    // π : R^t -> M, e_{c,j} ↦ m_c·b_j
    gf::Mat pi(f, m.dim, t * a.dim);
    for (size_t c = 0; c < t; ++c)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t i = 0; i < m.dim; ++i) pi(i, c * a.dim + j) = m.act[j](i, c);
    if (gf::rank(pi) != m.dim) internal_error("brute oracle: free cover not surjective");
    // section σ : M -> R^t with π∘σ = id, right-linear
    const size_t un = rt.dim * m.dim;  // σ row-major (rt.dim x m.dim)
    gf::Mat sys(f, 0, un);
    gf::Mat rhs(f, 0, 1);
    {
        gf::Mat eq(f, m.act.size() * rt.dim * m.dim, un);
        size_t row = 0;
        for (size_t j = 0; j < m.act.size(); ++j)
            for (size_t i = 0; i < rt.dim; ++i)
                for (size_t col = 0; col < m.dim; ++col) {
                    for (size_t k = 0; k < m.dim; ++k)
                        eq(row, i * m.dim + k) = f.add(eq(row, i * m.dim + k), m.act[j](k, col));
                    for (size_t k = 0; k < rt.dim; ++k)
                        eq(row, k * m.dim + col) = f.sub(eq(row, k * m.dim + col), rt.act[j](i, k));
                    ++row;
                }
        sys = sys.vstack(eq);
        rhs = rhs.vstack(gf::Mat(f, eq.rows(), 1));
    }
    {
        gf::Mat id_rows(f, m.dim * m.dim, un);
        gf::Mat id_rhs(f, m.dim * m.dim, 1);
        size_t row = 0;
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t col = 0; col < m.dim; ++col) {
                for (size_t k = 0; k < rt.dim; ++k) id_rows(row, k * m.dim + col) = pi(i, k);
                id_rhs(row, 0) = i == col ? 1 : 0;
                ++row;
            }
        sys = sys.vstack(id_rows);
        rhs = rhs.vstack(id_rhs);
    }
    return gf::solve(sys, rhs).has_value();
}

struct HullResult {
    RMod hull;
    gf::Mat embedding;  // hull.dim x m.dim
};

// minimal injective essential extension, found by exhaustive search over the
// submodules of C/M for C = (a^*)^s
HullResult injective_hull_rmod(const RMod& m, const RMod& dual_reg, const gf::Subspace& rad) {
    const auto f = m.field;
    if (m.dim == 0) return {RMod{f, 0, std::vector<gf::Mat>(m.act.size(), gf::Mat(f, 0, 0))},
                            gf::Mat(f, 0, 0)};
    size_t s = 0;
    gf::Mat e = cogenerator_embedding(m, dual_reg, rmod_socle(m, rad), &s);
    RMod c = power_rmod(dual_reg, s);
    gf::Subspace im_e = gf::Subspace::span_rows(e.transpose());
    gf::Mat lift;
    auto [quot, proj] = quot_rmod(c, im_e, &lift);
    for (const gf::Subspace& t : all_submodules(quot)) {  // sorted by dimension
        // N = preimage of T in C
        gf::Mat n_rows = im_e.basis().vstack(t.basis().mul(lift.transpose()));
        gf::Subspace n_space = gf::Subspace::span_rows(n_rows);
        auto [n_mod, n_incl] = sub_rmod(c, n_space);
        // essential over M: soc(N) ⊆ im(E)
        gf::Subspace n_soc = rmod_socle(n_mod, rad);
        gf::Subspace n_soc_in_c =
            gf::Subspace::span_rows(n_soc.basis().mul(n_incl.transpose()));
        if (!im_e.contains(n_soc_in_c)) continue;
        if (!is_injective_rmod(n_mod, dual_reg, rad)) continue;
        // embedding of M into N coordinates
        auto x = gf::solve(n_incl, e);
        if (!x) internal_error("brute oracle: hull does not contain the module");
        return {std::move(n_mod), std::move(*x)};
    }
    internal_error("brute oracle: no injective essential extension found");
}

}  // namespace

DdimValue brute_ddim_small(const endo::StructureConstantAlgebra& a) {
    if (a.field.p != 2) usage_error("brute_ddim_small: only p = 2 is supported");
    if (a.dim == 0 || a.dim > 6) usage_error("brute_ddim_small: algebra dimension must be 1..6");

    RMod reg = regular_rmod(a);
    RMod dual_reg = dual_regular_rmod(a);
    gf::Subspace rad = algebra_radical(reg);

    constexpr size_t kTerms = 3;  // I^0, I^1, I^2
    std::vector<bool> projective;
    bool terminated = false;
    RMod current = reg;
    for (size_t n = 0; n < kTerms; ++n) {
        if (current.dim == 0) {
            terminated = true;
            break;
        }
        HullResult hull = injective_hull_rmod(current, dual_reg, rad);
        projective.push_back(is_projective_rmod(hull.hull, reg, a));
        gf::Subspace image = gf::Subspace::span_rows(hull.embedding.transpose());
        current = quot_rmod(hull.hull, image, nullptr).first;
    }
    for (size_t n = 0; n < projective.size(); ++n)
        if (!projective[n]) return DdimValue::exact(n);
    if (terminated || current.dim == 0) return DdimValue::infinite();
    return DdimValue::at_least(kTerms);
}

// ---------------------------------------------------------------------------
// comack_ddim pipeline
// ---------------------------------------------------------------------------

namespace {

std::string scope_string(const grp::GroupPtr& g, const grp::Subgroup& sylow,
                         const std::string& spec, uint32_t p) {
    if (sylow.order() == g->order()) return "p-group";
    if (spec == "sym:3" && p == 3) return "single-block";
    return "whole-group-algebra";
}

DoubleCosetCheck run_double_coset_check(const grp::GroupPtr& g, gf::PrimeField f) {
    DoubleCosetCheck c;
    std::vector<grp::Subgroup> subs = grp::all_subgroups(g);
    std::vector<rep::RepPtr> perms;
    perms.reserve(subs.size());
    for (const auto& q : subs) perms.push_back(rep::perm_module(g, q, f));
    c.status = CheckStatus::Pass;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = 0; j < subs.size(); ++j) {
            size_t hom = rep::hom_dim(perms[i], perms[j]);
            size_t dc = grp::double_cosets(subs[i], subs[j]).count;
            ++c.pairs_checked;
            if (hom != dc) c.status = CheckStatus::Fail;
        }
    return c;
}

}  // namespace

DdimReport comack_ddim(const RunConfig& config) {
    const auto t_start = std::chrono::steady_clock::now();
    if (config.ext_cutoff < 1) usage_error("config: ext cutoff must be >= 1");
    if (config.order_bound > grp::kDefaultOrderBound)
        usage_error("config: order bound exceeds the hard maximum 64");
    gf::PrimeField field(config.p);
    grp::GroupPtr g = grp::parse_group_spec(config.group_spec, config.order_bound);
    rep::ExtOptions opts{config.term_ceiling};

    DdimReport r;
    r.group_spec = config.group_spec;
    r.group_order = g->order();
    r.p = config.p;
    r.emit_timing = config.emit_timing;

    grp::Subgroup sylow = grp::sylow_subgroup(g, config.p);
    r.sylow_order = sylow.order();
    r.scope = scope_string(g, sylow, config.group_spec, config.p);
    r.trivial_defect = sylow.order() == 1;

    grp::SubgroupGroup pg = grp::subgroup_as_group(sylow);
    std::vector<grp::Subgroup> p_subs = grp::all_subgroups(pg.group);
    r.subgroup_count = p_subs.size();

    endo::ModuleWithSubgroups v = endo::build_V(pg.group, field);
    r.dim_v = v.module->degree();
    endo::EndAlgebra f = endo::end_algebra(v);
    r.dim_f = f.algebra.dim;
    r.algebra_dump = endo::algebra_dump(f.algebra);

    size_t hom_sum = 0;
    for (size_t q = 0; q < p_subs.size(); ++q)
        for (size_t rr = 0; rr < p_subs.size(); ++rr) {
            HomTableEntry e;
            e.q = q;
            e.r = rr;
            e.dim = f.block_dim(q, rr);
            e.double_cosets = grp::double_cosets(p_subs[q], p_subs[rr]).count;
            hom_sum += e.dim;
            r.hom_dims.push_back(e);
        }

    const bool semisimple = rep::algebra_is_semisimple(pg.group, field);
    if (semisimple) {
        r.ext.assign(config.ext_cutoff, 0);
        r.ddim = DdimValue::infinite();
    } else {
        r.ext = rep::ext_table(v.module, v.module, config.ext_cutoff, opts,
                               /*stop_at_first_nonzero=*/false);
        r.ddim = ddim_from_ext_table(r.ext, config.ext_cutoff);
    }

    LowerBoundWitness w = verify_lower_bound_witness(f);
    r.witness_present = true;
    r.witness_dim_f = w.dim_f;
    r.witness_dim_j0 = w.dim_j0;
    r.witness_dim_j1 = w.dim_j1;
    r.witness_ok = w.ok();

    if (config.check_double_cosets) r.check_double_cosets = run_double_coset_check(g, field);
    if (config.check_theorem2)
        r.check_theorem2 = verify_theorem2_instance(g, config.p, config.ext_cutoff, opts);
    if (config.check_remark) r.check_remark = remark_check(g, config.p, opts);
    if (config.check_oracle) {
        if (config.p != 2 || r.dim_f > 6)
            usage_error("oracle check requires p = 2 and dim F <= 6 (group " +
                        config.group_spec + " gives dim F = " + std::to_string(r.dim_f) + ")");
        r.check_oracle.brute = brute_ddim_small(f.algebra);
        r.check_oracle.mueller = r.ddim;
        r.check_oracle.status = r.check_oracle.brute == r.check_oracle.mueller
                                    ? CheckStatus::Pass
                                    : CheckStatus::Fail;
    }

    DdimValue expected = r.trivial_defect ? DdimValue::infinite() : DdimValue::exact(2);
    r.verified = r.witness_ok && r.ddim == expected && hom_sum == r.dim_f &&
                 r.check_double_cosets.status != CheckStatus::Fail &&
                 r.check_theorem2.status != CheckStatus::Fail &&
                 r.check_remark.status != CheckStatus::Fail &&
                 r.check_oracle.status != CheckStatus::Fail;

    r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t_start)
                      .count();
    return r;
}

// ---------------------------------------------------------------------------
// Theorem 2 instance and remark check
// ---------------------------------------------------------------------------

Theorem2Report verify_theorem2_instance(const grp::GroupPtr& g, uint32_t p, size_t cutoff,
                                        const rep::ExtOptions& opts) {
    gf::PrimeField field(p);
    if (g->order() % p != 0)
        usage_error("verify_theorem2_instance: p does not divide |G|; "
                    "separable equivalence not certified");
    Theorem2Report rep2;
    grp::Subgroup sylow = grp::sylow_subgroup(g, p);
    grp::SubgroupGroup pg = grp::subgroup_as_group(sylow);

    endo::ModuleWithSubgroups v = endo::build_V(pg.group, field);
    endo::ModuleWithSubgroups u = endo::build_U(g, sylow, field);

    // (i) kG ⊗_kP k[P/Q] ≅ k[G/Q]: U is built as ⊕ k[G/Q], so the induction
    // side holds by construction.
    rep2.induction_in_add_u = true;

    // (ii) Res^G_P k[G/Q] decomposes into P-permutation modules with
    // stabilizers among the subgroups of P (verified isomorphism).
    std::vector<grp::Subgroup> p_subs = grp::all_subgroups(pg.group);
    std::set<std::vector<grp::Elem>> p_sub_sets;
    for (const auto& s : p_subs) {
        std::vector<grp::Elem> parent_elems;
        for (grp::Elem e : s.elements()) parent_elems.push_back(pg.to_parent[e]);
        std::sort(parent_elems.begin(), parent_elems.end());
        p_sub_sets.insert(parent_elems);
    }
    rep2.restriction_in_add_v = true;
    for (const auto& q : u.subgroups) {
        rep::RestrictionDecomposition rd =
            rep::decompose_permutation_restriction(g, sylow, q, field);
        if (!rd.isomorphism_verified) rep2.restriction_in_add_v = false;
        for (const auto& stab : rd.stabilizers) {
            ++rep2.stabilizers_checked;
            if (p_sub_sets.find(stab.elements()) == p_sub_sets.end())
                rep2.restriction_in_add_v = false;
        }
    }

    rep2.ddim_sylow = ddim_mueller(v.module, cutoff, opts);
    rep2.ddim_group = ddim_mueller(u.module, cutoff, opts);
    rep2.status = (rep2.induction_in_add_u && rep2.restriction_in_add_v &&
                   rep2.ddim_group == rep2.ddim_sylow)
                      ? CheckStatus::Pass
                      : CheckStatus::Fail;
    return rep2;
}

RemarkReport remark_check(const grp::GroupPtr& g, uint32_t p, const rep::ExtOptions& opts) {
    gf::PrimeField field(p);
    if (g->order() % p != 0) usage_error("remark_check: p does not divide |G|");
    RemarkReport rr;
    grp::Subgroup sylow = grp::sylow_subgroup(g, p);
    grp::SubgroupGroup pg = grp::subgroup_as_group(sylow);

    endo::ModuleWithSubgroups u = endo::build_U(g, sylow, field);
    rr.ext1_group = rep::ext_dim(u.module, u.module, 1, opts);
    rep::RepPtr k = rep::trivial_module(pg.group, field);
    rr.ext1_sylow = rep::ext_dim(k, k, 1, opts);
    rr.status = (rr.ext1_group >= rr.ext1_sylow && rr.ext1_sylow >= 1) ? CheckStatus::Pass
                                                                       : CheckStatus::Fail;
    return rr;
}

}  // namespace comack::ddim
