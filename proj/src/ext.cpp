#include "comack/ext.hpp"

namespace comack::rep {

bool algebra_is_semisimple(const grp::GroupPtr& g, gf::PrimeField f) {
    return g->order() % f.p != 0;
}

namespace {

// Incremental projective resolution ... -> P_1 -> P_0 -> m -> 0.
//
// P_j is free of rank ranks[j]; boundary[j] (j >= 1) is the dense matrix of
// d_j : P_j -> P_{j-1}; syzygy[j] = Ω_j is ker(d_{j-1}) as a representation
// on its own basis with incl[j] : Ω_j -> P_{j-1} the inclusion. Terms after
// the module hits zero are zero.
class Resolution {
public:
    Resolution(RepPtr m, bool minimal, ExtOptions opts)
        : minimal_(minimal), opts_(opts), current_(std::move(m)) {}

    // Ensure P_0..P_k are built (or the resolution terminated earlier).
    void extend_to(size_t k) {
        while (ranks_.size() <= k && !terminated_) step();
    }

    bool has_term(size_t j) const { return j < ranks_.size(); }
    size_t term_rank(size_t j) const { return j < ranks_.size() ? ranks_[j] : 0; }
    const gf::Mat& boundary(size_t j) const { return boundaries_[j]; }  // j >= 1
    const RepPtr& syzygy_rep(size_t j) const { return syzygies_[j]; }   // Ω_j, j >= 1
    const gf::Mat& syzygy_incl(size_t j) const { return incls_[j]; }    // Ω_j -> P_{j-1}
    const grp::GroupPtr& group() const { return current_->group(); }
    gf::PrimeField field() const { return current_->field(); }

private:
    // Invariant after k steps: ranks_/boundaries_ have k entries and
    // syzygies_/incls_ have k+1 (index j holds Ω_j; index 0 is a placeholder).
    void step() {
        const size_t j = ranks_.size();
        const auto f = current_->field();
        if (j == 0) {
            syzygies_.push_back(nullptr);
            incls_.push_back(gf::Mat());
        }
        if (current_->degree() == 0) {
            terminated_ = true;
            const size_t prev_dim = j == 0 ? 0 : ranks_[j - 1] * group()->order();
            ranks_.push_back(0);
            boundaries_.push_back(gf::Mat(f, prev_dim, 0));
            syzygies_.push_back(current_);
            incls_.push_back(gf::Mat(f, 0, 0));
            return;
        }
        ModuleMap cover = minimal_ ? projective_cover(current_) : free_cover(current_);
        const size_t rank = cover.source->tags().size();
        if (cover.source->degree() > opts_.term_ceiling)
            resource_error("resolution term P_" + std::to_string(j) + " has dimension " +
                           std::to_string(cover.source->degree()) + " > ceiling " +
                           std::to_string(opts_.term_ceiling));
        ranks_.push_back(rank);
        if (j == 0) {
            boundaries_.push_back(gf::Mat(f, 0, 0));  // placeholder; d_0 does not exist
        } else {
            // d_j = (Ω_j -> P_{j-1}) ∘ (P_j -> Ω_j)
            boundaries_.push_back(incls_[j].mul(cover.matrix));
        }
        auto [omega, incl] = submodule_rep(cover.source, gf::kernel(cover.matrix));
        syzygies_.push_back(omega);
        incls_.push_back(incl.matrix);
        current_ = omega;
    }

    // Generic step: cover X by kG^(dim X), e_{c,g} ↦ g·x_c.
    ModuleMap free_cover(const RepPtr& x) const {
        const auto& g = *x->group();
        const size_t n = g.order();
        const size_t t = x->degree();
        RepPtr free = free_module(x->group(), x->field(), t);
        gf::Mat cm(x->field(), t, t * n);
        for (size_t c = 0; c < t; ++c)
            for (size_t e = 0; e < n; ++e) {
                const gf::Mat& act = x->element_action(grp::Elem(e));
                for (size_t i = 0; i < t; ++i) cm(i, c * n + e) = act(i, c);
            }
        ModuleMap cover{free, x, std::move(cm)};
        if (free->degree() <= 300 && !cover.is_equivariant())
            internal_error("free cover is not equivariant");
        return cover;
    }

    bool minimal_;
    ExtOptions opts_;
    RepPtr current_;
    bool terminated_ = false;
    std::vector<size_t> ranks_;
    std::vector<gf::Mat> boundaries_;
    std::vector<RepPtr> syzygies_;
    std::vector<gf::Mat> incls_;
};

// Matrix of the induced map Hom(P_j, n) -> Hom(P_{j+1}, n) under the free
// identification Hom(kG^t, n) ≅ n^t: block (l, c) is Σ_g d[(c,g), l·|G|+id] ρ_n(g).
gf::Mat hom_complex_map(const Resolution& res, size_t j, const RepPtr& n) {
    const auto& g = *res.group();
    const size_t ng = g.order();
    const size_t dn = n->degree();
    const size_t t_from = res.term_rank(j);
    const size_t t_to = res.term_rank(j + 1);
    gf::Mat out(res.field(), t_to * dn, t_from * dn);
    if (t_from == 0 || t_to == 0) return out;
    const gf::Mat& d = res.boundary(j + 1);
    for (size_t l = 0; l < t_to; ++l) {
        const size_t col = l * ng + g.identity();
        for (size_t c = 0; c < t_from; ++c) {
            // A = Σ_g coeff ρ_n(g)
            gf::Mat a(res.field(), dn, dn);
            bool nonzero = false;
            for (size_t e = 0; e < ng; ++e) {
                uint32_t coeff = d(c * ng + e, col);
                if (coeff == 0) continue;
                nonzero = true;
                const gf::Mat& act = n->element_action(grp::Elem(e));
                for (size_t i = 0; i < dn; ++i)
                    for (size_t k = 0; k < dn; ++k)
                        a(i, k) = res.field().add(a(i, k), res.field().mul(coeff, act(i, k)));
            }
            if (nonzero) out.paste(l * dn, c * dn, a);
        }
    }
    return out;
}

size_t ext_from_homology(Resolution& res, const RepPtr& n, size_t i) {
    res.extend_to(i + 1);
    const size_t dn = n->degree();
    if (res.term_rank(i) == 0 || dn == 0) return 0;
    gf::Mat delta_i = hom_complex_map(res, i, n);
    size_t ker_dim = res.term_rank(i) * dn - gf::rank(delta_i);
    gf::Mat delta_prev = hom_complex_map(res, i - 1, n);
    return ker_dim - gf::rank(delta_prev);
}

// Ext^i(m, n) = coker(Hom(P_{i-1}, n) --restrict--> Hom(Ω_i, n)).
size_t ext_from_shift(Resolution& res, const RepPtr& n, size_t i) {
    res.extend_to(i - 1);
    if (!res.has_term(i - 1) || res.term_rank(i - 1) == 0) return 0;
    const RepPtr& omega = res.syzygy_rep(i);
    if (omega->degree() == 0) return 0;
    HomSpace hom(omega, n);
    if (hom.dim() == 0) return 0;
    const gf::Mat& incl = res.syzygy_incl(i);  // (t·|G|) x dimΩ
    const auto& g = *res.group();
    const size_t ng = g.order();
    const size_t dn = n->degree();
    const size_t t = res.term_rank(i - 1);
    const size_t dw = omega->degree();
    // restriction of the free hom basis φ_{(c,b)} to Ω_i, flattened row-major
    gf::Mat rows(res.field(), t * dn, dn * dw);
    for (size_t c = 0; c < t; ++c)
        for (size_t e = 0; e < ng; ++e) {
            const gf::Mat& act = n->element_action(grp::Elem(e));
            const size_t ir = c * ng + e;
            for (size_t b = 0; b < dn; ++b)
                for (size_t r = 0; r < dn; ++r) {
                    uint32_t v = act(r, b);
                    if (v == 0) continue;
                    uint32_t* dst = rows.row(c * dn + b) + r * dw;
                    for (size_t w = 0; w < dw; ++w) {
                        uint32_t iv = incl(ir, w);
                        if (iv)
                            dst[w] = res.field().add(dst[w], res.field().mul(v, iv));
                    }
                }
        }
    return hom.dim() - gf::rank(rows);
}

}  // namespace

size_t ext_dim_minimal(const RepPtr& m, const RepPtr& n, size_t i, const ExtOptions& opts) {
    if (i < 1) usage_error("ext_dim: index must be >= 1");
    if (m->group() != n->group() || m->field() != n->field())
        usage_error("ext_dim: modules over different groups or fields");
    if (!m->is_p_group_module())
        usage_error("ext_dim_minimal: minimal resolutions require a p-group");
    Resolution res(m, /*minimal=*/true, opts);
    return ext_from_homology(res, n, i);
}

size_t ext_dim_generic(const RepPtr& m, const RepPtr& n, size_t i, const ExtOptions& opts) {
    if (i < 1) usage_error("ext_dim: index must be >= 1");
    if (m->group() != n->group() || m->field() != n->field())
        usage_error("ext_dim: modules over different groups or fields");
    Resolution res(m, /*minimal=*/false, opts);
    return ext_from_shift(res, n, i);
}

size_t ext_dim(const RepPtr& m, const RepPtr& n, size_t i, const ExtOptions& opts) {
    if (algebra_is_semisimple(m->group(), m->field())) return 0;
    if (m->is_p_group_module()) return ext_dim_minimal(m, n, i, opts);
    return ext_dim_generic(m, n, i, opts);
}

std::vector<size_t> ext_table(const RepPtr& m, const RepPtr& n, size_t cutoff,
                              const ExtOptions& opts, bool stop_at_first_nonzero) {
    if (cutoff < 1) usage_error("ext_table: cutoff must be >= 1");
    std::vector<size_t> table;
    if (algebra_is_semisimple(m->group(), m->field())) {
        table.assign(cutoff, 0);
        return table;
    }
    const bool minimal = m->is_p_group_module();
    Resolution res(m, minimal, opts);
    for (size_t i = 1; i <= cutoff; ++i) {
        size_t d = minimal ? ext_from_homology(res, n, i) : ext_from_shift(res, n, i);
        table.push_back(d);
        if (stop_at_first_nonzero && d > 0) break;
    }
    return table;
}

}  // namespace comack::rep
