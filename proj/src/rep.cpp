#include "comack/rep.hpp"

#include <algorithm>

namespace comack::rep {

namespace {

// Full construction-time validation is exhaustive in the group order; above
// this degree the builders are internal derivations whose defining equations
// are enforced by exact solves instead.
constexpr size_t kValidateDegreeLimit = 300;

bool order_is_p_power(size_t order, uint32_t p) {
    while (order % p == 0) order /= p;
    return order == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Representation
// ---------------------------------------------------------------------------

RepPtr Representation::make(grp::GroupPtr group, gf::PrimeField field,
                            std::vector<gf::Mat> gen_action, std::vector<ComponentTag> tags,
                            bool validate) {
    if (!group) usage_error("Representation: null group");
    if (gen_action.size() != group->generators().size())
        usage_error("Representation: one action matrix per group generator required");
    size_t degree = 0;
    if (!gen_action.empty()) {
        degree = gen_action[0].rows();
    } else if (!tags.empty()) {
        degree = tags.back().offset + tags.back().dim;
    }
    for (const auto& m : gen_action) {
        if (m.rows() != degree || m.cols() != degree)
            usage_error("Representation: action matrices must be square of equal degree");
        if (m.field() != field) usage_error("Representation: action field mismatch");
    }
    if (!tags.empty()) {
        size_t off = 0;
        for (const auto& t : tags) {
            if (t.offset != off) usage_error("Representation: tags must tile the degree");
            off += t.dim;
        }
        if (off != degree) usage_error("Representation: tags do not cover the degree");
    }

    auto r = std::shared_ptr<Representation>(new Representation());
    r->group_ = std::move(group);
    r->field_ = field;
    r->degree_ = degree;
    r->gen_action_ = std::move(gen_action);
    r->tags_ = std::move(tags);
    r->memo_.resize(r->group_->order());

    if (validate && degree <= kValidateDegreeLimit) {
        for (const auto& m : r->gen_action_)
            if (gf::rank(m) != degree)
                usage_error("Representation: generator action is not invertible");
        // Walk the BFS closure; whenever an element is reached twice the two
        // products must agree, which verifies every Cayley relation.
        const auto& g = *r->group_;
        std::vector<std::unique_ptr<gf::Mat>> act(g.order());
        act[g.identity()] = std::make_unique<gf::Mat>(gf::Mat::identity(field, degree));
        std::vector<grp::Elem> queue{g.identity()};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            grp::Elem x = queue[qi];
            for (size_t gi = 0; gi < g.generators().size(); ++gi) {
                grp::Elem y = g.mul(g.generators()[gi], x);
                gf::Mat prod = r->gen_action_[gi].mul(*act[x]);
                if (act[y]) {
                    if (!(*act[y] == prod))
                        usage_error("Representation: generator actions violate a group relation");
                } else {
                    act[y] = std::make_unique<gf::Mat>(std::move(prod));
                    queue.push_back(y);
                }
            }
        }
        // seed the memo while we have everything
        std::lock_guard<std::mutex> lock(r->memo_mutex_);
        r->memo_ = std::move(act);
    }
    return r;
}

const gf::Mat& Representation::element_action(grp::Elem g) const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_[g]) return *memo_[g];
    // build the factorization chain down to a memoized element
    std::vector<grp::Elem> chain;
    grp::Elem cur = g;
    while (!memo_[cur]) {
        chain.push_back(cur);
        if (group_->bfs_gen(cur) == -1) {
            memo_[cur] = std::make_unique<gf::Mat>(gf::Mat::identity(field_, degree_));
            break;
        }
        cur = group_->bfs_prev(cur);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        grp::Elem e = *it;
        if (memo_[e]) continue;
        int gi = group_->bfs_gen(e);
        memo_[e] = std::make_unique<gf::Mat>(
            gen_action_[size_t(gi)].mul(*memo_[group_->bfs_prev(e)]));
    }
    return *memo_[g];
}

bool Representation::is_p_group_module() const {
    return order_is_p_power(group_->order(), field_.p);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

RepPtr trivial_module(const grp::GroupPtr& g, gf::PrimeField f) {
    return perm_module(g, grp::whole_subgroup(g), f);
}

RepPtr regular_module(const grp::GroupPtr& g, gf::PrimeField f) {
    return perm_module(g, grp::trivial_subgroup(g), f);
}

RepPtr perm_module(const grp::GroupPtr& g, const grp::Subgroup& q, gf::PrimeField f) {
    if (q.parent() != g) usage_error("perm_module: subgroup of a different group");
    grp::CosetDecomposition cd = grp::left_cosets(q);
    const size_t d = cd.count();
    std::vector<gf::Mat> actions;
    for (grp::Elem s : g->generators()) {
        gf::Mat m(f, d, d);
        for (size_t i = 0; i < d; ++i) m(cd.coset_of[g->mul(s, cd.reps[i])], i) = 1;
        actions.push_back(std::move(m));
    }
    std::vector<ComponentTag> tags{
        ComponentTag{"k[G/Q" + std::to_string(q.order()) + "]", 0, d, -1, q.order()}};
    return Representation::make(g, f, std::move(actions), std::move(tags));
}

RepPtr free_module(const grp::GroupPtr& g, gf::PrimeField f, size_t rank) {
    const size_t n = g->order();
    std::vector<gf::Mat> actions;
    RepPtr reg = rank > 0 ? regular_module(g, f) : nullptr;
    for (size_t gi = 0; gi < g->generators().size(); ++gi) {
        gf::Mat m(f, rank * n, rank * n);
        for (size_t c = 0; c < rank; ++c) m.paste(c * n, c * n, reg->gen_action()[gi]);
        actions.push_back(std::move(m));
    }
    std::vector<ComponentTag> tags;
    for (size_t c = 0; c < rank; ++c)
        tags.push_back(ComponentTag{"kG#" + std::to_string(c), c * n, n, -1, 1});
    return Representation::make(g, f, std::move(actions), std::move(tags),
                                rank * n <= kValidateDegreeLimit);
}

RepPtr zero_module(const grp::GroupPtr& g, gf::PrimeField f) {
    std::vector<gf::Mat> actions(g->generators().size(), gf::Mat(f, 0, 0));
    return Representation::make(g, f, std::move(actions), {});
}

RepPtr direct_sum(const std::vector<RepPtr>& parts) {
    if (parts.empty()) usage_error("direct_sum: empty summand list");
    const auto& first = *parts[0];
    size_t degree = 0;
    std::vector<ComponentTag> tags;
    for (const auto& p : parts) {
        if (p->group() != first.group() || p->field() != first.field())
            usage_error("direct_sum: mixed groups or fields");
        if (p->tags().empty()) {
            tags.push_back(ComponentTag{"summand", degree, p->degree(), -1, 0});
        } else {
            for (ComponentTag t : p->tags()) {
                t.offset += degree;
                tags.push_back(std::move(t));
            }
        }
        degree += p->degree();
    }
    std::vector<gf::Mat> actions;
    for (size_t gi = 0; gi < first.group()->generators().size(); ++gi) {
        gf::Mat m(first.field(), degree, degree);
        size_t off = 0;
        for (const auto& p : parts) {
            m.paste(off, off, p->gen_action()[gi]);
            off += p->degree();
        }
        actions.push_back(std::move(m));
    }
    return Representation::make(first.group(), first.field(), std::move(actions),
                                std::move(tags), degree <= kValidateDegreeLimit);
}

RepPtr retag(const RepPtr& m, std::vector<ComponentTag> tags) {
    return Representation::make(m->group(), m->field(), m->gen_action(), std::move(tags),
                                /*validate=*/false);
}

RepPtr dual(const RepPtr& m) {
    std::vector<gf::Mat> actions;
    for (const auto& a : m->gen_action()) {
        auto inv = gf::solve(a, gf::Mat::identity(m->field(), m->degree()));
        if (!inv) internal_error("dual: action matrix not invertible");
        actions.push_back(inv->transpose());
    }
    return Representation::make(m->group(), m->field(), std::move(actions), m->tags(),
                                m->degree() <= kValidateDegreeLimit);
}

// ---------------------------------------------------------------------------
// ModuleMap / exact sequences
// ---------------------------------------------------------------------------

ModuleMap ModuleMap::make(RepPtr source, RepPtr target, gf::Mat matrix) {
    if (!source || !target) usage_error("ModuleMap: null endpoint");
    if (source->group() != target->group() || source->field() != target->field())
        usage_error("ModuleMap: endpoints over different groups or fields");
    if (matrix.rows() != target->degree() || matrix.cols() != source->degree())
        usage_error("ModuleMap: matrix shape does not match endpoints");
    ModuleMap f{std::move(source), std::move(target), std::move(matrix)};
    if (std::max(f.source->degree(), f.target->degree()) <= kValidateDegreeLimit &&
        !f.is_equivariant())
        usage_error("ModuleMap: matrix is not equivariant");
    return f;
}

bool ModuleMap::is_equivariant() const {
    for (size_t gi = 0; gi < source->group()->generators().size(); ++gi) {
        gf::Mat lhs = matrix.mul(source->gen_action()[gi]);
        gf::Mat rhs = target->gen_action()[gi].mul(matrix);
        if (lhs != rhs) return false;
    }
    return true;
}

ModuleMap ModuleMap::then(const ModuleMap& next) const {
    if (next.source->degree() != target->degree() || next.source->group() != target->group())
        usage_error("ModuleMap::then: endpoints do not compose");
    return ModuleMap{source, next.target, next.matrix.mul(matrix)};
}

ModuleMap dual_map(const ModuleMap& f) {
    return ModuleMap::make(dual(f.target), dual(f.source), f.matrix.transpose());
}

ExactSequenceWitness ExactSequenceWitness::check(std::vector<ModuleMap> maps) {
    ExactSequenceWitness w;
    w.maps = std::move(maps);
    w.exact = true;
    for (size_t i = 0; i + 1 < w.maps.size(); ++i) {
        const ModuleMap& f = w.maps[i];
        const ModuleMap& g = w.maps[i + 1];
        if (f.target->degree() != g.source->degree() || f.target->group() != g.source->group())
            usage_error("ExactSequenceWitness: maps do not compose");
        gf::Subspace image = gf::Subspace::span_rows(f.matrix.transpose());
        gf::Subspace ker = gf::kernel(g.matrix);
        ExactnessJunction j{image.dim(), ker.dim(), image == ker};
        w.exact = w.exact && j.exact;
        w.junctions.push_back(j);
    }
    return w;
}

// ---------------------------------------------------------------------------
// HomSpace
// ---------------------------------------------------------------------------

namespace {

std::vector<ComponentTag> tags_or_whole(const RepPtr& r) {
    if (!r->tags().empty()) return r->tags();
    return {ComponentTag{"all", 0, r->degree(), -1, 0}};
}

// action matrices restricted to a tag's diagonal block
std::vector<gf::Mat> block_actions(const RepPtr& r, const ComponentTag& t) {
    std::vector<gf::Mat> out;
    out.reserve(r->gen_action().size());
    for (const auto& a : r->gen_action()) out.push_back(a.submatrix(t.offset, t.offset, t.dim, t.dim));
    return out;
}

void check_block_diagonal(const RepPtr& r, const std::vector<ComponentTag>& tags) {
    if (r->degree() > kValidateDegreeLimit || tags.size() <= 1) return;
    for (const auto& a : r->gen_action())
        for (const auto& t : tags)
            for (size_t i = t.offset; i < t.offset + t.dim; ++i)
                for (size_t j = 0; j < r->degree(); ++j)
                    if ((j < t.offset || j >= t.offset + t.dim) && a(i, j) != 0)
                        internal_error("HomSpace: action is not block-diagonal over the tags");
}

}  // namespace

HomSpace::HomSpace(RepPtr v, RepPtr w) : v_(std::move(v)), w_(std::move(w)) {
    if (v_->group() != w_->group() || v_->field() != w_->field())
        usage_error("HomSpace: modules over different groups or fields");
    src_tags_ = tags_or_whole(v_);
    dst_tags_ = tags_or_whole(w_);
    check_block_diagonal(v_, src_tags_);
    check_block_diagonal(w_, dst_tags_);
    const auto f = v_->field();
    const size_t ng = v_->group()->generators().size();

    blocks_.resize(src_tags_.size() * dst_tags_.size());
    size_t offset = 0;
    for (size_t s = 0; s < src_tags_.size(); ++s) {
        std::vector<gf::Mat> src_ops = block_actions(v_, src_tags_[s]);
        for (size_t d = 0; d < dst_tags_.size(); ++d) {
            std::vector<gf::Mat> dst_ops = block_actions(w_, dst_tags_[d]);
            std::vector<std::pair<gf::Mat, gf::Mat>> ops;
            for (size_t gi = 0; gi < ng; ++gi) ops.emplace_back(src_ops[gi], dst_ops[gi]);
            Block& b = blocks_[s * dst_tags_.size() + d];
            b.local = gf::intertwiner_basis(f, src_tags_[s].dim, dst_tags_[d].dim, ops);
            b.offset = offset;
            b.dim = b.local.size();
            offset += b.dim;
            if (b.dim > 0) {
                gf::Mat cols(f, src_tags_[s].dim * dst_tags_[d].dim, b.dim);
                for (size_t k = 0; k < b.dim; ++k) {
                    gf::Mat flat = b.local[k].flatten_column();
                    for (size_t r = 0; r < flat.rows(); ++r) cols(r, k) = flat(r, 0);
                }
                b.solver = std::make_unique<gf::Solver>(cols);
            }
        }
    }
    dim_ = offset;
}

std::pair<size_t, size_t> HomSpace::block_range(size_t src_blk, size_t dst_blk) const {
    const Block& b = blocks_[src_blk * dst_tags_.size() + dst_blk];
    return {b.offset, b.offset + b.dim};
}

std::vector<uint32_t> HomSpace::express(const gf::Mat& map) const {
    if (map.rows() != w_->degree() || map.cols() != v_->degree())
        usage_error("HomSpace::express: map has wrong shape");
    std::vector<uint32_t> coords(dim_, 0);
    for (size_t s = 0; s < src_tags_.size(); ++s)
        for (size_t d = 0; d < dst_tags_.size(); ++d) {
            const Block& b = blocks_[s * dst_tags_.size() + d];
            gf::Mat slice = map.submatrix(dst_tags_[d].offset, src_tags_[s].offset,
                                          dst_tags_[d].dim, src_tags_[s].dim);
            if (b.dim == 0) {
                if (!slice.is_zero())
                    internal_error("HomSpace::express: map not in the hom space");
                continue;
            }
            auto x = b.solver->solve(slice.flatten_column());
            if (!x) internal_error("HomSpace::express: map not in the hom space");
            for (size_t k = 0; k < b.dim; ++k) coords[b.offset + k] = (*x)(k, 0);
        }
    return coords;
}

gf::Mat HomSpace::materialize(const std::vector<uint32_t>& coords) const {
    if (coords.size() != dim_) usage_error("HomSpace::materialize: wrong coordinate count");
    gf::Mat out(v_->field(), w_->degree(), v_->degree());
    for (size_t s = 0; s < src_tags_.size(); ++s)
        for (size_t d = 0; d < dst_tags_.size(); ++d) {
            const Block& b = blocks_[s * dst_tags_.size() + d];
            for (size_t k = 0; k < b.dim; ++k) {
                uint32_t c = coords[b.offset + k];
                if (c == 0) continue;
                const gf::Mat& loc = b.local[k];
                for (size_t i = 0; i < loc.rows(); ++i)
                    for (size_t j = 0; j < loc.cols(); ++j)
                        out(dst_tags_[d].offset + i, src_tags_[s].offset + j) = v_->field().add(
                            out(dst_tags_[d].offset + i, src_tags_[s].offset + j),
                            v_->field().mul(c, loc(i, j)));
            }
        }
    return out;
}

const std::vector<gf::Mat>& HomSpace::basis() const {
    if (basis_.empty() && dim_ > 0) {
        for (size_t i = 0; i < dim_; ++i) {
            std::vector<uint32_t> coords(dim_, 0);
            coords[i] = 1;
            basis_.push_back(materialize(coords));
        }
    }
    return basis_;
}

std::vector<gf::Mat> hom_space(const RepPtr& m, const RepPtr& n) {
    return HomSpace(m, n).basis();
}

size_t hom_dim(const RepPtr& m, const RepPtr& n) { return HomSpace(m, n).dim(); }

// ---------------------------------------------------------------------------
// Radical / socle / covers / hulls
// ---------------------------------------------------------------------------

namespace {

void require_p_group(const RepPtr& m, const char* what) {
    if (!m->is_p_group_module())
        usage_error(std::string(what) + ": only valid over p-group algebras (|G| must be a power of p)");
}

}  // namespace

gf::Subspace radical_submodule(const RepPtr& m) {
    require_p_group(m, "radical_submodule");
    const auto f = m->field();
    const size_t d = m->degree();
    gf::Mat stacked(f, 0, d);
    for (const auto& a : m->gen_action()) {
        gf::Mat diff = a.sub(gf::Mat::identity(f, d));
        stacked = stacked.vstack(diff.transpose());  // rows span the image of (a - 1)
    }
    return gf::Subspace::span_rows(stacked);
}

gf::Subspace socle(const RepPtr& m) {
    require_p_group(m, "socle");
    const auto f = m->field();
    const size_t d = m->degree();
    gf::Mat stacked(f, 0, d);
    for (const auto& a : m->gen_action()) stacked = stacked.vstack(a.sub(gf::Mat::identity(f, d)));
    return gf::kernel(stacked);
}

ModuleMap projective_cover(const RepPtr& m) {
    require_p_group(m, "projective_cover");
    const auto f = m->field();
    const size_t d = m->degree();
    gf::Subspace rad = radical_submodule(m);
    // greedy standard-basis lifts of a basis of m / rad m
    std::vector<size_t> lifts;
    gf::Subspace span = rad;
    for (size_t j = 0; j < d && span.dim() < d; ++j) {
        gf::Mat ej(f, 1, d);
        ej(0, j) = 1;
        if (!span.contains_row(ej)) {
            lifts.push_back(j);
            span = span.sum(gf::Subspace::span_rows(ej));
        }
    }
    const size_t t = lifts.size();
    RepPtr cover = free_module(m->group(), f, t);
    const size_t n = m->group()->order();
    gf::Mat cm(f, d, t * n);
    for (size_t c = 0; c < t; ++c)
        for (size_t g = 0; g < n; ++g) {
            const gf::Mat& act = m->element_action(grp::Elem(g));
            for (size_t i = 0; i < d; ++i) cm(i, c * n + g) = act(i, lifts[c]);
        }
    ModuleMap cov{cover, m, std::move(cm)};
    if (std::max(cover->degree(), d) <= kValidateDegreeLimit && !cov.is_equivariant())
        internal_error("projective_cover: map is not equivariant");
    if (gf::rank(cov.matrix) != d) internal_error("projective_cover: map is not surjective");
    if (cover->degree() <= kValidateDegreeLimit && t > 0) {
        // minimality: the kernel lies inside rad(cover)
        gf::Subspace ker = gf::kernel(cov.matrix);
        if (!radical_submodule(cover).contains(ker))
            internal_error("projective_cover: kernel not contained in the radical");
    }
    return cov;
}

ModuleMap injective_hull(const RepPtr& m) {
    require_p_group(m, "injective_hull");
    RepPtr d = dual(m);
    ModuleMap cover = projective_cover(d);
    const size_t s = cover.source->tags().size();
    if (s != socle(m).dim()) internal_error("injective_hull: socle dimension mismatch");
    // duals of permutation modules have literally the same matrices, so the
    // dual of the cover is a map m -> kG^s on the nose
    RepPtr hull = free_module(m->group(), m->field(), s);
    ModuleMap emb{m, hull, cover.matrix.transpose()};
    if (std::max(m->degree(), hull->degree()) <= kValidateDegreeLimit && !emb.is_equivariant())
        internal_error("injective_hull: embedding is not equivariant");
    if (gf::rank(emb.matrix) != m->degree()) internal_error("injective_hull: not injective");
    return emb;
}

// ---------------------------------------------------------------------------
// Sub / quotient representations
// ---------------------------------------------------------------------------

std::pair<RepPtr, ModuleMap> submodule_rep(const RepPtr& m, const gf::Subspace& space) {
    if (space.ambient() != m->degree()) usage_error("submodule_rep: ambient mismatch");
    const auto f = m->field();
    const size_t dim = space.dim();
    gf::Mat incl = space.basis().transpose();  // degree x dim
    gf::Solver solver(incl);
    std::vector<gf::Mat> actions;
    for (const auto& a : m->gen_action()) {
        gf::Mat moved = a.mul(incl);
        auto x = solver.solve(moved);
        if (!x) usage_error("submodule_rep: subspace is not invariant");
        actions.push_back(std::move(*x));
    }
    RepPtr sub = Representation::make(m->group(), f, std::move(actions), {},
                                      dim <= kValidateDegreeLimit);
    ModuleMap inc{sub, m, std::move(incl)};
    return {sub, std::move(inc)};
}

std::pair<RepPtr, ModuleMap> quotient_rep(const RepPtr& m, const gf::Subspace& space) {
    if (space.ambient() != m->degree()) usage_error("quotient_rep: ambient mismatch");
    const auto f = m->field();
    const size_t d = m->degree();
    const gf::Mat& basis = space.basis();
    // pivot columns of the RREF basis; quotient coordinates = the free columns
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
    std::vector<gf::Mat> actions;
    for (const auto& a : m->gen_action()) {
        // invariance check: a maps the subspace into itself
        gf::Mat moved = basis.mul(a.transpose());
        for (size_t i = 0; i < moved.rows(); ++i)
            if (!space.contains_row(moved.submatrix(i, 0, 1, d)))
                usage_error("quotient_rep: subspace is not invariant");
        actions.push_back(proj.mul(a).mul(lift));
    }
    RepPtr qr = Representation::make(m->group(), f, std::move(actions), {},
                                     q <= kValidateDegreeLimit);
    ModuleMap pr{m, qr, std::move(proj)};
    return {qr, std::move(pr)};
}

RepPtr syzygy(const RepPtr& m) {
    ModuleMap cover = projective_cover(m);
    return submodule_rep(cover.source, gf::kernel(cover.matrix)).first;
}

// ---------------------------------------------------------------------------
// Restriction decomposition
// ---------------------------------------------------------------------------

RestrictionDecomposition decompose_permutation_restriction(const grp::GroupPtr& g,
                                                           const grp::Subgroup& p_sub,
                                                           const grp::Subgroup& q,
                                                           gf::PrimeField f) {
    if (p_sub.parent() != g || q.parent() != g)
        usage_error("decompose_permutation_restriction: subgroups of a different group");
    grp::CosetDecomposition cd = grp::left_cosets(q);
    std::vector<grp::CosetOrbit> orbits = grp::orbits_on_cosets(p_sub, cd);

    grp::SubgroupGroup pg = grp::subgroup_as_group(p_sub);
    std::vector<int> parent_to_p(g->order(), -1);
    for (size_t i = 0; i < pg.to_parent.size(); ++i) parent_to_p[pg.to_parent[i]] = int(i);

    RestrictionDecomposition out;
    // restricted representation: generators of P acting on the G/Q cosets
    const size_t nc = cd.count();
    std::vector<gf::Mat> res_actions;
    for (grp::Elem pgen : pg.group->generators()) {
        grp::Elem parent_gen = pg.to_parent[pgen];
        gf::Mat m(f, nc, nc);
        for (size_t i = 0; i < nc; ++i) m(cd.coset_of[g->mul(parent_gen, cd.reps[i])], i) = 1;
        res_actions.push_back(std::move(m));
    }
    // direct sum of k[P/stab] and the coset-wise bijection
    std::vector<RepPtr> parts;
    gf::Mat iso(f, nc, nc);
    size_t offset = 0;
    for (const auto& orb : orbits) {
        std::vector<grp::Elem> stab_p;
        for (grp::Elem e : orb.stabilizer.elements()) stab_p.push_back(grp::Elem(parent_to_p[e]));
        std::sort(stab_p.begin(), stab_p.end());
        grp::Subgroup stab_in_p(pg.group, stab_p);
        grp::CosetDecomposition pcd = grp::left_cosets(stab_in_p);
        parts.push_back(perm_module(pg.group, stab_in_p, f));
        grp::Elem orbit_rep_elem = cd.reps[orb.coset_indices.front()];
        for (size_t local = 0; local < pcd.count(); ++local) {
            grp::Elem u = pg.to_parent[pcd.reps[local]];
            iso(cd.coset_of[g->mul(u, orbit_rep_elem)], offset + local) = 1;
        }
        offset += pcd.count();
        out.stabilizers.push_back(orb.stabilizer);
    }
    if (offset != nc) internal_error("decompose_permutation_restriction: size mismatch");
    RepPtr sum = direct_sum(parts);
    RepPtr res = Representation::make(pg.group, f, std::move(res_actions), {},
                                      nc <= kValidateDegreeLimit);
    // iso must be a permutation matrix intertwining the two actions
    for (size_t c = 0; c < nc; ++c) {
        size_t ones = 0;
        for (size_t r = 0; r < nc; ++r) ones += iso(r, c);
        if (ones != 1) internal_error("decompose_permutation_restriction: map is not a bijection");
    }
    for (size_t gi = 0; gi < pg.group->generators().size(); ++gi)
        if (iso.mul(sum->gen_action()[gi]) != res->gen_action()[gi].mul(iso))
            internal_error("decompose_permutation_restriction: isomorphism check failed");
    out.isomorphism_verified = true;
    return out;
}

}  // namespace comack::rep
