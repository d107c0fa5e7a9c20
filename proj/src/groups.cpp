#include "comack/groups.hpp"

#include "comack/gf.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace comack::grp {

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

GroupPtr FiniteGroup::from_cayley(std::vector<Elem> cayley, size_t order, Elem identity,
                                  std::vector<Elem> generators,
                                  std::vector<std::string> labels) {
    if (order == 0) usage_error("group order must be positive");
    if (cayley.size() != order * order) usage_error("Cayley table has wrong size");
    for (Elem e : cayley)
        if (e >= order) usage_error("Cayley table entry out of range");

    auto mul = [&](Elem a, Elem b) { return cayley[size_t(a) * order + b]; };

    // Latin square
    for (size_t a = 0; a < order; ++a) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (size_t b = 0; b < order; ++b) {
            Elem r = mul(Elem(a), Elem(b)), c = mul(Elem(b), Elem(a));
            if (seen_row[r] || seen_col[c]) usage_error("Cayley table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    // identity
    for (size_t a = 0; a < order; ++a)
        if (mul(identity, Elem(a)) != a || mul(Elem(a), identity) != a)
            usage_error("claimed identity is not an identity");
    // associativity, exhaustively (order <= 64 keeps this cheap)
    for (size_t a = 0; a < order; ++a)
        for (size_t b = 0; b < order; ++b)
            for (size_t c = 0; c < order; ++c)
                if (mul(mul(Elem(a), Elem(b)), Elem(c)) != mul(Elem(a), mul(Elem(b), Elem(c))))
                    usage_error("Cayley table is not associative");
    // inverses
    std::vector<Elem> inverse(order, 0);
    for (size_t a = 0; a < order; ++a) {
        bool found = false;
        for (size_t b = 0; b < order; ++b)
            if (mul(Elem(a), Elem(b)) == identity) {
                if (mul(Elem(b), Elem(a)) != identity) usage_error("one-sided inverse");
                inverse[a] = Elem(b);
                found = true;
                break;
            }
        if (!found) usage_error("element without inverse");
    }
    // dedupe generators, drop identity
    std::vector<Elem> gens;
    for (Elem g : generators) {
        if (g >= order) usage_error("generator index out of range");
        if (g != identity && std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(g);
    }
    // BFS from identity over left multiplication by generators; also checks
    // that the generators generate.
    std::vector<int> bfs_gen(order, -2);
    std::vector<Elem> bfs_prev(order, 0);
    std::queue<Elem> todo;
    bfs_gen[identity] = -1;
    todo.push(identity);
    size_t reached = 1;
    while (!todo.empty()) {
        Elem x = todo.front();
        todo.pop();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Elem y = mul(gens[gi], x);
            if (bfs_gen[y] == -2) {
                bfs_gen[y] = int(gi);
                bfs_prev[y] = x;
                todo.push(y);
                ++reached;
            }
        }
    }
    if (reached != order) usage_error("generators do not generate the group");
    if (!labels.empty() && labels.size() != order) usage_error("label list has wrong size");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->cayley_ = std::move(cayley);
    g->identity_ = identity;
    g->inverse_ = std::move(inverse);
    g->generators_ = std::move(gens);
    g->labels_ = std::move(labels);
    g->bfs_gen_ = std::move(bfs_gen);
    g->bfs_prev_ = std::move(bfs_prev);
    return g;
}

std::string FiniteGroup::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    return "g" + std::to_string(a);
}

bool FiniteGroup::is_abelian() const {
    for (size_t a = 0; a < order_; ++a)
        for (size_t b = a + 1; b < order_; ++b)
            if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
    return true;
}

size_t FiniteGroup::element_order(Elem a) const {
    size_t n = 1;
    Elem x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Subgroup
// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    if (!parent_) usage_error("Subgroup: null parent");
    if (!std::is_sorted(elements_.begin(), elements_.end()) ||
        std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        usage_error("Subgroup: element set must be sorted and duplicate-free");
    if (elements_.empty()) usage_error("Subgroup: empty element set");
    if (!contains(parent_->identity())) usage_error("Subgroup: missing identity");
    for (Elem a : elements_) {
        if (a >= parent_->order()) usage_error("Subgroup: element out of range");
        if (!contains(parent_->inverse(a))) usage_error("Subgroup: not closed under inverse");
        for (Elem b : elements_)
            if (!contains(parent_->mul(a, b))) usage_error("Subgroup: not closed under product");
    }
    if (parent_->order() % elements_.size() != 0)
        internal_error("Subgroup: Lagrange violated");  // unreachable given closure
}

bool Subgroup::contains(Elem e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

Subgroup trivial_subgroup(const GroupPtr& g) {
    return Subgroup(g, {g->identity()});
}

Subgroup whole_subgroup(const GroupPtr& g) {
    std::vector<Elem> all(g->order());
    for (size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
    return Subgroup(g, all);
}

Subgroup generated_subgroup(const GroupPtr& g, std::vector<Elem> seed) {
    std::set<Elem> s(seed.begin(), seed.end());
    s.insert(g->identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> cur(s.begin(), s.end());
        for (Elem a : cur)
            for (Elem b : cur)
                if (s.insert(g->mul(a, b)).second) grew = true;
    }
    return Subgroup(g, std::vector<Elem>(s.begin(), s.end()));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, size_t order_bound) {
    if (g->order() > order_bound)
        resource_error("all_subgroups: group order " + std::to_string(g->order()) +
                       " exceeds bound " + std::to_string(order_bound));
    std::set<std::vector<Elem>> found;
    // cyclic seeds
    for (size_t a = 0; a < g->order(); ++a)
        found.insert(generated_subgroup(g, {Elem(a)}).elements());
    // close under pairwise joins
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Elem>> cur(found.begin(), found.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<Elem> seed = cur[i];
                seed.insert(seed.end(), cur[j].begin(), cur[j].end());
                std::sort(seed.begin(), seed.end());
                seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
                auto join = generated_subgroup(g, std::move(seed)).elements();
                if (found.insert(join).second) grew = true;
            }
    }
    std::vector<std::vector<Elem>> sets(found.begin(), found.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(g, std::move(s));
    return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, uint32_t p) {
    size_t pa = 1;
    while (g->order() % (pa * p) == 0) pa *= p;
    if (pa == 1) return trivial_subgroup(g);
    for (const Subgroup& s : all_subgroups(g))
        if (s.order() == pa) return s;  // list is sorted; first hit is canonical
    internal_error("sylow_subgroup: no subgroup of maximal p-power order found");
}

SubgroupGroup subgroup_as_group(const Subgroup& sub) {
    const auto& par = *sub.parent();
    const auto& elems = sub.elements();  // sorted
    const size_t m = elems.size();
    std::vector<int> to_new(par.order(), -1);
    for (size_t i = 0; i < m; ++i) to_new[elems[i]] = int(i);
    std::vector<Elem> cayley(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            cayley[i * m + j] = Elem(to_new[par.mul(elems[i], elems[j])]);
    // greedy irredundant generating set, in element order
    std::vector<Elem> gens_parent;
    Subgroup cur = trivial_subgroup(sub.parent());
    for (Elem e : elems) {
        if (cur.contains(e)) continue;
        gens_parent.push_back(e);
        std::vector<Elem> seed = cur.elements();
        seed.push_back(e);
        std::sort(seed.begin(), seed.end());
        cur = generated_subgroup(sub.parent(), std::move(seed));
        if (cur.order() == m) break;
    }
    std::vector<Elem> gens;
    for (Elem e : gens_parent) gens.push_back(Elem(to_new[e]));
    Elem ident = Elem(to_new[par.identity()]);
    std::vector<std::string> labels;
    for (Elem e : elems) labels.push_back(par.label(e));
    SubgroupGroup out;
    out.group = FiniteGroup::from_cayley(std::move(cayley), m, ident, std::move(gens),
                                         std::move(labels));
    out.to_parent = elems;
    return out;
}

// ---------------------------------------------------------------------------
// Cosets, double cosets, orbits
// ---------------------------------------------------------------------------

CosetDecomposition left_cosets(const Subgroup& q) {
    const auto& g = *q.parent();
    CosetDecomposition cd{q, {}, std::vector<Elem>(g.order(), 0)};
    std::vector<bool> assigned(g.order(), false);
    for (size_t e = 0; e < g.order(); ++e) {
        if (assigned[e]) continue;
        Elem idx = Elem(cd.reps.size());
        cd.reps.push_back(Elem(e));
        for (Elem s : q.elements()) {
            Elem x = g.mul(Elem(e), s);
            assigned[x] = true;
            cd.coset_of[x] = idx;
        }
    }
    if (cd.reps.size() * q.order() != g.order())
        internal_error("left_cosets: cosets do not partition the group");
    return cd;
}

DoubleCosets double_cosets(const Subgroup& q, const Subgroup& r) {
    if (q.parent() != r.parent()) usage_error("double_cosets: different parent groups");
    const auto& g = *q.parent();
    DoubleCosets dc;
    dc.class_of.assign(g.order(), Elem(0));
    std::vector<bool> assigned(g.order(), false);
    for (size_t e = 0; e < g.order(); ++e) {
        if (assigned[e]) continue;
        Elem idx = Elem(dc.reps.size());
        dc.reps.push_back(Elem(e));
        for (Elem a : q.elements())
            for (Elem b : r.elements()) {
                Elem x = g.mul(g.mul(a, Elem(e)), b);
                assigned[x] = true;
                dc.class_of[x] = idx;
            }
    }
    dc.count = dc.reps.size();
    return dc;
}

std::vector<CosetOrbit> orbits_on_cosets(const Subgroup& sub,
                                         const CosetDecomposition& cosets) {
    if (sub.parent() != cosets.subgroup.parent())
        usage_error("orbits_on_cosets: different parent groups");
    const auto& g = *sub.parent();
    const size_t nc = cosets.count();
    std::vector<bool> seen(nc, false);
    std::vector<CosetOrbit> out;
    for (size_t c = 0; c < nc; ++c) {
        if (seen[c]) continue;
        std::set<Elem> orbit;
        Elem rep_elem = cosets.reps[c];
        for (Elem s : sub.elements()) orbit.insert(cosets.coset_of[g.mul(s, rep_elem)]);
        std::vector<Elem> stab;
        for (Elem s : sub.elements())
            if (cosets.coset_of[g.mul(s, rep_elem)] == c) stab.push_back(s);
        for (Elem o : orbit) seen[o] = true;
        out.push_back(CosetOrbit{std::vector<Elem>(orbit.begin(), orbit.end()),
                                 Subgroup(sub.parent(), std::move(stab))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

GroupPtr cyclic_group(size_t m) {
    if (m == 0 || m > kDefaultOrderBound) usage_error("cyclic: order out of range");
    std::vector<Elem> cayley(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) cayley[i * m + j] = Elem((i + j) % m);
    std::vector<Elem> gens;
    if (m > 1) gens.push_back(1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
    return FiniteGroup::from_cayley(std::move(cayley), m, 0, std::move(gens),
                                    std::move(labels));
}

GroupPtr elementary_abelian_group(uint32_t p, uint32_t r, size_t order_bound) {
    if (!gf::is_prime(p)) usage_error("elemab: p must be prime");
    if (r == 0) return cyclic_group(1);
    GroupPtr g = cyclic_group(p);
    for (uint32_t i = 1; i < r; ++i) g = direct_product(g, cyclic_group(p), order_bound);
    return g;
}

GroupPtr dihedral_group(size_t m) {
    if (m < 2 || m % 2 != 0 || m > kDefaultOrderBound)
        usage_error("dihedral: order must be even, between 2 and 64");
    const size_t n = m / 2;  // rotation count; element (i, j) = r^i s^j at index j*n + i
    auto idx = [n](size_t i, size_t j) { return Elem(j * n + i); };
    std::vector<Elem> cayley(m * m);
    for (size_t j1 = 0; j1 < 2; ++j1)
        for (size_t i1 = 0; i1 < n; ++i1)
            for (size_t j2 = 0; j2 < 2; ++j2)
                for (size_t i2 = 0; i2 < n; ++i2) {
                    // r^i1 s^j1 · r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    size_t i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
                    size_t j = (j1 + j2) % 2;
                    cayley[size_t(idx(i1, j1)) * m + idx(i2, j2)] = idx(i, j);
                }
    std::vector<Elem> gens;
    if (n > 1) gens.push_back(idx(1, 0));
    gens.push_back(idx(0, 1));
    std::vector<std::string> labels;
    for (size_t j = 0; j < 2; ++j)
        for (size_t i = 0; i < n; ++i) {
            std::string s = i == 0 && j == 0 ? "e" : "";
            if (i > 0) s += "r^" + std::to_string(i);
            if (j > 0) s += "s";
            labels.push_back(s);
        }
    return FiniteGroup::from_cayley(std::move(cayley), m, 0, std::move(gens),
                                    std::move(labels));
}

GroupPtr quaternion_group_8() {
    // indices: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; axes 0..3 = 1,i,j,k
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int axis_sign[4][4] = {
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    // axis_sign[a][b]: sign of (unit a)·(unit b): i·j = +k, j·i = -k, etc.
    std::vector<Elem> cayley(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax = a / 2, bx = b / 2;
            int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * axis_sign[ax][bx];
            int cx = axis_mul[ax][bx];
            cayley[a * 8 + b] = Elem(cx * 2 + (sign < 0 ? 1 : 0));
        }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup::from_cayley(std::move(cayley), 8, 0, {2, 4}, std::move(labels));
}

GroupPtr symmetric_group_3() {
    return permutation_group({{1, 2, 0}, {1, 0, 2}});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, size_t order_bound) {
    size_t n = a->order() * b->order();
    if (n > order_bound) resource_error("direct_product: order exceeds bound");
    auto idx = [&](Elem x, Elem y) { return Elem(size_t(x) * b->order() + y); };
    std::vector<Elem> cayley(n * n);
    for (size_t x1 = 0; x1 < a->order(); ++x1)
        for (size_t y1 = 0; y1 < b->order(); ++y1)
            for (size_t x2 = 0; x2 < a->order(); ++x2)
                for (size_t y2 = 0; y2 < b->order(); ++y2)
                    cayley[size_t(idx(Elem(x1), Elem(y1))) * n + idx(Elem(x2), Elem(y2))] =
                        idx(a->mul(Elem(x1), Elem(x2)), b->mul(Elem(y1), Elem(y2)));
    std::vector<Elem> gens;
    for (Elem g : a->generators()) gens.push_back(idx(g, b->identity()));
    for (Elem g : b->generators()) gens.push_back(idx(a->identity(), g));
    std::vector<std::string> labels;
    for (size_t x = 0; x < a->order(); ++x)
        for (size_t y = 0; y < b->order(); ++y)
            labels.push_back("(" + a->label(Elem(x)) + "," + b->label(Elem(y)) + ")");
    return FiniteGroup::from_cayley(std::move(cayley), n,
                                    idx(a->identity(), b->identity()), std::move(gens),
                                    std::move(labels));
}

// ---------------------------------------------------------------------------
// Permutation groups
// ---------------------------------------------------------------------------

Perm parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) usage_error("parse_cycles: empty permutation");
    int max_point = 0;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') usage_error("parse_cycles: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i == text.size() || !isdigit((unsigned char)text[i]))
                usage_error("parse_cycles: expected point or ')' in \"" + text + "\"");
            int v = 0;
            while (i < text.size() && isdigit((unsigned char)text[i]))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > 64) usage_error("parse_cycles: point out of range 1..64");
            cyc.push_back(v);
            max_point = std::max(max_point, v);
        }
        for (size_t a = 0; a < cyc.size(); ++a)
            for (size_t b = a + 1; b < cyc.size(); ++b)
                if (cyc[a] == cyc[b]) usage_error("parse_cycles: repeated point in a cycle");
        cycles.push_back(std::move(cyc));
    }
    Perm p(std::max(max_point, 1));
    for (size_t j = 0; j < p.size(); ++j) p[j] = uint8_t(j);
    std::vector<bool> touched(p.size(), false);
    for (const auto& cyc : cycles) {
        for (int v : cyc) {
            if (touched[v - 1]) usage_error("parse_cycles: point appears in two cycles");
            touched[v - 1] = true;
        }
        for (size_t j = 0; j < cyc.size(); ++j)
            p[cyc[j] - 1] = uint8_t(cyc[(j + 1) % cyc.size()] - 1);
    }
    return p;
}

GroupPtr permutation_group(const std::vector<Perm>& generators, size_t order_bound) {
    if (generators.empty()) usage_error("permutation_group: no generators");
    size_t deg = 0;
    for (const auto& g : generators) deg = std::max(deg, g.size());
    std::vector<Perm> gens;
    for (Perm g : generators) {
        size_t old = g.size();
        g.resize(deg);
        for (size_t j = old; j < deg; ++j) g[j] = uint8_t(j);
        std::vector<bool> seen(deg, false);
        for (uint8_t v : g) {
            if (v >= deg || seen[v]) usage_error("permutation_group: not a permutation");
            seen[v] = true;
        }
        gens.push_back(std::move(g));
    }
    auto compose = [deg](const Perm& s, const Perm& t) {  // (s∘t)(x) = s(t(x))
        Perm r(deg);
        for (size_t x = 0; x < deg; ++x) r[x] = s[t[x]];
        return r;
    };
    Perm ident(deg);
    for (size_t j = 0; j < deg; ++j) ident[j] = uint8_t(j);
    std::set<Perm> elems{ident};
    std::queue<Perm> todo;
    todo.push(ident);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            Perm nxt = compose(g, cur);
            if (elems.insert(nxt).second) {
                if (elems.size() > order_bound)
                    resource_error("permutation_group: order exceeds bound " +
                                   std::to_string(order_bound));
                todo.push(nxt);
            }
        }
    }
    std::vector<Perm> sorted(elems.begin(), elems.end());  // lex order; identity first
    std::map<Perm, Elem> index;
    for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = Elem(i);
    const size_t n = sorted.size();
    std::vector<Elem> cayley(n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) cayley[a * n + b] = index[compose(sorted[a], sorted[b])];
    std::vector<Elem> gidx;
    for (const auto& g : gens) gidx.push_back(index[g]);
    std::vector<std::string> labels;
    for (const auto& s : sorted) {
        std::ostringstream os;
        os << "[";
        for (size_t j = 0; j < s.size(); ++j) os << int(s[j]) + 1 << (j + 1 < s.size() ? " " : "");
        os << "]";
        labels.push_back(os.str());
    }
    return FiniteGroup::from_cayley(std::move(cayley), n, index[ident], std::move(gidx),
                                    std::move(labels));
}

// ---------------------------------------------------------------------------
// Spec grammar
// ---------------------------------------------------------------------------

namespace {

struct SpecParser {
    const std::string& s;
    size_t pos = 0;
    size_t bound;

    std::string take_name() {
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }
    size_t take_number() {
        if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
            usage_error("group spec: expected number in \"" + s + "\"");
        size_t v = 0;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
        return v;
    }
    void expect(char c) {
        if (pos >= s.size() || s[pos] != c)
            usage_error(std::string("group spec: expected '") + c + "' in \"" + s + "\"");
        ++pos;
    }

    GroupPtr parse() {
        std::string name = take_name();
        if (name == "cyclic") {
            expect(':');
            return cyclic_group(take_number());
        }
        if (name == "elemab") {
            expect(':');
            size_t p = take_number();
            expect(':');
            size_t r = take_number();
            return elementary_abelian_group(uint32_t(p), uint32_t(r), bound);
        }
        if (name == "dihedral") {
            expect(':');
            return dihedral_group(take_number());
        }
        if (name == "quaternion") {
            expect(':');
            if (take_number() != 8) usage_error("group spec: only quaternion:8 is supported");
            return quaternion_group_8();
        }
        if (name == "sym") {
            expect(':');
            if (take_number() != 3) usage_error("group spec: only sym:3 is supported");
            return symmetric_group_3();
        }
        if (name == "product") {
            expect(':');
            GroupPtr a = parse();
            expect(',');
            GroupPtr b = parse();
            return direct_product(a, b, bound);
        }
        if (name == "perm") {
            expect(':');
            expect('"');
            size_t end = s.find('"', pos);
            if (end == std::string::npos) usage_error("group spec: unterminated perm string");
            std::string body = s.substr(pos, end - pos);
            pos = end + 1;
            std::vector<Perm> gens;
            size_t start = 0;
            while (start <= body.size()) {
                size_t semi = body.find(';', start);
                std::string part =
                    semi == std::string::npos ? body.substr(start) : body.substr(start, semi - start);
                if (!part.empty()) gens.push_back(parse_cycles(part));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            if (gens.empty()) usage_error("group spec: perm:\"\" has no generators");
            return permutation_group(gens, bound);
        }
        usage_error("group spec: unknown family \"" + name + "\" in \"" + s + "\"");
    }
};

}  // namespace

GroupPtr parse_group_spec(const std::string& spec, size_t order_bound) {
    SpecParser p{spec, 0, order_bound};
    GroupPtr g = p.parse();
    if (p.pos != spec.size()) usage_error("group spec: trailing characters in \"" + spec + "\"");
    if (g->order() > order_bound) resource_error("group spec: order exceeds bound");
    return g;
}

}  // namespace comack::grp
