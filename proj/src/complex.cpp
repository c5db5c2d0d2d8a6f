#include "wlab/complex.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

namespace wlab {

std::vector<MoveSpec> carried_moves_at(const FreeProduct& fp, const PointedTree& tree) {
    std::vector<MoveSpec> out;
    const int n = fp.n();
    for (int k = 1; k <= n; ++k) {
        BasedPartition part = partition_at(tree, k);
        if (part.trivial()) continue;
        int star = part.star_petal();
        std::vector<int> free_petals;
        for (int p = 0; p < (int)part.petals.size(); ++p)
            if (p != star) free_petals.push_back(p);
        const int ord = fp.factor(k).order;
        std::vector<int> cnt(free_petals.size(), 0);
        while (true) {
            bool id = true;
            std::vector<int> y(n + 1, 0);
            for (size_t s = 0; s < free_petals.size(); ++s) {
                if (cnt[s]) id = false;
                for (int l : part.petals[free_petals[s]])
                    if (l != 0) y[l] = cnt[s];
            }
            if (!id) out.push_back(MoveSpec{k, y});
            size_t pos = 0;
            while (pos < cnt.size()) {
                if (++cnt[pos] < ord) break;
                cnt[pos] = 0;
                ++pos;
            }
            if (pos == cnt.size()) break;
        }
    }
    return out;
}

std::vector<Basis> vertex_orbit(const FreeProduct& fp, const Basis& b, const PointedTree& tree,
                                int cap) {
    Basis start = canonicalize_basis(fp, b.w);
    auto moves = carried_moves_at(fp, tree);
    std::map<std::string, Basis> seen;
    seen.emplace(basis_key(start), start);
    std::deque<Basis> frontier = {start};
    while (!frontier.empty()) {
        Basis cur = frontier.front();
        frontier.pop_front();
        for (const MoveSpec& m : moves) {
            Basis nb = apply_move_to_basis(fp, cur, m);
            std::string key = basis_key(nb);
            if (seen.count(key)) continue;
            if ((int)seen.size() >= cap)
                throw VerificationError("vertex orbit exceeds safety cap (malformed input?)");
            seen.emplace(key, nb);
            frontier.push_back(nb);
        }
    }
    std::vector<Basis> out;
    for (auto& [k, v] : seen) out.push_back(v);
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

VertexType canonical_vertex(const FreeProduct& fp, const Basis& b, const PointedTree& tree, int cap) {
    auto orbit = vertex_orbit(fp, b, tree, cap);
    return VertexType{orbit.front(), tree};
}

bool vertex_leq(const FreeProduct& fp, const VertexType& u, const VertexType& v) {
    if (!poset_leq(u.tree, v.tree)) return false;
    auto ou = vertex_orbit(fp, u.basis, u.tree);
    auto ov = vertex_orbit(fp, v.basis, v.tree);
    for (const Basis& x : ou)
        for (const Basis& y : ov)
            if (x == y) return true;
    return false;
}

AutElement AutElement::identity(const FreeProduct& fp) {
    AutElement a;
    a.images.resize(fp.n());
    for (int i = 1; i <= fp.n(); ++i) {
        a.images[i - 1].resize(fp.factor(i).order);
        for (int e = 1; e < fp.factor(i).order; ++e) a.images[i - 1][e] = fp.letter(i, e);
    }
    return a;
}

AutElement AutElement::from_factor_auto(const FreeProduct& fp, const FactorAuto& psi) {
    AutElement a = identity(fp);
    for (int e = 1; e < fp.factor(psi.factor).order; ++e)
        a.images[psi.factor - 1][e] = fp.letter(psi.factor, psi.apply(e));
    return a;
}

AutElement AutElement::from_move(const FreeProduct& fp, const RootedBasis& rb, const MoveSpec& m) {
    AutElement a;
    a.images.resize(fp.n());
    for (int i = 1; i <= fp.n(); ++i) {
        a.images[i - 1].resize(fp.factor(i).order);
        for (int e = 1; e < fp.factor(i).order; ++e) {
            Word u = rb.apply_inverse(fp, fp.letter(i, e));
            // beta conjugates factor-j letters by y[j] inside the operative factor
            std::vector<Letter> raw;
            for (const Letter& l : u.letters) {
                int yj = (l.factor == m.operative) ? 0 : m.y[l.factor];
                if (yj) {
                    raw.push_back({m.operative, yj});
                    raw.push_back(l);
                    raw.push_back({m.operative, fp.factor(m.operative).inv(yj)});
                } else {
                    raw.push_back(l);
                }
            }
            a.images[i - 1][e] = rb.apply_forward(fp, fp.reduce(raw));
        }
    }
    return a;
}

Word AutElement::apply(const FreeProduct& fp, const Word& g) const {
    std::vector<Letter> raw;
    for (const Letter& l : g.letters) {
        const Word& im = images[l.factor - 1][l.elem];
        raw.insert(raw.end(), im.letters.begin(), im.letters.end());
    }
    return fp.reduce(raw);
}

bool AutElement::is_identity(const FreeProduct& fp) const {
    return *this == identity(fp);
}

bool AutElement::operator<(const AutElement& o) const { return key() < o.key(); }

std::string AutElement::key() const {
    std::ostringstream out;
    for (const auto& per : images) {
        for (const auto& w : per) {
            for (const Letter& l : w.letters) out << l.factor << "." << l.elem << ",";
            out << ";";
        }
        out << "|";
    }
    return out.str();
}

AutElement compose(const FreeProduct& fp, const AutElement& a, const AutElement& b) {
    AutElement c;
    c.images.resize(fp.n());
    for (int i = 1; i <= fp.n(); ++i) {
        c.images[i - 1].resize(fp.factor(i).order);
        for (int e = 1; e < fp.factor(i).order; ++e)
            c.images[i - 1][e] = b.apply(fp, a.images[i - 1][e]);
    }
    return c;
}

std::optional<int> element_order(const FreeProduct& fp, const AutElement& a, int cap) {
    AutElement cur = a;
    for (int k = 1; k <= cap; ++k) {
        if (cur.is_identity(fp)) return k;
        cur = compose(fp, cur, a);
    }
    return std::nullopt;
}

std::optional<std::pair<Word, FactorAuto>> split_conjugator(const FreeProduct& fp,
                                                            const AutElement& a, int i) {
    const FactorGroup& f = fp.factor(i);
    const Word& probe = a.images[i - 1][1];
    if (probe.size() % 2 == 0 || probe.empty()) return std::nullopt;
    int half = (probe.size() - 1) / 2;
    Word u;
    u.letters.assign(probe.letters.begin(), probe.letters.begin() + half);
    if (!u.empty() && u.letters.back().factor == i) return std::nullopt;
    FactorAuto psi;
    psi.factor = i;
    psi.images.assign(f.order, 0);
    Word uinv = fp.invert(u);
    for (int e = 1; e < f.order; ++e) {
        Word mid = fp.multiply(fp.multiply(uinv, a.images[i - 1][e]), u);
        if (mid.size() != 1 || mid.letters[0].factor != i) return std::nullopt;
        psi.images[e] = mid.letters[0].elem;
    }
    // psi must be an automorphism of the factor
    std::vector<bool> seen(f.order, false);
    for (int e = 0; e < f.order; ++e) {
        if (seen[psi.images[e]]) return std::nullopt;
        seen[psi.images[e]] = true;
    }
    for (int x = 0; x < f.order; ++x)
        for (int y = 0; y < f.order; ++y)
            if (psi.images[f.mul(x, y)] != f.mul(psi.images[x], psi.images[y])) return std::nullopt;
    return std::make_pair(u, psi);
}

VertexType apply_to_vertex(const FreeProduct& fp, const AutElement& a, const VertexType& v) {
    std::vector<Word> raw;
    for (int i = 1; i <= fp.n(); ++i) {
        auto split = split_conjugator(fp, a, i);
        if (!split) throw VerificationError("apply_to_vertex: element does not preserve factor classes");
        raw.push_back(fp.multiply(a.apply(fp, v.basis.w[i - 1]), split->first));
    }
    return canonical_vertex(fp, canonicalize_basis(fp, raw), v.tree);
}

StarPoset star_poset(const FreeProduct& fp, const Basis& b) {
    StarPoset s;
    for (const PointedTree& t : enumerate_pointed_trees(fp.n()))
        s.elems.push_back(canonical_vertex(fp, b, t));
    const int m = (int)s.elems.size();
    s.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s.leq[i][j] = poset_leq(s.elems[i].tree, s.elems[j].tree);
    return s;
}

int Ball::find(const Basis& b) const {
    auto it = index.find(basis_key(b));
    return it == index.end() ? -1 : it->second;
}

Ball enumerate_ball(const FreeProduct& fp, const std::vector<Word>& w0, long long radius,
                    long long cap) {
    Ball ball;
    ball.radius = radius;
    RootedBasis start = RootedBasis::standard(fp);
    long long snorm = norm_w(fp, start, w0);
    if (snorm > radius) return ball;
    ball.vertices.push_back({start, snorm});
    ball.index.emplace(basis_key(start.basis), 0);
    auto moves = all_nuclear_moves(fp);
    std::deque<int> frontier = {0};
    while (!frontier.empty()) {
        int ui = frontier.front();
        frontier.pop_front();
        RootedBasis u = ball.vertices[ui].rb;  // copy: vector may reallocate
        for (const MoveSpec& m : moves) {
            RootedBasis v = u.apply_move(fp, m);
            long long nv = norm_w(fp, v, w0);
            if (nv > radius) continue;
            std::string key = basis_key(v.basis);
            auto it = ball.index.find(key);
            int vi;
            if (it == ball.index.end()) {
                if ((long long)ball.vertices.size() >= cap)
                    throw VerificationError("ball frontier cap exceeded");
                vi = (int)ball.vertices.size();
                ball.vertices.push_back({v, nv});
                ball.index.emplace(key, vi);
                frontier.push_back(vi);
            } else {
                vi = it->second;
            }
            if (vi != ui) {
                auto e = std::minmax(ui, vi);
                ball.edges.insert({e.first, e.second});
                PointedTree carrier = wedge_tree(fp.n(), m.operative, m.y);
                auto ek = std::make_pair(e.first, e.second);
                if (!ball.edge_carrier.count(ek)) ball.edge_carrier[ek] = carrier.code();
            }
        }
    }
    return ball;
}

std::vector<ReductiveMove> reductive_moves(const FreeProduct& fp, const RootedBasis& rb,
                                           NormKind kind, const std::vector<Word>& w0) {
    std::vector<ReductiveMove> out;
    long long base_w0 = kind == NormKind::W0 ? norm_w(fp, rb, w0) : 0;
    for (const MoveSpec& m : all_nuclear_moves(fp)) {
        RootedBasis res = rb.apply_move(fp, m);
        bool reductive = false;
        if (kind == NormKind::W0) {
            reductive = norm_w(fp, res, w0) < base_w0;
        } else {
            reductive = compare_zg(fp, res, rb) == NormOrder::Less;
        }
        if (reductive) out.push_back({m, wedge_tree(fp.n(), m.operative, m.y), res});
    }
    return out;
}

std::vector<ReductionStep> reduce_to_minimal(const FreeProduct& fp, const RootedBasis& rb,
                                             NormKind kind, const std::vector<Word>& w0,
                                             int max_steps) {
    std::vector<ReductionStep> path;
    RootedBasis cur = rb;
    for (int step = 0; step < max_steps; ++step) {
        auto reds = reductive_moves(fp, cur, kind, w0);
        if (reds.empty()) {
            if (!cur.basis.is_standard())
                throw VerificationError(
                    "no reductive move at a non-minimal nuclear vertex (descent stuck)");
            return path;
        }
        const ReductiveMove& r = reds.front();
        ReductionStep s;
        s.move = r.move;
        s.to = r.result.basis;
        s.w0_before = norm_w(fp, cur, w0);
        s.w0_after = norm_w(fp, r.result, w0);
        path.push_back(s);
        cur = r.result;
    }
    throw VerificationError("reduce_to_minimal: step cap exceeded");
}

std::vector<AutElement> stabilizer(const FreeProduct& fp, const RootedBasis& rb,
                                   const PointedTree& tree, int order_cap) {
    VertexType v = canonical_vertex(fp, rb.basis, tree);
    // carried moves at every representative, as automorphisms
    std::map<std::string, AutElement> gens;
    std::map<std::string, RootedBasis> orbit;
    orbit.emplace(basis_key(rb.basis), rb);
    std::deque<std::string> frontier = {basis_key(rb.basis)};
    auto moves = carried_moves_at(fp, tree);
    while (!frontier.empty()) {
        RootedBasis cur = orbit.at(frontier.front());
        frontier.pop_front();
        for (const MoveSpec& m : moves) {
            AutElement a = AutElement::from_move(fp, cur, m);
            gens.emplace(a.key(), a);
            RootedBasis nb = cur.apply_move(fp, m);
            std::string key = basis_key(nb.basis);
            if (!orbit.count(key)) {
                orbit.emplace(key, nb);
                frontier.push_back(key);
            }
        }
    }
    for (int i = 1; i <= fp.n(); ++i)
        for (const FactorAuto& psi : factor_automorphisms(fp.factor(i))) {
            if (psi.is_identity()) continue;
            AutElement a = AutElement::from_factor_auto(fp, psi);
            gens.emplace(a.key(), a);
        }
    // keep the generators that fix v, then close under composition
    std::map<std::string, AutElement> group;
    AutElement id = AutElement::identity(fp);
    group.emplace(id.key(), id);
    std::vector<AutElement> fixing;
    for (auto& [k, a] : gens)
        if (apply_to_vertex(fp, a, v) == v) fixing.push_back(a);
    std::deque<AutElement> todo(fixing.begin(), fixing.end());
    for (const AutElement& a : fixing) group.emplace(a.key(), a);
    while (!todo.empty()) {
        AutElement cur = todo.front();
        todo.pop_front();
        for (const AutElement& g : fixing) {
            AutElement prod = compose(fp, cur, g);
            if (group.count(prod.key())) continue;
            if ((int)group.size() >= order_cap)
                throw VerificationError("stabilizer closure exceeded the order cap");
            group.emplace(prod.key(), prod);
            todo.push_back(prod);
        }
    }
    std::vector<AutElement> out;
    for (auto& [k, a] : group) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wlab
