#include "wlab/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace wlab {

using BigInt = boost::multiprecision::cpp_int;

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, (int)s.size() - 1);
    return d;
}

void SimplicialComplex::insert_closed(std::vector<int> simplex) {
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    if (simplex.empty()) return;
    for (int v : simplex) num_vertices = std::max(num_vertices, v + 1);
    // all nonempty subsets
    const int m = (int)simplex.size();
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> face;
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) face.push_back(simplex[b]);
        simplices.insert(face);
    }
}

std::vector<std::vector<int>> SimplicialComplex::of_dim(int d) const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices)
        if ((int)s.size() == d + 1) out.push_back(s);
    return out;
}

SimplicialComplex complex_from_maximal(int num_vertices,
                                       const std::vector<std::vector<int>>& maximal) {
    SimplicialComplex c;
    c.num_vertices = num_vertices;
    for (const auto& s : maximal) c.insert_closed(s);
    return c;
}

std::string SimplicialComplex::to_json(const std::vector<std::string>& vertex_names) const {
    nlohmann::json j;
    nlohmann::json names = nlohmann::json::array();
    for (int v = 0; v < num_vertices; ++v)
        names.push_back(v < (int)vertex_names.size() ? vertex_names[v] : std::to_string(v));
    j["vertices"] = names;
    nlohmann::json maxs = nlohmann::json::array();
    for (const auto& s : simplices) {
        bool maximal = true;
        for (const auto& t : simplices)
            if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                maximal = false;
        if (maximal) maxs.push_back(s);
    }
    j["maximal_simplices"] = maxs;
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SimplicialComplex c;
    c.num_vertices = (int)j.at("vertices").size();
    for (const auto& s : j.at("maximal_simplices")) c.insert_closed(s.get<std::vector<int>>());
    return c;
}

namespace {

// Smith normal form over exact integers; returns the nonzero diagonal.
std::vector<BigInt> snf(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> diag;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // locate a minimal nonzero pivot
        size_t pr = rows, pc = cols;
        BigInt best = 0;
        for (size_t r = r0; r < rows; ++r)
            for (size_t c = c0; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                BigInt a = abs(m[r][c]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;  // all zero
        std::swap(m[r0], m[pr]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][c0], m[r][pc]);
        bool clean = true;
        for (size_t r = r0 + 1; r < rows; ++r) {
            if (m[r][c0] == 0) continue;
            BigInt q = m[r][c0] / m[r0][c0];
            for (size_t c = c0; c < cols; ++c) m[r][c] -= q * m[r0][c];
            if (m[r][c0] != 0) clean = false;
        }
        for (size_t c = c0 + 1; c < cols; ++c) {
            if (m[r0][c] == 0) continue;
            BigInt q = m[r0][c] / m[r0][c0];
            for (size_t r = r0; r < rows; ++r) m[r][c] -= q * m[r][c0];
            if (m[r0][c] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; pick a new pivot
        // divisibility pass: pivot must divide the rest of the block
        bool divides = true;
        for (size_t r = r0 + 1; r < rows && divides; ++r)
            for (size_t c = c0 + 1; c < cols && divides; ++c)
                if (m[r][c] % m[r0][c0] != 0) {
                    for (size_t cc = c0; cc < cols; ++cc) m[r0][cc] += m[r][cc];
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    return diag;
}

std::vector<std::vector<BigInt>> boundary_matrix(const SimplicialComplex& c, int d) {
    // rows: (d-1)-simplices, cols: d-simplices
    auto lower = c.of_dim(d - 1);
    auto upper = c.of_dim(d);
    std::map<std::vector<int>, int> row_of;
    for (int i = 0; i < (int)lower.size(); ++i) row_of[lower[i]] = i;
    std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size(), 0));
    for (int j = 0; j < (int)upper.size(); ++j) {
        const auto& s = upper[j];
        for (int drop = 0; drop < (int)s.size(); ++drop) {
            std::vector<int> face;
            for (int t = 0; t < (int)s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            m[row_of.at(face)][j] = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

std::vector<std::string> smith_diagonal(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (size_t r = 0; r < m.size(); ++r) big[r].assign(m[r].begin(), m[r].end());
    std::vector<std::string> out;
    for (const BigInt& d : snf(std::move(big))) out.push_back(d.str());
    return out;
}

bool HomologyProfile::trivial() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyProfile::to_json() const {
    nlohmann::json j;
    j["betti"] = betti;
    j["torsion"] = torsion;
    j["euler"] = euler;
    return j.dump();
}

HomologyProfile homology(const SimplicialComplex& c) {
    if (c.empty()) throw GroupError("homology: empty complex");
    const int dim = c.dimension();
    HomologyProfile h;
    h.betti.assign(dim + 1, 0);
    h.torsion.assign(dim + 1, {});
    // ranks of boundary maps; rank_d for d in 1..dim, plus augmentation rank 1
    std::vector<long long> rank(dim + 2, 0);
    std::vector<std::vector<BigInt>> diag(dim + 2);
    for (int d = 1; d <= dim; ++d) {
        auto sd = snf(boundary_matrix(c, d));
        rank[d] = (long long)sd.size();
        diag[d].assign(sd.begin(), sd.end());
    }
    long long euler = 0;
    for (int d = 0; d <= dim; ++d) {
        long long nd = (long long)c.of_dim(d).size();
        euler += (d % 2 == 0) ? nd : -nd;
    }
    h.euler = euler;
    // reduced H_0: components - 1
    {
        // union-find over edges
        std::vector<int> parent(c.num_vertices);
        for (int v = 0; v < c.num_vertices; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        std::vector<bool> present(c.num_vertices, false);
        for (const auto& s : c.of_dim(0)) present[s[0]] = true;
        for (const auto& e : c.of_dim(1)) parent[find(e[0])] = find(e[1]);
        std::set<int> comps;
        for (int v = 0; v < c.num_vertices; ++v)
            if (present[v]) comps.insert(find(v));
        h.betti[0] = (long long)comps.size() - 1;
    }
    for (int d = 1; d <= dim; ++d) {
        long long nd = (long long)c.of_dim(d).size();
        long long upper = (d + 1 <= dim) ? rank[d + 1] : 0;
        h.betti[d] = nd - rank[d] - upper;
        if (d + 1 <= dim)
            for (const BigInt& v : diag[d + 1])
                if (v > 1) h.torsion[d].push_back((long long)v);
    }
    return h;
}

ContractibleReport certify_contractible(const SimplicialComplex& c) {
    if (c.empty()) throw GroupError("certify_contractible: empty complex");
    std::set<std::vector<int>> live = c.simplices;
    bool changed = true;
    while (changed) {
        changed = false;
        // deterministic scan: the set is ordered lexicographically
        for (const auto& s : live) {
            std::vector<std::vector<int>> cofaces;
            for (const auto& t : live) {
                if (t.size() == s.size() + 1 &&
                    std::includes(t.begin(), t.end(), s.begin(), s.end()))
                    cofaces.push_back(t);
            }
            if (cofaces.size() == 1) {
                live.erase(cofaces[0]);
                live.erase(s);
                changed = true;
                break;
            }
        }
    }
    if (live.size() == 1 && live.begin()->size() == 1)
        return {ContractibleVerdict::CollapsedToPoint, ""};
    HomologyProfile h = homology(c);
    if (h.trivial()) return {ContractibleVerdict::HomologyTrivialOnly, ""};
    return {ContractibleVerdict::NotContractible, h.to_json()};
}

bool FinitePoset::valid_order() const {
    const int m = size();
    for (int i = 0; i < m; ++i)
        if (!leq[i][i]) return false;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) return false;
            for (int k = 0; k < m; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
        }
    return true;
}

SimplicialComplex order_complex(const FinitePoset& p) {
    SimplicialComplex c;
    c.num_vertices = p.size();
    // chains via DFS over the strict order
    std::vector<int> chain;
    std::function<void(int)> grow = [&](int last) {
        std::vector<int> simplex = chain;
        std::sort(simplex.begin(), simplex.end());
        c.simplices.insert(simplex);
        for (int nxt = 0; nxt < p.size(); ++nxt) {
            if (nxt == last || !p.leq[last][nxt] || p.leq[nxt][last]) continue;
            chain.push_back(nxt);
            grow(nxt);
            chain.pop_back();
        }
    };
    for (int s = 0; s < p.size(); ++s) {
        chain = {s};
        grow(s);
    }
    return c;
}

FinitePoset poset_join(const FinitePoset& p1, const FinitePoset& p2) {
    return poset_join_many({p1, p2});
}

FinitePoset poset_join_many(const std::vector<FinitePoset>& parts) {
    const int m = (int)parts.size();
    // elements: nonempty S subset of parts, one element choice per member of S
    struct Elem {
        std::vector<int> comp;  // -1 = absent
    };
    std::vector<Elem> elems;
    std::function<void(int, Elem&)> rec = [&](int idx, Elem& e) {
        if (idx == m) {
            bool nonempty = false;
            for (int v : e.comp) nonempty |= v >= 0;
            if (nonempty) elems.push_back(e);
            return;
        }
        e.comp[idx] = -1;
        rec(idx + 1, e);
        for (int v = 0; v < parts[idx].size(); ++v) {
            e.comp[idx] = v;
            rec(idx + 1, e);
        }
        e.comp[idx] = -1;
    };
    Elem seed;
    seed.comp.assign(m, -1);
    rec(0, seed);
    FinitePoset out;
    for (const Elem& e : elems) {
        std::string lab = "<";
        for (int i = 0; i < m; ++i)
            if (e.comp[i] >= 0) lab += std::to_string(i) + ":" + parts[i].labels[e.comp[i]] + ";";
        lab += ">";
        out.labels.push_back(lab);
    }
    const int sz = (int)elems.size();
    out.leq.assign(sz, std::vector<bool>(sz, false));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            bool le = true;
            for (int t = 0; t < m && le; ++t) {
                if (elems[i].comp[t] < 0) continue;            // absent <= anything there
                if (elems[j].comp[t] < 0) le = false;          // support must grow
                else le = parts[t].leq[elems[i].comp[t]][elems[j].comp[t]];
            }
            out.leq[i][j] = le;
        }
    return out;
}

}  // namespace wlab
