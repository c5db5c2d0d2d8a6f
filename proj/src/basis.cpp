#include "wlab/basis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wlab {

bool Basis::is_standard() const {
    for (const Word& wi : w)
        if (!wi.empty()) return false;
    return true;
}

Basis standard_basis(int n) {
    Basis b;
    b.w.assign(n, Word{});
    return b;
}

namespace {

Word canonical_conjugator(const FreeProduct& fp, Word w, int factor) {
    w = fp.reduce(w.letters);
    if (!w.empty() && w.letters.back().factor == factor) w.letters.pop_back();
    return w;
}

}  // namespace

Basis canonicalize_basis(const FreeProduct& fp, const std::vector<Word>& raw) {
    if ((int)raw.size() != fp.n()) throw GroupError("basis: wrong conjugator count");
    Basis b;
    b.w.reserve(raw.size());
    for (int i = 1; i <= fp.n(); ++i) b.w.push_back(canonical_conjugator(fp, raw[i - 1], i));
    return b;
}

bool basis_less(const Basis& a, const Basis& b) {
    for (int i = 0; i < std::min(a.n(), b.n()); ++i) {
        if (a.w[i] != b.w[i]) return word_less(a.w[i], b.w[i]);
    }
    return a.n() < b.n();
}

std::string basis_key(const Basis& b) {
    std::ostringstream out;
    for (const Word& w : b.w) {
        for (const Letter& l : w.letters) out << l.factor << "." << l.elem << ",";
        out << ";";
    }
    return out.str();
}

std::string basis_to_json(const Basis& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : b.w) {
        nlohmann::json jw = nlohmann::json::array();
        for (const Letter& l : w.letters) jw.push_back({l.factor, l.elem});
        arr.push_back(jw);
    }
    return arr.dump();
}

Basis basis_from_json(const FreeProduct& fp, const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array() || (int)arr.size() != fp.n())
        throw GroupError("basis json: expected an array of n conjugators");
    std::vector<Word> raw;
    for (const auto& jw : arr) {
        Word w;
        for (const auto& jl : jw) {
            Letter l{jl.at(0).get<int>(), jl.at(1).get<int>()};
            w.letters.push_back(l);
        }
        if (!fp.valid_word(fp.reduce(w.letters))) throw GroupError("basis json: invalid word");
        raw.push_back(w);
    }
    return canonicalize_basis(fp, raw);
}

bool MoveSpec::is_identity() const {
    for (int v : y)
        if (v != 0) return false;
    return true;
}

MoveSpec MoveSpec::inverse(const FreeProduct& fp) const {
    MoveSpec m = *this;
    for (int j = 1; j < (int)m.y.size(); ++j) m.y[j] = fp.factor(operative).inv(m.y[j]);
    return m;
}

std::vector<MoveSpec> all_nuclear_moves(const FreeProduct& fp) {
    std::vector<MoveSpec> out;
    const int n = fp.n();
    for (int k = 1; k <= n; ++k) {
        const int ord = fp.factor(k).order;
        std::vector<int> slots;
        for (int j = 1; j <= n; ++j)
            if (j != k) slots.push_back(j);
        std::vector<int> y(n + 1, 0);
        // odometer over assignments
        std::vector<int> cnt(slots.size(), 0);
        while (true) {
            bool id = true;
            for (size_t s = 0; s < slots.size(); ++s) {
                y[slots[s]] = cnt[s];
                if (cnt[s]) id = false;
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

Basis apply_move_to_basis(const FreeProduct& fp, const Basis& b, const MoveSpec& m) {
    const int k = m.operative;
    const Word& wk = b.w[k - 1];
    Basis out = b;
    for (int j = 1; j <= fp.n(); ++j) {
        if (j == k || m.y[j] == 0) continue;
        Word x = fp.conjugate(wk, fp.letter(k, m.y[j]));
        out.w[j - 1] = canonical_conjugator(fp, fp.multiply(x, b.w[j - 1]), j);
    }
    return out;
}

RootedBasis RootedBasis::standard(const FreeProduct& fp) {
    RootedBasis rb;
    rb.basis = standard_basis(fp.n());
    rb.inv_images.resize(fp.n());
    for (int i = 1; i <= fp.n(); ++i) {
        rb.inv_images[i - 1].resize(fp.factor(i).order);
        for (int e = 1; e < fp.factor(i).order; ++e) rb.inv_images[i - 1][e] = fp.letter(i, e);
    }
    return rb;
}

Word RootedBasis::apply_inverse(const FreeProduct& fp, const Word& g) const {
    std::vector<Letter> raw;
    for (const Letter& l : g.letters) {
        const Word& im = inv_images[l.factor - 1][l.elem];
        raw.insert(raw.end(), im.letters.begin(), im.letters.end());
    }
    return fp.reduce(raw);
}

Word RootedBasis::apply_forward(const FreeProduct& fp, const Word& g) const {
    std::vector<Letter> raw;
    for (const Letter& l : g.letters) {
        Word im = fp.conjugate(basis.w[l.factor - 1], fp.letter(l.factor, l.elem));
        raw.insert(raw.end(), im.letters.begin(), im.letters.end());
    }
    return fp.reduce(raw);
}

int RootedBasis::length_of(const FreeProduct& fp, const Word& g) const {
    return apply_inverse(fp, g).size();
}

RootedBasis RootedBasis::apply_move(const FreeProduct& fp, const MoveSpec& m) const {
    const int k = m.operative;
    const int n = fp.n();
    RootedBasis out;
    out.basis.w.resize(n);
    out.inv_images.resize(n);
    // new tuple plus the per-factor letters absorbed by canonicalization
    std::vector<int> absorbed(n + 1, 0);  // s_i: w_i' = x_i w_i s_i^-1
    for (int j = 1; j <= n; ++j) {
        if (j == k || m.y[j] == 0) {
            out.basis.w[j - 1] = basis.w[j - 1];
            continue;
        }
        Word x = fp.conjugate(basis.w[k - 1], fp.letter(k, m.y[j]));
        Word prod = fp.multiply(x, basis.w[j - 1]);
        if (!prod.empty() && prod.letters.back().factor == j) {
            absorbed[j] = prod.letters.back().elem;
            prod.letters.pop_back();
        }
        out.basis.w[j - 1] = prod;
    }
    // phi' = phi . beta . iota  =>  table'(l) = iota^-1(beta^-1(table(l)))
    // beta^-1 conjugates factor-j letters by y[j]^-1; iota^-1 by s_j inside G_j.
    auto transform = [&](const Word& w) {
        std::vector<Letter> raw;
        for (const Letter& l : w.letters) {
            int yj = (l.factor == k) ? 0 : m.y[l.factor];
            int e = l.elem;
            if (absorbed[l.factor]) {
                const FactorGroup& f = fp.factor(l.factor);
                e = f.mul(f.mul(absorbed[l.factor], e), f.inv(absorbed[l.factor]));
            }
            if (yj) {
                const FactorGroup& fk = fp.factor(k);
                raw.push_back({k, fk.inv(yj)});
                raw.push_back({l.factor, e});
                raw.push_back({k, yj});
            } else {
                raw.push_back({l.factor, e});
            }
        }
        return fp.reduce(raw);
    };
    for (int i = 1; i <= n; ++i) {
        out.inv_images[i - 1].resize(fp.factor(i).order);
        for (int e = 1; e < fp.factor(i).order; ++e)
            out.inv_images[i - 1][e] = transform(inv_images[i - 1][e]);
    }
    return out;
}

namespace {

long long tuple_weight(const Basis& b) {
    long long s = 0;
    for (const Word& w : b.w) s += w.size();
    return s;
}

}  // namespace

std::optional<RootedBasis> root_basis(const FreeProduct& fp, const Basis& target, long long cap) {
    Basis start = canonicalize_basis(fp, target.w);
    RootedBasis id = RootedBasis::standard(fp);
    if (start.is_standard()) return id;
    // Best-first search from the target back to the standard basis, scored by
    // total conjugator length; records the move used to reach each basis.
    auto moves = all_nuclear_moves(fp);
    struct Entry {
        long long score;
        long long order;
        std::string key;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
        return a.score != b.score ? a.score > b.score : a.order > b.order;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> frontier(cmp);
    std::map<std::string, std::pair<Basis, std::optional<std::pair<std::string, MoveSpec>>>> seen;
    std::string skey = basis_key(start);
    seen.emplace(skey, std::make_pair(start, std::nullopt));
    frontier.push({tuple_weight(start), 0, skey});
    long long expansions = 0, order = 0;
    std::string goal_key;
    bool found = false;
    while (!frontier.empty() && !found) {
        Entry e = frontier.top();
        frontier.pop();
        const Basis cur = seen.at(e.key).first;
        if (++expansions > cap) return std::nullopt;
        for (const MoveSpec& m : moves) {
            Basis nb = apply_move_to_basis(fp, cur, m);
            std::string key = basis_key(nb);
            if (seen.count(key)) continue;
            seen.emplace(key, std::make_pair(nb, std::make_pair(e.key, m)));
            if (nb.is_standard()) {
                goal_key = key;
                found = true;
                break;
            }
            frontier.push({tuple_weight(nb), ++order, key});
        }
    }
    if (!found) return std::nullopt;
    // walk back: moves taking target -> standard; invert to build standard -> target
    std::vector<MoveSpec> path;  // in target->standard direction
    std::string at = goal_key;
    while (at != skey) {
        auto& [b, via] = seen.at(at);
        path.push_back(via->second);
        at = via->first;
    }
    // replay forward: standard -> target applies the inverses in path order
    RootedBasis rb = id;
    for (const MoveSpec& m : path) rb = rb.apply_move(fp, m.inverse(fp));
    if (rb.basis != start) throw GroupError("root_basis: replay mismatch");
    return rb;
}

bool verify_basis(const FreeProduct& fp, const RootedBasis& rb) {
    for (int i = 1; i <= fp.n(); ++i) {
        for (int e = 1; e < fp.factor(i).order; ++e) {
            Word g = fp.letter(i, e);
            if (rb.apply_forward(fp, rb.apply_inverse(fp, g)) != g) return false;
            if (rb.apply_inverse(fp, rb.apply_forward(fp, g)) != g) return false;
        }
    }
    return true;
}

std::vector<std::pair<int, Word>> rewrite_in_basis(const FreeProduct& fp, const RootedBasis& rb,
                                                   const Word& g) {
    Word u = rb.apply_inverse(fp, g);
    std::vector<std::pair<int, Word>> out;
    out.reserve(u.letters.size());
    for (const Letter& l : u.letters)
        out.emplace_back(l.factor, fp.conjugate(rb.basis.w[l.factor - 1], fp.letter(l.factor, l.elem)));
    return out;
}

long long norm_w(const FreeProduct& fp, const RootedBasis& rb, const std::vector<Word>& words) {
    long long s = 0;
    for (const Word& w : words) s += rb.length_of(fp, w);
    return s;
}

std::vector<Word> lambda_words(const FreeProduct& fp) {
    std::vector<Word> out;
    for (int i = 1; i <= fp.n(); ++i) out.push_back(fp.letter(i, fp.factor(i).lambda));
    return out;
}

NormVector norm_vector(const FreeProduct& fp, const RootedBasis& rb, int cutoff) {
    if (cutoff < 1) throw GroupError("norm_vector: cutoff must be >= 1");
    NormVector v;
    v.cutoff = cutoff;
    auto elems = enumerate_elements(fp, cutoff);
    v.lengths.reserve(elems.size());
    for (const Word& g : elems) v.lengths.push_back(rb.length_of(fp, g));
    return v;
}

std::string NormVector::to_json() const {
    nlohmann::json j;
    j["cutoff"] = cutoff;
    j["lengths"] = lengths;
    return j.dump();
}

NormOrder compare_norms(const NormVector& a, const NormVector& b) {
    if (a.cutoff != b.cutoff) throw GroupError("compare_norms: cutoff mismatch");
    for (size_t i = 0; i < a.lengths.size(); ++i) {
        if (a.lengths[i] < b.lengths[i]) return NormOrder::Less;
        if (a.lengths[i] > b.lengths[i]) return NormOrder::Greater;
    }
    return NormOrder::EqualUpToCutoff;
}

NormOrder compare_zg(const FreeProduct& fp, const RootedBasis& a, const RootedBasis& b,
                     int start_cutoff, int cap) {
    int cutoff = start_cutoff;
    while (true) {
        NormOrder o = compare_norms(norm_vector(fp, a, cutoff), norm_vector(fp, b, cutoff));
        if (o != NormOrder::EqualUpToCutoff || cutoff >= cap) return o;
        cutoff = std::min(cap, cutoff * 2);
    }
}

}  // namespace wlab
