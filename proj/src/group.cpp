#include "wlab/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace wlab {

int FactorGroup::element_order(int a) const {
    int x = a, ord = 1;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
        if (ord > order) throw GroupError("element order exceeds group order (broken table)");
    }
    return ord;
}

FactorGroup make_cyclic(int k, int index) {
    if (k < 2) throw GroupError("cyclic factor needs order >= 2");
    FactorGroup f;
    f.index = index;
    f.order = k;
    f.name = "cyclic " + std::to_string(k);
    f.is_cyclic = true;
    f.cayley.assign(k, std::vector<int>(k));
    f.inverse.assign(k, 0);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) f.cayley[a][b] = (a + b) % k;
        f.inverse[a] = (k - a) % k;
    }
    return f;
}

FactorGroup make_sym3(int index) {
    // Permutations of {0,1,2} in lexicographic order; composition (a*b)(x) = a(b(x)).
    std::array<std::array<int, 3>, 6> perms;
    {
        std::array<int, 3> p = {0, 1, 2};
        int i = 0;
        do {
            perms[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    auto find = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw GroupError("sym3 internal");
    };
    FactorGroup f;
    f.index = index;
    f.order = 6;
    f.name = "sym 3";
    f.is_sym3 = true;
    f.cayley.assign(6, std::vector<int>(6));
    f.inverse.assign(6, 0);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            f.cayley[a][b] = find(c);
        }
        std::array<int, 3> ia;
        for (int x = 0; x < 3; ++x) ia[perms[a][x]] = x;
        f.inverse[a] = find(ia);
    }
    return f;
}

FactorGroup make_table(const std::string& name, std::vector<std::vector<int>> table, int index) {
    FactorGroup f;
    f.index = index;
    f.order = static_cast<int>(table.size());
    f.name = name;
    f.cayley = std::move(table);
    f.inverse.assign(f.order, -1);
    for (int a = 0; a < f.order; ++a) {
        for (int b = 0; b < f.order; ++b) {
            if (a < (int)f.cayley.size() && b < (int)f.cayley[a].size() && f.cayley[a][b] == 0) {
                f.inverse[a] = b;
            }
        }
    }
    return f;
}

void validate_factor(const FactorGroup& f) {
    const std::string who = "factor " + std::to_string(f.index) + " (" + f.name + ")";
    if (f.order < 1) throw GroupError(who + ": empty table");
    if ((int)f.cayley.size() != f.order) throw GroupError(who + ": table row count mismatch");
    for (const auto& row : f.cayley) {
        if ((int)row.size() != f.order) throw GroupError(who + ": table column count mismatch");
        for (int v : row)
            if (v < 0 || v >= f.order) throw GroupError(who + ": table entry out of range");
    }
    for (int a = 0; a < f.order; ++a) {
        if (f.cayley[0][a] != a || f.cayley[a][0] != a)
            throw GroupError(who + ": element 0 is not a two-sided identity");
    }
    for (int a = 0; a < f.order; ++a) {
        if (f.inverse[a] < 0 || f.cayley[a][f.inverse[a]] != 0 || f.cayley[f.inverse[a]][a] != 0)
            throw GroupError(who + ": missing inverse for element " + std::to_string(a));
    }
    if (f.order <= 64) {
        for (int a = 0; a < f.order; ++a)
            for (int b = 0; b < f.order; ++b)
                for (int c = 0; c < f.order; ++c)
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)))
                        throw GroupError(who + ": not associative");
    }
    if (f.order >= 2 && (f.lambda <= 0 || f.lambda >= f.order))
        throw GroupError(who + ": lambda must be a nontrivial element");
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
}

bool FactorAuto::is_identity() const {
    for (int i = 0; i < (int)images.size(); ++i)
        if (images[i] != i) return false;
    return true;
}

Word FreeProduct::letter(int f, int e) const {
    Word w;
    if (e != 0) w.letters.push_back({f, e});
    return w;
}

Word FreeProduct::reduce(const std::vector<Letter>& raw) const {
    Word out;
    for (const Letter& l : raw) {
        if (l.elem == 0) continue;
        if (!out.letters.empty() && out.letters.back().factor == l.factor) {
            int fused = factor(l.factor).mul(out.letters.back().elem, l.elem);
            if (fused == 0)
                out.letters.pop_back();
            else
                out.letters.back().elem = fused;
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

Word FreeProduct::multiply(const Word& u, const Word& v) const {
    std::vector<Letter> raw = u.letters;
    raw.insert(raw.end(), v.letters.begin(), v.letters.end());
    return reduce(raw);
}

Word FreeProduct::invert(const Word& u) const {
    Word out;
    out.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        out.letters.push_back({it->factor, factor(it->factor).inv(it->elem)});
    return out;
}

Word FreeProduct::conjugate(const Word& u, const Word& g) const {
    return multiply(multiply(u, g), invert(u));
}

Word FreeProduct::apply_factor_auto(const FactorAuto& psi, const Word& u) const {
    Word out = u;
    for (Letter& l : out.letters)
        if (l.factor == psi.factor) l.elem = psi.apply(l.elem);
    return out;  // stays normal form: psi fixes identity and is a bijection
}

int FreeProduct::project(const Word& u, int f) const {
    int acc = 0;
    for (const Letter& l : u.letters)
        if (l.factor == f) acc = factor(f).mul(acc, l.elem);
    return acc;
}

bool FreeProduct::valid_word(const Word& u) const {
    for (int i = 0; i < u.size(); ++i) {
        const Letter& l = u.letters[i];
        if (l.factor < 1 || l.factor > n()) return false;
        if (l.elem <= 0 || l.elem >= factor(l.factor).order) return false;
        if (i > 0 && u.letters[i - 1].factor == l.factor) return false;
    }
    return true;
}

namespace {

struct LineReader {
    std::vector<std::string> lines;
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (!t.empty() && t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw GroupError("group-spec line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

FreeProduct load_group_spec(const std::string& text) {
    FreeProduct fp;
    std::vector<std::pair<int, int>> lambda_overrides;
    LineReader rd(text);
    for (size_t li = 0; li < rd.lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        auto toks = tokenize(rd.lines[li]);
        if (toks.empty()) continue;
        if (toks[0] == "factor") {
            if (toks.size() < 2) parse_fail(lineno, "factor needs a kind");
            int id = fp.n() + 1;
            if (toks[1] == "cyclic") {
                if (toks.size() != 3) parse_fail(lineno, "usage: factor cyclic <k>");
                int k = 0;
                try {
                    k = std::stoi(toks[2]);
                } catch (...) {
                    parse_fail(lineno, "bad order '" + toks[2] + "'");
                }
                fp.factors.push_back(make_cyclic(k, id));
            } else if (toks[1] == "sym") {
                if (toks.size() != 3 || toks[2] != "3") parse_fail(lineno, "only 'factor sym 3' is supported");
                fp.factors.push_back(make_sym3(id));
            } else if (toks[1] == "table") {
                if (toks.size() != 4) parse_fail(lineno, "usage: factor table <name> <order>");
                int order = 0;
                try {
                    order = std::stoi(toks[3]);
                } catch (...) {
                    parse_fail(lineno, "bad order '" + toks[3] + "'");
                }
                if (order < 1 || order > 64) parse_fail(lineno, "table order out of range");
                std::vector<std::vector<int>> table;
                std::vector<int> flat;
                while ((int)flat.size() < order * order) {
                    ++li;
                    if (li >= rd.lines.size()) parse_fail(lineno, "truncated table '" + toks[2] + "'");
                    for (const auto& t : tokenize(rd.lines[li])) {
                        try {
                            flat.push_back(std::stoi(t));
                        } catch (...) {
                            parse_fail((int)li + 1, "bad table entry '" + t + "'");
                        }
                    }
                }
                if ((int)flat.size() != order * order)
                    parse_fail((int)li + 1, "table '" + toks[2] + "' has extra entries");
                for (int r = 0; r < order; ++r)
                    table.emplace_back(flat.begin() + r * order, flat.begin() + (r + 1) * order);
                fp.factors.push_back(make_table(toks[2], std::move(table), id));
            } else {
                parse_fail(lineno, "unknown factor kind '" + toks[1] + "'");
            }
        } else if (toks[0] == "lambda") {
            if (toks.size() != 3) parse_fail(lineno, "usage: lambda <factor-id> <element-index>");
            try {
                lambda_overrides.emplace_back(std::stoi(toks[1]), std::stoi(toks[2]));
            } catch (...) {
                parse_fail(lineno, "bad lambda arguments");
            }
        } else {
            parse_fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    for (auto [fid, e] : lambda_overrides) {
        if (fid < 1 || fid > fp.n()) throw GroupError("lambda override: no factor " + std::to_string(fid));
        fp.factors[fid - 1].lambda = e;
    }
    if (fp.n() < 2) throw GroupError("need n >= 2 factors in the free product");
    for (const auto& f : fp.factors) validate_factor(f);
    return fp;
}

std::string write_group_spec(const FreeProduct& fp) {
    std::ostringstream out;
    for (const auto& f : fp.factors) {
        if (f.is_cyclic) {
            out << "factor cyclic " << f.order << "\n";
        } else if (f.is_sym3) {
            out << "factor sym 3\n";
        } else {
            out << "factor table " << f.name << " " << f.order << "\n";
            for (int a = 0; a < f.order; ++a) {
                for (int b = 0; b < f.order; ++b) out << (b ? " " : "") << f.cayley[a][b];
                out << "\n";
            }
        }
    }
    for (const auto& f : fp.factors)
        if (f.lambda != 1) out << "lambda " << f.index << " " << f.lambda << "\n";
    return out.str();
}

std::vector<Word> enumerate_elements(const FreeProduct& fp, int count) {
    std::vector<Word> out;
    if (count <= 0) return out;
    out.push_back(Word{});
    std::vector<Word> cur = {Word{}};
    while ((int)out.size() < count) {
        std::vector<Word> next;
        for (const Word& w : cur) {
            int last = w.empty() ? 0 : w.letters.back().factor;
            for (int f = 1; f <= fp.n(); ++f) {
                if (f == last) continue;
                for (int e = 1; e < fp.factor(f).order; ++e) {
                    Word ext = w;
                    ext.letters.push_back({f, e});
                    next.push_back(std::move(ext));
                }
            }
        }
        if (next.empty()) break;  // cannot happen for n >= 2
        for (const Word& w : next) {
            out.push_back(w);
            if ((int)out.size() == count) return out;
        }
        cur = std::move(next);
    }
    return out;
}

std::optional<int> well_order_index(const FreeProduct& fp, const Word& w, int cap) {
    auto all = enumerate_elements(fp, cap);
    for (int i = 0; i < (int)all.size(); ++i)
        if (all[i] == w) return i;
    return std::nullopt;
}

namespace {

// Backtracking over images of a greedy generating sequence.
void extend_auto(const FactorGroup& f, const std::vector<int>& gens, size_t gi,
                 std::vector<int>& img, std::vector<FactorAuto>& out) {
    // img holds the partial map on the closure of gens[0..gi); -1 = unset.
    if (gi == gens.size()) {
        std::vector<bool> seen(f.order, false);
        for (int a = 0; a < f.order; ++a) {
            if (img[a] < 0) return;  // not total: gens did not generate (bug guard)
            if (seen[img[a]]) return;
            seen[img[a]] = true;
        }
        for (int a = 0; a < f.order; ++a)
            for (int b = 0; b < f.order; ++b)
                if (img[f.mul(a, b)] != f.mul(img[a], img[b])) return;
        out.push_back(FactorAuto{f.index, img});
        return;
    }
    int g = gens[gi];
    for (int cand = 0; cand < f.order; ++cand) {
        if (f.element_order(cand) != f.element_order(g)) continue;
        std::vector<int> next = img;
        next[g] = cand;
        // close under multiplication by known elements
        bool ok = true;
        bool grew = true;
        while (grew && ok) {
            grew = false;
            for (int a = 0; a < f.order && ok; ++a) {
                if (next[a] < 0) continue;
                for (int b = 0; b < f.order; ++b) {
                    if (next[b] < 0) continue;
                    int ab = f.mul(a, b);
                    int im = f.mul(next[a], next[b]);
                    if (next[ab] < 0) {
                        next[ab] = im;
                        grew = true;
                    } else if (next[ab] != im) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) extend_auto(f, gens, gi + 1, next, out);
    }
}

}  // namespace

std::vector<FactorAuto> factor_automorphisms(const FactorGroup& f, int cap) {
    if (f.order > cap)
        throw GroupError("factor order " + std::to_string(f.order) +
                         " exceeds automorphism cap " + std::to_string(cap));
    // Greedy generating sequence.
    std::vector<int> gens;
    std::vector<bool> closed(f.order, false);
    closed[0] = true;
    auto reclose = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < f.order; ++a)
                for (int b = 0; b < f.order; ++b)
                    if (closed[a] && closed[b] && !closed[f.mul(a, b)]) {
                        closed[f.mul(a, b)] = true;
                        grew = true;
                    }
        }
    };
    for (int a = 1; a < f.order; ++a) {
        if (!closed[a]) {
            gens.push_back(a);
            closed[a] = true;
            reclose();
        }
    }
    std::vector<int> img(f.order, -1);
    img[0] = 0;
    std::vector<FactorAuto> out;
    extend_auto(f, gens, 0, img, out);
    std::sort(out.begin(), out.end(),
              [](const FactorAuto& a, const FactorAuto& b) { return a.images < b.images; });
    return out;
}

}  // namespace wlab
