#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlab {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite group given by an explicit Cayley table.
/// Element 0 is the identity; `lambda` is the designated nontrivial element
/// used by word-set norms (defaults to element 1).
struct FactorGroup {
    int index = 0;  // 1-based position inside the free product
    int order = 0;
    std::string name;
    bool is_cyclic = false;
    bool is_sym3 = false;
    std::vector<std::vector<int>> cayley;
    std::vector<int> inverse;
    int lambda = 1;

    int mul(int a, int b) const { return cayley[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int element_order(int a) const;
};

FactorGroup make_cyclic(int k, int index);
FactorGroup make_sym3(int index);
FactorGroup make_table(const std::string& name, std::vector<std::vector<int>> table, int index);

/// Throws GroupError naming the factor and the failing axiom.
void validate_factor(const FactorGroup& f);

struct Letter {
    int factor = 0;  // 1-based
    int elem = 0;    // 1..order-1, never the identity

    bool operator==(const Letter& o) const { return factor == o.factor && elem == o.elem; }
    bool operator<(const Letter& o) const {
        return factor != o.factor ? factor < o.factor : elem < o.elem;
    }
};

/// Normal-form element of the free product: alternating nontrivial letters.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
};

/// Global well-order: length first, then (factor, element) lexicographically.
bool word_less(const Word& a, const Word& b);

struct FactorAuto {
    int factor = 0;
    std::vector<int> images;  // permutation of 0..order-1 fixing 0

    int apply(int e) const { return images[e]; }
    bool is_identity() const;
    bool operator==(const FactorAuto& o) const { return factor == o.factor && images == o.images; }
};

struct FreeProduct {
    std::vector<FactorGroup> factors;  // ids 1..n in order

    int n() const { return static_cast<int>(factors.size()); }
    const FactorGroup& factor(int id) const { return factors.at(id - 1); }

    Word letter(int f, int e) const;
    Word reduce(const std::vector<Letter>& raw) const;
    Word multiply(const Word& u, const Word& v) const;
    Word invert(const Word& u) const;
    /// u g u^-1, reduced.
    Word conjugate(const Word& u, const Word& g) const;
    Word apply_factor_auto(const FactorAuto& psi, const Word& u) const;
    /// Canonical projection onto factor `f`: product of the factor-f letters.
    int project(const Word& u, int f) const;
    bool valid_word(const Word& u) const;
};

/// Parses the line-oriented group-spec format; requires n >= 2.
FreeProduct load_group_spec(const std::string& text);
/// Emits a document load_group_spec accepts; round-trips bit-exactly.
std::string write_group_spec(const FreeProduct& fp);

/// First `count` elements of G in the global well-order; g_1 is the identity.
std::vector<Word> enumerate_elements(const FreeProduct& fp, int count);

/// 0-based position of `w` in the well-order, or nullopt past `cap` entries.
std::optional<int> well_order_index(const FreeProduct& fp, const Word& w, int cap);

/// Complete Aut(f), identity first, deterministic order. Throws above `cap`.
std::vector<FactorAuto> factor_automorphisms(const FactorGroup& f, int cap = 16);

}  // namespace wlab
