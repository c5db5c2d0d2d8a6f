#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlab/group.hpp"

namespace wlab {

/// Conjugator tuple (w_1, .., w_n): the i-th basis element is w_i G_i w_i^-1.
/// Canonical: no w_i ends in a letter of factor i, so the tuple determines
/// the subgroup system uniquely.
struct Basis {
    std::vector<Word> w;

    int n() const { return static_cast<int>(w.size()); }
    bool is_standard() const;
    bool operator==(const Basis& o) const { return w == o.w; }
    bool operator!=(const Basis& o) const { return !(*this == o); }
};

Basis standard_basis(int n);
Basis canonicalize_basis(const FreeProduct& fp, const std::vector<Word>& raw);
bool basis_less(const Basis& a, const Basis& b);
std::string basis_key(const Basis& b);
std::string basis_to_json(const Basis& b);
Basis basis_from_json(const FreeProduct& fp, const std::string& text);

/// A Whitehead move in factor coordinates: the basis element H_k supplies the
/// conjugators, and label j is conjugated by w_k y[j] w_k^-1 with y[j] in G_k.
/// y[k] = 0 and y[0] (the basepoint) = 0 always.
struct MoveSpec {
    int operative = 0;
    std::vector<int> y;  // size n+1, y[0] unused

    bool is_identity() const;
    MoveSpec inverse(const FreeProduct& fp) const;
    bool operator==(const MoveSpec& o) const { return operative == o.operative && y == o.y; }
};

/// All move specs at a nuclear vertex (every petal assignment over every
/// operative factor), deterministic order, identity excluded.
std::vector<MoveSpec> all_nuclear_moves(const FreeProduct& fp);

Basis apply_move_to_basis(const FreeProduct& fp, const Basis& b, const MoveSpec& m);

/// Basis together with the cached inverse of the conjugation automorphism
/// phi(g) = w_i g w_i^-1 (g in G_i). inv_images[i-1][e] is phi^-1 of the
/// letter (i, e); applying it letterwise computes lengths in the basis.
struct RootedBasis {
    Basis basis;
    std::vector<std::vector<Word>> inv_images;

    static RootedBasis standard(const FreeProduct& fp);
    Word apply_inverse(const FreeProduct& fp, const Word& g) const;
    Word apply_forward(const FreeProduct& fp, const Word& g) const;
    int length_of(const FreeProduct& fp, const Word& g) const;
    RootedBasis apply_move(const FreeProduct& fp, const MoveSpec& m) const;
};

/// Finds a rooted structure for an arbitrary valid basis by best-first search
/// over Whitehead moves back to the standard basis. Returns nullopt when the
/// expansion cap is hit (malformed input or out of desk scale).
std::optional<RootedBasis> root_basis(const FreeProduct& fp, const Basis& target,
                                      long long cap = 200000);

/// Debug check: every standard letter round-trips through the basis.
bool verify_basis(const FreeProduct& fp, const RootedBasis& rb);

/// Normal form of g with respect to the decomposition G = H_1 * .. * H_n:
/// alternating nontrivial syllables (factor id, w_i gamma w_i^-1).
std::vector<std::pair<int, Word>> rewrite_in_basis(const FreeProduct& fp, const RootedBasis& rb,
                                                   const Word& g);

long long norm_w(const FreeProduct& fp, const RootedBasis& rb, const std::vector<Word>& words);

/// The word set W_0 = {lambda_1, .., lambda_n}.
std::vector<Word> lambda_words(const FreeProduct& fp);

struct NormVector {
    int cutoff = 0;
    std::vector<int> lengths;

    bool operator==(const NormVector& o) const { return cutoff == o.cutoff && lengths == o.lengths; }
    std::string to_json() const;
};

NormVector norm_vector(const FreeProduct& fp, const RootedBasis& rb, int cutoff);

enum class NormOrder { Less, EqualUpToCutoff, Greater };

NormOrder compare_norms(const NormVector& a, const NormVector& b);

/// Lexicographic Z^G comparison with automatic cutoff doubling
/// (64 -> 4096 by default).
NormOrder compare_zg(const FreeProduct& fp, const RootedBasis& a, const RootedBasis& b,
                     int start_cutoff = 64, int cap = 4096);

}  // namespace wlab
