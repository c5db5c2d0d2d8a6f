#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/basis.hpp"
#include "wlab/tree.hpp"

namespace wlab {

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Equivalence class [H, A]: canonical representative is the least basis in
/// the orbit of carried moves (the tree is shared by the whole orbit).
struct VertexType {
    Basis basis;
    PointedTree tree;

    bool nuclear() const { return is_nuclear(tree); }
    std::string key() const { return tree.code() + "|" + basis_key(basis); }
    bool operator==(const VertexType& o) const { return basis == o.basis && tree == o.tree; }
    bool operator<(const VertexType& o) const { return key() < o.key(); }
};

/// Moves carried by [. , tree]: operative k with a nontrivial partition,
/// one conjugator choice per non-basepoint petal, identity excluded.
std::vector<MoveSpec> carried_moves_at(const FreeProduct& fp, const PointedTree& tree);

/// Orbit of the basis under carried moves at the tree (the tree is fixed).
std::vector<Basis> vertex_orbit(const FreeProduct& fp, const Basis& b, const PointedTree& tree,
                                int cap = 100000);

VertexType canonical_vertex(const FreeProduct& fp, const Basis& b, const PointedTree& tree,
                            int cap = 100000);

/// Class order: u <= v iff the trees fold and the orbits share a basis.
bool vertex_leq(const FreeProduct& fp, const VertexType& u, const VertexType& v);

/// An automorphism cached as images of every standard letter.
struct AutElement {
    std::vector<std::vector<Word>> images;  // [factor-1][elem]

    static AutElement identity(const FreeProduct& fp);
    static AutElement from_factor_auto(const FreeProduct& fp, const FactorAuto& psi);
    /// The move in factor coordinates applied at the given basis.
    static AutElement from_move(const FreeProduct& fp, const RootedBasis& rb, const MoveSpec& m);

    Word apply(const FreeProduct& fp, const Word& g) const;
    bool is_identity(const FreeProduct& fp) const;
    bool operator==(const AutElement& o) const { return images == o.images; }
    bool operator<(const AutElement& o) const;
    std::string key() const;
};

/// a then b, as a single cached element.
AutElement compose(const FreeProduct& fp, const AutElement& a, const AutElement& b);
/// Order of the element, or nullopt if it exceeds `cap`.
std::optional<int> element_order(const FreeProduct& fp, const AutElement& a, int cap = 24);

/// Splits the restriction to G_i as g -> u psi(g) u^-1 with u canonical.
/// Fails when the element does not preserve the conjugacy class of G_i.
std::optional<std::pair<Word, FactorAuto>> split_conjugator(const FreeProduct& fp,
                                                            const AutElement& a, int i);

VertexType apply_to_vertex(const FreeProduct& fp, const AutElement& a, const VertexType& v);

/// Star of a nuclear vertex: [H_v, A] over every pointed tree, ordered by
/// folding; element 0 is v itself.
struct StarPoset {
    std::vector<VertexType> elems;
    std::vector<std::vector<bool>> leq;
};
StarPoset star_poset(const FreeProduct& fp, const Basis& b);

struct BallVertex {
    RootedBasis rb;
    long long w0_norm = 0;
};

struct Ball {
    std::vector<BallVertex> vertices;              // BFS order, standard basis first
    std::map<std::string, int> index;              // basis key -> vertex index
    std::set<std::pair<int, int>> edges;           // shared-carrier adjacency, i < j
    std::map<std::pair<int, int>, std::string> edge_carrier;  // canonical carrier tree code
    long long radius = 0;

    int find(const Basis& b) const;
};

/// Nuclear vertices with ||.||_W0 <= R reachable by Whitehead moves, plus the
/// shared-vertex-type adjacency. Throws VerificationError past `cap` vertices.
Ball enumerate_ball(const FreeProduct& fp, const std::vector<Word>& w0, long long radius,
                    long long cap = 1000000);

enum class NormKind { W0, ZG };

struct ReductiveMove {
    MoveSpec move;
    PointedTree carrier;
    RootedBasis result;
};

/// Strictly norm-decreasing moves at a nuclear vertex, each with its minimal
/// carrier in the ascending star.
std::vector<ReductiveMove> reductive_moves(const FreeProduct& fp, const RootedBasis& rb,
                                           NormKind kind, const std::vector<Word>& w0);

struct ReductionStep {
    MoveSpec move;
    Basis to;
    long long w0_before = 0, w0_after = 0;
};

/// Greedy descent by strictly reductive moves; ends at the standard basis or
/// throws VerificationError if no reductive move exists at a non-minimal vertex.
std::vector<ReductionStep> reduce_to_minimal(const FreeProduct& fp, const RootedBasis& rb,
                                             NormKind kind, const std::vector<Word>& w0,
                                             int max_steps = 4096);

/// Subgroup generated by the vertex-fixing members of {carried moves at the
/// representatives} u {factor automorphisms}; closure certified finite under
/// `order_cap`, else throws VerificationError.
std::vector<AutElement> stabilizer(const FreeProduct& fp, const RootedBasis& rb,
                                   const PointedTree& tree, int order_cap = 512);

}  // namespace wlab
