#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/complex.hpp"
#include "wlab/topology.hpp"

namespace wlab {

/// Path and block bookkeeping for a representative (basis, tree).
/// w_path[i] is the tuple entry (the conjugator of H_i), increment[i] the
/// relative conjugator against the parent label on the path to *.
struct TreeIndices {
    std::vector<std::vector<int>> path;   // per label 1..n: (z_1, .., z_k = i); [0] unused
    std::vector<int> parent_label;        // z_{k-1}, 0 at depth 1
    std::vector<int> home_block;          // anonymous vertex between parent and i
    std::vector<Word> w_path;             // w(J(i))
    std::vector<Word> increment;          // w(J(parent))^-1 w(J(i))
    std::vector<int> stem;                // per block: stem label, 0 = *
    std::vector<std::vector<int>> block_members;  // B(a)
    std::vector<std::vector<int>> block_factors;  // I(a), stem first when != *
    std::vector<int> block_order;         // block ids sorted by (depth, id)
};

TreeIndices tree_indices(const FreeProduct& fp, const Basis& b, const PointedTree& t);

/// phi(g in G_i) = d_i psi_i(g) d_i^-1 with d_i the ordered product of the
/// y[j][i] along the path from * to i.
struct FactoredParts {
    std::vector<std::vector<int>> y;  // y[j][i]: conjugator of label i in the operative-j move
    std::vector<FactorAuto> psi;      // one per factor
};

/// Extracts the factored form relative to the tree; validates petal constancy
/// and the round trip. Returns nullopt when the element is not of that shape.
std::optional<FactoredParts> factor_parts(const FreeProduct& fp, const AutElement& a,
                                          const PointedTree& tree);
AutElement aut_from_parts(const FreeProduct& fp, const FactoredParts& parts,
                          const PointedTree& tree);
/// Composite in a fixed sequential order; valid for arbitrary parts.
AutElement aut_from_parts_sequential(const FreeProduct& fp, const FactoredParts& parts);

struct FSubgroup {
    PointedTree base_tree;
    VertexType base;  // [H0, A]
    std::vector<AutElement> generators;
    std::vector<AutElement> elements;   // full closure, identity included
    std::vector<FactoredParts> parts;   // aligned with elements
};

/// Builds the closure and refactors every element; throws VerificationError
/// when an element does not fix the base vertex or does not refactor.
FSubgroup make_fsubgroup(const FreeProduct& fp, const PointedTree& tree,
                         const std::vector<AutElement>& gens, int order_cap = 256);

/// No fixed vertex lies strictly below the base vertex.
bool base_is_reduced(const FreeProduct& fp, const FSubgroup& F);

struct BlockFactor {
    int label = 0;          // the factor of G this block factor sits inside
    bool formal = false;    // trivial twisted-fixed subgroup, formal Z/2 stand-in
    std::vector<int> elems; // G_label element per sub element; {0} when formal
};

struct BlockContext {
    int block = 0;
    int stem = 0;  // 0 = *
    std::vector<BlockFactor> facs;  // stem factor first when stem != *
    FreeProduct sub;                // the abstract free product G_a
};

struct CircTables {
    std::vector<std::vector<std::vector<int>>> circ;  // [j-1][k-1]: sorted subgroup of G_j
    std::vector<BlockContext> blocks;                 // per block of the base tree
};

CircTables compute_circ(const FreeProduct& fp, const FSubgroup& F);

/// Letters of every increment stay inside the twisted-fixed subgroups and the
/// tree matches the base tree.
bool is_f_standard(const FreeProduct& fp, const FSubgroup& F, const CircTables& ct,
                   const Basis& b, const PointedTree& t);

std::optional<Basis> standard_representative(const FreeProduct& fp, const FSubgroup& F,
                                             const CircTables& ct, const VertexType& v);

struct FixedClass {
    VertexType v;
    std::set<std::string> orbit_keys;
    long long max_orbit_norm = 0;  // max ||.||_W0 over the orbit bases
    bool fixed = false;
    bool margin_ok = false;  // whole orbit within the safety margin
    bool reduced = false;    // fixed and nothing fixed strictly below
};

struct FixedComplex {
    std::vector<FixedClass> classes;           // every class over the ball
    std::map<std::string, int> index;          // class key -> position
};

FixedComplex fixed_subcomplex(const FreeProduct& fp, const Ball& ball, const FSubgroup& F,
                              long long inner_radius);

/// Representative with a rooted basis: every norm below needs the table.
struct RootedRep {
    RootedBasis rb;
    PointedTree tree;
};

/// Element of G_a as a word in sub coordinates.
Word realize_block_word(const FreeProduct& fp, const BlockContext& ctx, const Word& sub);

/// First `count` elements of G_a: designated letters first (stem factor, then
/// the others), then the remaining words by length.
std::vector<Word> enumerate_block_elements(const BlockContext& ctx, int count);

struct FNorm {
    std::vector<std::vector<int>> segments;  // per block in block_order
    int cutoff = 0;
};

FNorm f_norm(const FreeProduct& fp, const CircTables& ct, const RootedRep& rep, int cutoff);
NormOrder compare_f_norm_vectors(const FNorm& a, const FNorm& b);
NormOrder compare_f_norm(const FreeProduct& fp, const CircTables& ct, const RootedRep& a,
                         const RootedRep& b, int start_cutoff = 12, int cap = 96);

/// Walks blocks outward, conjugating each subtree by a twisted-fixed element
/// of the stem factor whenever that lowers the block segment. Idempotent.
RootedRep minimize_representative(const FreeProduct& fp, const FSubgroup& F, const CircTables& ct,
                                  const RootedRep& rep);

/// outer = 2 |w(J(stem))|, inner = |h| in the block-local basis; their sum is
/// |h| in the full basis.
std::pair<int, int> split_length(const FreeProduct& fp, const RootedRep& rep, int block,
                                 const Word& h);

struct SubMove {
    int block = 0;
    MoveSpec move;        // in sub coordinates of the block product
    PointedTree carrier;  // sub pointed tree
};

/// Restriction of the big tree to a block: the subtree spanned by I(a).
PointedTree restrict_tree(const FreeProduct& fp, const TreeIndices& ti, const PointedTree& big,
                          int block);
/// Replaces the block vertex by the structure of the sub tree.
PointedTree glue_tree(const FreeProduct& fp, const TreeIndices& ti, const PointedTree& base,
                      int block, const PointedTree& sub);

/// Lifted move: conjugates every branch below the chosen block members.
std::pair<MoveSpec, PointedTree> lift_move(const FreeProduct& fp, const CircTables& ct,
                                           const RootedRep& rep, const SubMove& alpha);
/// Restriction of a move at the big vertex to one adjacent block.
SubMove restrict_move(const FreeProduct& fp, const CircTables& ct, const RootedRep& rep,
                      const MoveSpec& big, const PointedTree& carrier, int block);

/// Rooted sub basis of the block product at the representative (the tuple of
/// increments in sub coordinates).
RootedBasis block_sub_basis(const FreeProduct& fp, const CircTables& ct, const RootedRep& rep,
                            int block);

/// Norm vector of a sub vertex in the block order (designated letters first).
std::vector<int> block_norm_vector(const BlockContext& ctx, const RootedBasis& sub_rb, int cutoff);
NormOrder compare_block_norm(const BlockContext& ctx, const RootedBasis& a, const RootedBasis& b,
                             int start_cutoff = 12, int cap = 96);

struct RetractionReport {
    std::vector<PointedTree> star_trees;   // fixed ascending star above the base tree
    std::vector<int> r1, r2, r3;           // indices into star_trees
    std::map<int, int> f1, f2;             // poset retractions, index -> index
    std::vector<int> active_blocks;        // blocks with nonempty reductive sub stars
    std::map<int, std::vector<PointedTree>> sub_r2;  // per active block
    bool join_iso_verified = false;
    ContractibleReport r1_contractible{ContractibleVerdict::NotContractible, "empty"};
    std::vector<std::string> notes;
};

RetractionReport retraction_chain(const FreeProduct& fp, const FSubgroup& F, const CircTables& ct,
                                  const RootedRep& rep);

struct TwistingReport {
    bool tree_equal = false;
    std::vector<std::string> violations;  // instantiated identities that failed
    bool ok() const { return tree_equal && violations.empty(); }
};

TwistingReport verify_twisting(const FreeProduct& fp, const FSubgroup& F, const RootedRep& rep);

/// Search helper shared by the verification suites: finite-order elements of
/// the factored form, built from per-operative single-petal conjugations.
std::vector<AutElement> search_finite_factored(const FreeProduct& fp, int order_cap,
                                               int max_results = 64);

}  // namespace wlab
