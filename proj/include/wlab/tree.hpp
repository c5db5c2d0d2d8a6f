#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlab/group.hpp"

namespace wlab {

/// Pointed labelled bipartite tree on labels {*, 1, .., n}.
/// Label 0 stands for the basepoint *. * has valence 1, every anonymous
/// vertex has valence >= 2, and anonymous vertices are numbered canonically.
///
/// Stored as: each label 1..n sits in exactly one anonymous block, and each
/// anonymous vertex hangs below a parent label (0 = * for the root block).
struct PointedTree {
    int n = 0;
    std::vector<int> block_of;   // size n+1, block_of[i] for label i >= 1 (entry 0 unused)
    std::vector<int> parent_of;  // per anonymous vertex: parent label, 0 means *

    int blocks() const { return static_cast<int>(parent_of.size()); }
    int root() const;
    std::vector<int> block_labels(int a) const;
    /// Anonymous vertices hanging below label i.
    std::vector<int> child_blocks(int i) const;
    int depth_of_block(int a) const;  // number of labels strictly above

    bool operator==(const PointedTree& o) const {
        return n == o.n && block_of == o.block_of && parent_of == o.parent_of;
    }
    bool operator<(const PointedTree& o) const;

    std::string code() const;  // canonical string, equal iff trees equal
    std::string to_dot() const;
    std::string to_json() const;
};

PointedTree nuclear_tree(int n);
bool is_nuclear(const PointedTree& t);

/// Renumbers anonymous vertices deterministically; validates the invariants.
PointedTree canonical_tree(int n, const std::vector<int>& block_of, const std::vector<int>& parent_of);

/// All canonical pointed trees on labels {*, 1..n}; nuclear tree first,
/// then by canonical code. Throws above the desk-scale cap n <= 6.
std::vector<PointedTree> enumerate_pointed_trees(int n);

struct BasedPartition {
    int operative = 0;                    // label k, may be 0 for *
    std::vector<std::vector<int>> petals; // partition of the other labels, * appears as 0

    /// Petal index containing label l (0 = *), or -1.
    int petal_of(int l) const;
    /// Petal containing the basepoint.
    int star_petal() const;
    bool trivial() const { return petals.size() <= 1; }
    bool operator==(const BasedPartition& o) const {
        return operative == o.operative && petals == o.petals;
    }
};

/// The partition of {*,1..n} - {k} by connected components of T - {k},
/// for every label k (including *). Petals are sorted canonically.
std::map<int, BasedPartition> partitions_from_tree(const PointedTree& t);
BasedPartition partition_at(const PointedTree& t, int k);

/// Folding order: A <= B iff each petal of A(k) is a union of petals of B(k)
/// for every label k. The nuclear tree is the bottom element.
bool poset_leq(const PointedTree& a, const PointedTree& b);

/// Identifies the anonymous endpoints of the given edges; all edges must share
/// the labelled endpoint `label`. Edges are named by their anonymous vertex.
PointedTree fold(const PointedTree& t, int label, const std::vector<int>& merge_blocks);

/// Coarsens partition-at-k of `t` down to `target` (a coarsening of it),
/// leaving every other partition unchanged.
PointedTree fold_partition_to(const PointedTree& t, int k, const BasedPartition& target);

/// Builds the tree that refines `base` only at label k, where the partition at
/// k becomes `target` (a refinement of base's partition at k realizable by a
/// wedge at k).
PointedTree refine_only_at(const PointedTree& base, int k, const BasedPartition& target);

/// The minimal carrier of a Whitehead move: partition at `k` given by the
/// value classes of `petal_class` (labels with class 0 join the *-petal),
/// every other partition trivial.
PointedTree wedge_tree(int n, int k, const std::vector<int>& petal_class);

/// Raw edge view for tree surgery: pairs (label, block id). Building from
/// edges prunes valence-1 anonymous vertices and canonicalizes.
std::vector<std::pair<int, int>> tree_edges(const PointedTree& t);
PointedTree tree_from_edges(int n, std::vector<std::pair<int, int>> edges);

}  // namespace wlab
