#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wlab/tree.hpp"

namespace wlab::testing {

/// Independent naive generator: enumerate every parent assignment on vertex
/// sets {*, 1..n, k anonymous} for k = 1..n, filter the pointed-tree
/// invariants, and collect canonical codes. Completely separate from the
/// set-partition construction used by enumerate_pointed_trees.
inline std::set<std::string> naive_pointed_tree_codes(int n) {
    std::set<std::string> codes;
    for (int k = 1; k <= n; ++k) {
        // parent of each label 1..n: an anonymous vertex (0..k-1)
        // parent of each anonymous vertex: a label (1..n) or * (encoded n+1)
        std::vector<int> lp(n, 0), ap(k, 0);
        while (true) {
            // exactly one anonymous vertex under *
            int roots = 0;
            for (int a = 0; a < k; ++a)
                if (ap[a] == n + 1) ++roots;
            if (roots == 1) {
                // acyclic: every anonymous vertex walks up to *
                bool ok = true;
                for (int a = 0; a < k && ok; ++a) {
                    int cur = a, steps = 0;
                    while (ap[cur] != n + 1) {
                        cur = lp[ap[cur] - 1];
                        if (++steps > n + k) {
                            ok = false;
                            break;
                        }
                    }
                }
                // anonymous valence >= 2: parent edge plus at least one label child
                for (int a = 0; a < k && ok; ++a) {
                    int kids = 0;
                    for (int l = 0; l < n; ++l)
                        if (lp[l] == a) ++kids;
                    if (kids == 0) ok = false;
                }
                if (ok) {
                    std::vector<int> block_of(n + 1, 0), parent_of(k, 0);
                    for (int l = 0; l < n; ++l) block_of[l + 1] = lp[l];
                    for (int a = 0; a < k; ++a) parent_of[a] = ap[a] == n + 1 ? 0 : ap[a];
                    try {
                        codes.insert(canonical_tree(n, block_of, parent_of).code());
                    } catch (const GroupError&) {
                        // disconnected or otherwise invalid assignment
                    }
                }
            }
            // odometer
            int pos = 0;
            bool done = false;
            while (true) {
                if (pos < n) {
                    if (++lp[pos] < k) break;
                    lp[pos] = 0;
                    ++pos;
                } else if (pos < n + k) {
                    int a = pos - n;
                    ++ap[a];
                    if (ap[a] == 0) ap[a] = 1;
                    if (ap[a] <= n + 1) break;
                    ap[a] = 1;
                    ++pos;
                } else {
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }
    return codes;
}

}  // namespace wlab::testing
