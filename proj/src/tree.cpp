#include "wlab/tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace wlab {

int PointedTree::root() const {
    for (int a = 0; a < blocks(); ++a)
        if (parent_of[a] == 0) return a;
    throw GroupError("pointed tree has no root block");
}

std::vector<int> PointedTree::block_labels(int a) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (block_of[i] == a) out.push_back(i);
    return out;
}

std::vector<int> PointedTree::child_blocks(int i) const {
    std::vector<int> out;
    for (int a = 0; a < blocks(); ++a)
        if (parent_of[a] == i) out.push_back(a);
    return out;
}

int PointedTree::depth_of_block(int a) const {
    int d = 0;
    int cur = a;
    while (parent_of[cur] != 0) {
        cur = block_of[parent_of[cur]];
        ++d;
    }
    return d;
}

bool PointedTree::operator<(const PointedTree& o) const {
    if (n != o.n) return n < o.n;
    if (block_of != o.block_of) return block_of < o.block_of;
    return parent_of < o.parent_of;
}

std::string PointedTree::code() const {
    std::function<std::string(int)> label_code;
    std::function<std::string(int)> block_code;
    label_code = [&](int i) {
        std::vector<std::string> kids;
        for (int a : child_blocks(i)) kids.push_back(block_code(a));
        std::sort(kids.begin(), kids.end());
        std::string s = std::to_string(i);
        for (auto& k : kids) s += k;
        return s;
    };
    block_code = [&](int a) {
        std::vector<std::string> parts;
        for (int i : block_labels(a)) parts.push_back(label_code(i));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p + ",";
        s += ")";
        return s;
    };
    return "*" + block_code(root());
}

PointedTree nuclear_tree(int n) {
    PointedTree t;
    t.n = n;
    t.block_of.assign(n + 1, 0);
    t.parent_of = {0};
    return t;
}

bool is_nuclear(const PointedTree& t) { return t.blocks() == 1; }

PointedTree canonical_tree(int n, const std::vector<int>& block_of, const std::vector<int>& parent_of) {
    PointedTree t;
    t.n = n;
    t.block_of = block_of;
    t.parent_of = parent_of;
    const int nb = t.blocks();
    if ((int)block_of.size() != n + 1) throw GroupError("pointed tree: bad label map size");
    int roots = 0;
    for (int a = 0; a < nb; ++a) {
        if (parent_of[a] == 0) ++roots;
        if (parent_of[a] < 0 || parent_of[a] > n) throw GroupError("pointed tree: bad parent label");
        if (t.block_labels(a).empty()) throw GroupError("pointed tree: anonymous vertex of valence < 2");
    }
    if (roots != 1) throw GroupError("pointed tree: * must have valence 1");
    for (int i = 1; i <= n; ++i)
        if (block_of[i] < 0 || block_of[i] >= nb) throw GroupError("pointed tree: label outside blocks");
    // acyclic + connected: every block walks up to *
    for (int a = 0; a < nb; ++a) {
        int cur = a, steps = 0;
        while (t.parent_of[cur] != 0) {
            cur = t.block_of[t.parent_of[cur]];
            if (++steps > nb) throw GroupError("pointed tree: cycle detected");
        }
    }
    // canonical renumbering: DFS from the root, labels ascending, child blocks by code
    std::function<std::string(int)> block_code;
    std::function<std::string(int)> label_code;
    label_code = [&](int i) {
        std::vector<std::string> kids;
        for (int a : t.child_blocks(i)) kids.push_back(block_code(a));
        std::sort(kids.begin(), kids.end());
        std::string s = std::to_string(i);
        for (auto& k : kids) s += k;
        return s;
    };
    block_code = [&](int a) {
        std::vector<std::string> parts;
        for (int i : t.block_labels(a)) parts.push_back(label_code(i));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p + ",";
        s += ")";
        return s;
    };
    std::vector<int> renum(nb, -1);
    int next = 0;
    std::function<void(int)> visit = [&](int a) {
        renum[a] = next++;
        for (int i : t.block_labels(a)) {
            auto kids = t.child_blocks(i);
            std::sort(kids.begin(), kids.end(),
                      [&](int x, int y) { return block_code(x) < block_code(y); });
            for (int c : kids) visit(c);
        }
    };
    visit(t.root());
    PointedTree out;
    out.n = n;
    out.block_of.assign(n + 1, 0);
    out.parent_of.assign(nb, 0);
    for (int i = 1; i <= n; ++i) out.block_of[i] = renum[t.block_of[i]];
    for (int a = 0; a < nb; ++a) out.parent_of[renum[a]] = t.parent_of[a];
    return out;
}

std::vector<PointedTree> enumerate_pointed_trees(int n) {
    if (n < 1 || n > 6) throw GroupError("pointed-tree enumeration capped at 1 <= n <= 6");
    std::vector<PointedTree> out;
    // set partitions of {1..n} via restricted growth strings
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxb) {
        if (pos == n) {
            int nb = maxb;
            // choose root block and parent labels for the others
            std::vector<std::vector<int>> blocks(nb);
            for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
            std::vector<int> parent(nb, -1);
            std::function<void(int)> assign = [&](int b) {
                if (b == nb) {
                    // acyclicity over the block graph
                    std::vector<int> state(nb, 0);
                    std::vector<int> block_of_label(n + 1, 0);
                    for (int a = 0; a < nb; ++a)
                        for (int l : blocks[a]) block_of_label[l] = a;
                    for (int a = 0; a < nb; ++a) {
                        int cur = a, steps = 0;
                        bool ok = true;
                        while (parent[cur] != 0) {
                            cur = block_of_label[parent[cur]];
                            if (++steps > nb) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) return;
                        (void)state;
                    }
                    out.push_back(canonical_tree(n, block_of_label, parent));
                    return;
                }
                // parent 0 (= *) allowed for exactly one block
                bool has_root = false;
                for (int a = 0; a < b; ++a) has_root |= parent[a] == 0;
                std::vector<int> cands;
                if (!has_root) cands.push_back(0);
                for (int l = 1; l <= n; ++l) {
                    bool inside = std::find(blocks[b].begin(), blocks[b].end(), l) != blocks[b].end();
                    if (!inside) cands.push_back(l);
                }
                for (int c : cands) {
                    parent[b] = c;
                    assign(b + 1);
                }
                parent[b] = -1;
            };
            assign(0);
            return;
        }
        for (int v = 0; v <= maxb; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(maxb, v + 1));
        }
    };
    rec(0, 0);
    // drop the assignments where some block missed a root (parent 0 unused)
    std::vector<PointedTree> filtered;
    for (auto& t : out) {
        bool ok = false;
        for (int a = 0; a < t.blocks(); ++a) ok |= t.parent_of[a] == 0;
        if (ok) filtered.push_back(t);
    }
    std::sort(filtered.begin(), filtered.end(), [](const PointedTree& a, const PointedTree& b) {
        bool na = is_nuclear(a), nb = is_nuclear(b);
        if (na != nb) return na;
        return a.code() < b.code();
    });
    filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
    return filtered;
}

int BasedPartition::petal_of(int l) const {
    for (int p = 0; p < (int)petals.size(); ++p)
        if (std::find(petals[p].begin(), petals[p].end(), l) != petals[p].end()) return p;
    return -1;
}

int BasedPartition::star_petal() const { return petal_of(0); }

BasedPartition partition_at(const PointedTree& t, int k) {
    const int n = t.n;
    const int nb = t.blocks();
    // vertices: labels 0..n, blocks n+1..n+nb
    auto bid = [&](int a) { return n + 1 + a; };
    std::vector<std::vector<int>> adj(n + 1 + nb);
    auto add_edge = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (int a = 0; a < nb; ++a) add_edge(t.parent_of[a], bid(a));
    for (int i = 1; i <= n; ++i) add_edge(i, bid(t.block_of[i]));
    std::vector<int> comp(n + 1 + nb, -1);
    int nc = 0;
    for (int s = 0; s < (int)adj.size(); ++s) {
        if (s == k || comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = nc;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (v == k || comp[v] != -1) continue;
                comp[v] = nc;
                q.push(v);
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> petals(nc);
    for (int l = 0; l <= n; ++l)
        if (l != k) petals[comp[l]].push_back(l);
    petals.erase(std::remove_if(petals.begin(), petals.end(),
                                [](const std::vector<int>& p) { return p.empty(); }),
                 petals.end());
    for (auto& p : petals) std::sort(p.begin(), p.end());
    std::sort(petals.begin(), petals.end());
    return BasedPartition{k, petals};
}

std::map<int, BasedPartition> partitions_from_tree(const PointedTree& t) {
    std::map<int, BasedPartition> out;
    for (int k = 0; k <= t.n; ++k) out.emplace(k, partition_at(t, k));
    return out;
}

bool poset_leq(const PointedTree& a, const PointedTree& b) {
    if (a.n != b.n) throw GroupError("poset_leq: label count mismatch");
    for (int k = 0; k <= a.n; ++k) {
        BasedPartition pa = partition_at(a, k);
        BasedPartition pb = partition_at(b, k);
        for (const auto& petal : pb.petals) {
            int target = pa.petal_of(petal[0]);
            for (int l : petal)
                if (pa.petal_of(l) != target) return false;
        }
    }
    return true;
}

namespace {

struct EdgeList {
    int n = 0;
    int nblocks = 0;
    std::vector<std::pair<int, int>> edges;  // (label 0..n, block id)
};

EdgeList to_edges(const PointedTree& t) {
    EdgeList g;
    g.n = t.n;
    g.nblocks = t.blocks();
    for (int a = 0; a < t.blocks(); ++a) g.edges.push_back({t.parent_of[a], a});
    for (int i = 1; i <= t.n; ++i) g.edges.push_back({i, t.block_of[i]});
    return g;
}

PointedTree from_edges(EdgeList g) {
    // drop duplicate edges, prune valence-1 blocks
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    while (true) {
        std::vector<int> deg(g.nblocks, 0);
        for (auto& e : g.edges) ++deg[e.second];
        bool pruned = false;
        for (int a = 0; a < g.nblocks && !pruned; ++a) {
            if (deg[a] == 1) {
                g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                             [&](auto& e) { return e.second == a; }),
                              g.edges.end());
                pruned = true;
            }
        }
        if (!pruned) break;
    }
    // orient from * by BFS over the bipartite graph
    std::map<int, std::vector<int>> label_adj;  // label -> blocks
    std::map<int, std::vector<int>> block_adj;  // block -> labels
    for (auto& [l, a] : g.edges) {
        label_adj[l].push_back(a);
        block_adj[a].push_back(l);
    }
    if (label_adj[0].size() != 1) throw GroupError("tree surgery: * must have valence 1");
    std::vector<int> block_of(g.n + 1, -1);
    std::map<int, int> parent;  // block -> parent label
    std::set<int> seen_labels = {0};
    std::set<int> seen_blocks;
    std::queue<int> q;  // labels
    q.push(0);
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int a : label_adj[l]) {
            if (seen_blocks.count(a)) continue;
            seen_blocks.insert(a);
            parent[a] = l;
            for (int m : block_adj[a]) {
                if (seen_labels.count(m)) continue;
                seen_labels.insert(m);
                block_of[m] = a;
                q.push(m);
            }
        }
    }
    if ((int)seen_labels.size() != g.n + 1)
        throw GroupError("tree surgery: disconnected result");
    if ((int)seen_blocks.size() * 1 + g.n + 1 != (int)g.edges.size() + 1)
        throw GroupError("tree surgery: result is not a tree");
    // compact block ids
    std::map<int, int> compact;
    for (int a : seen_blocks) compact.emplace(a, (int)compact.size());
    std::vector<int> bo(g.n + 1, 0), po(compact.size(), 0);
    for (int i = 1; i <= g.n; ++i) bo[i] = compact[block_of[i]];
    for (auto& [a, p] : parent) po[compact[a]] = p;
    return canonical_tree(g.n, bo, po);
}

}  // namespace

PointedTree fold(const PointedTree& t, int label, const std::vector<int>& merge_blocks) {
    if (merge_blocks.size() <= 1) return t;
    std::set<int> adj;
    if (label >= 1) adj.insert(t.block_of[label]);
    if (label == 0) adj.insert(t.root());
    for (int a : t.child_blocks(label)) adj.insert(a);
    for (int a : merge_blocks)
        if (!adj.count(a)) throw GroupError("fold: edge does not touch the given label");
    EdgeList g = to_edges(t);
    int rep = *std::min_element(merge_blocks.begin(), merge_blocks.end());
    for (auto& e : g.edges)
        if (std::find(merge_blocks.begin(), merge_blocks.end(), e.second) != merge_blocks.end())
            e.second = rep;
    return from_edges(g);
}

PointedTree fold_partition_to(const PointedTree& t, int k, const BasedPartition& target) {
    // Each block adjacent to k fronts one component of T - {k}; merge the
    // blocks whose components land in the same target petal.
    const int n = t.n;
    const int nb = t.blocks();
    auto bid = [&](int a) { return n + 1 + a; };
    std::vector<std::vector<int>> graph(n + 1 + nb);
    for (int a = 0; a < nb; ++a) {
        graph[t.parent_of[a]].push_back(bid(a));
        graph[bid(a)].push_back(t.parent_of[a]);
    }
    for (int i = 1; i <= n; ++i) {
        graph[i].push_back(bid(t.block_of[i]));
        graph[bid(t.block_of[i])].push_back(i);
    }
    std::vector<int> comp(n + 1 + nb, -1);
    int nc = 0;
    for (int s = 0; s < (int)graph.size(); ++s) {
        if (s == k || comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = nc;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : graph[u])
                if (v != k && comp[v] == -1) {
                    comp[v] = nc;
                    q.push(v);
                }
        }
        ++nc;
    }
    std::vector<int> comp_probe(nc, -1);  // any label in the component
    for (int l = 0; l <= n; ++l)
        if (l != k) comp_probe[comp[l]] = l;
    std::vector<int> adj;
    adj.push_back(k == 0 ? t.root() : t.block_of[k]);
    for (int a : t.child_blocks(k)) adj.push_back(a);
    std::map<int, std::vector<int>> groups;  // target petal -> adjacent blocks
    for (int a : adj) {
        int probe = comp_probe[comp[bid(a)]];
        int tp = target.petal_of(probe);
        if (tp < 0) throw GroupError("fold_partition_to: target does not cover a petal");
        groups[tp].push_back(a);
    }
    EdgeList g = to_edges(t);
    for (auto& [tp, blocks] : groups) {
        if (blocks.size() <= 1) continue;
        int rep = *std::min_element(blocks.begin(), blocks.end());
        for (auto& e : g.edges)
            if (std::find(blocks.begin(), blocks.end(), e.second) != blocks.end()) e.second = rep;
    }
    return from_edges(g);
}

PointedTree refine_only_at(const PointedTree& base, int k, const BasedPartition& target) {
    EdgeList g = to_edges(base);
    int next_block = g.nblocks;
    std::vector<int> adj;
    adj.push_back(base.block_of[k]);
    for (int a : base.child_blocks(k)) adj.push_back(a);
    BasedPartition cur = partition_at(base, k);
    for (int a : adj) {
        // branches of a relative to k: every neighbor of a except k roots one
        std::vector<int> nbrs;  // labels adjacent to a, except k
        if (base.parent_of[a] != k) nbrs.push_back(base.parent_of[a]);
        for (int l : base.block_labels(a))
            if (l != k) nbrs.push_back(l);
        if (nbrs.size() <= 1) continue;
        // target petal of each branch = petal of the labels behind that neighbor
        std::map<int, std::vector<int>> groups;  // petal -> branch roots
        for (int x : nbrs) {
            int tp = target.petal_of(x);
            if (tp < 0) throw GroupError("refine_only_at: target misses a label");
            groups[tp].push_back(x);
        }
        if (groups.size() <= 1) continue;
        // split a: one new block per group (reuse a for the first)
        bool first = true;
        for (auto& [tp, roots] : groups) {
            int blk = first ? a : next_block++;
            first = false;
            if (blk != a) {
                for (auto& e : g.edges) {
                    if (e.second != a) continue;
                    if (std::find(roots.begin(), roots.end(), e.first) != roots.end()) e.second = blk;
                }
                g.edges.push_back({k, blk});
            }
        }
    }
    g.nblocks = next_block;
    PointedTree out = from_edges(g);
    if (!(poset_leq(base, out))) throw GroupError("refine_only_at: result does not refine the base");
    return out;
}

PointedTree wedge_tree(int n, int k, const std::vector<int>& petal_class) {
    std::set<int> classes;
    for (int j = 1; j <= n; ++j)
        if (j != k && petal_class[j] > 0) classes.insert(petal_class[j]);
    std::vector<int> block_of(n + 1, 0);
    std::vector<int> parent;
    parent.push_back(0);  // root block: * side, holds k and class-0 labels
    std::map<int, int> class_block;
    for (int c : classes) {
        class_block[c] = (int)parent.size();
        parent.push_back(k);
    }
    for (int j = 1; j <= n; ++j) {
        if (j == k)
            block_of[j] = 0;
        else
            block_of[j] = petal_class[j] > 0 ? class_block[petal_class[j]] : 0;
    }
    return canonical_tree(n, block_of, parent);
}

std::string PointedTree::to_dot() const {
    std::ostringstream out;
    out << "graph pointed_tree {\n";
    out << "  star [shape=box,label=\"*\"];\n";
    for (int i = 1; i <= n; ++i) out << "  L" << i << " [shape=box,label=\"" << i << "\"];\n";
    for (int a = 0; a < blocks(); ++a) out << "  B" << a << " [shape=circle,label=\"\"];\n";
    for (int a = 0; a < blocks(); ++a) {
        if (parent_of[a] == 0)
            out << "  star -- B" << a << ";\n";
        else
            out << "  L" << parent_of[a] << " -- B" << a << ";\n";
    }
    for (int i = 1; i <= n; ++i) out << "  L" << i << " -- B" << block_of[i] << ";\n";
    out << "}\n";
    return out.str();
}

std::string PointedTree::to_json() const {
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"block_of\":[";
    for (int i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << block_of[i];
    out << "],\"parent_of\":[";
    for (int a = 0; a < blocks(); ++a) out << (a ? "," : "") << parent_of[a];
    out << "]}";
    return out.str();
}

}  // namespace wlab
