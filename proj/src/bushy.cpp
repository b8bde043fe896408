#include "threecolor/bushy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace threecolor {

namespace {

std::string describe(VertexId v) {
    return std::to_string(v);
}

}  // namespace

bool BushyForest::contains(VertexId v) const {
    return tree_of(v).has_value();
}

bool BushyForest::is_internal(VertexId v) const {
    for (const auto& t : trees)
        if (t.internal.count(v)) return true;
    return false;
}

std::optional<std::size_t> BushyForest::tree_of(VertexId v) const {
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (trees[i].internal.count(v) || trees[i].leaves.count(v)) return i;
    return std::nullopt;
}

std::set<VertexId> BushyForest::all_vertices() const {
    std::set<VertexId> out;
    for (const auto& t : trees) {
        out.insert(t.internal.begin(), t.internal.end());
        out.insert(t.leaves.begin(), t.leaves.end());
    }
    return out;
}

std::size_t BushyForest::internal_count() const {
    std::size_t n = 0;
    for (const auto& t : trees) n += t.internal.size();
    return n;
}

namespace {

std::vector<VertexId> outside_neighbors(const Graph& g, const std::set<VertexId>& members,
                                        VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(v))
        if (!members.count(u)) out.push_back(u);
    return out;
}

// Re-root every tree at its smallest internal vertex; parent links are
// rebuilt from the (undirected) tree edges.
void normalize_roots(BushyForest& f) {
    for (auto& t : f.trees) {
        VertexId new_root = *t.internal.begin();
        std::map<VertexId, std::vector<VertexId>> tree_adj;
        for (const auto& [child, par] : t.parent) {
            tree_adj[child].push_back(par);
            tree_adj[par].push_back(child);
        }
        std::map<VertexId, VertexId> new_parent;
        std::vector<VertexId> stack{new_root};
        std::set<VertexId> seen{new_root};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : tree_adj[v]) {
                if (seen.insert(u).second) {
                    new_parent[u] = v;
                    stack.push_back(u);
                }
            }
        }
        t.root = new_root;
        t.parent = std::move(new_parent);
    }
}

// Drive the forest to maximality. Three moves, smallest witness first:
// internalize a leaf with three or more outside neighbors, absorb an
// outside vertex adjacent to an internal vertex as a leaf, seed a new tree
// at an outside vertex with four or more outside neighbors.
void maximalize(const Graph& g, BushyForest& f) {
    for (;;) {
        std::set<VertexId> members = f.all_vertices();

        std::optional<std::pair<VertexId, std::size_t>> grow;  // (leaf, tree)
        for (std::size_t i = 0; i < f.trees.size(); ++i) {
            for (VertexId l : f.trees[i].leaves) {
                if (outside_neighbors(g, members, l).size() >= 3 &&
                    (!grow || l < grow->first))
                    grow = {l, i};
            }
        }
        if (grow) {
            auto [l, i] = *grow;
            BushyTree& t = f.trees[i];
            t.leaves.erase(l);
            t.internal.insert(l);
            for (VertexId u : outside_neighbors(g, members, l)) {
                t.leaves.insert(u);
                t.parent[u] = l;
            }
            continue;
        }

        std::optional<std::pair<VertexId, VertexId>> absorb;  // (outside, internal)
        for (VertexId v : g.vertices()) {
            if (members.count(v)) continue;
            for (VertexId u : g.neighbors(v)) {
                if (f.is_internal(u)) {
                    absorb = {v, u};
                    break;
                }
            }
            if (absorb) break;
        }
        if (absorb) {
            auto [v, i] = *absorb;
            BushyTree& t = f.trees[*f.tree_of(i)];
            t.leaves.insert(v);
            t.parent[v] = i;
            continue;
        }

        std::optional<VertexId> seed;
        for (VertexId v : g.vertices()) {
            if (members.count(v)) continue;
            if (outside_neighbors(g, members, v).size() >= 4) {
                seed = v;
                break;
            }
        }
        if (seed) {
            BushyTree t;
            t.root = *seed;
            t.internal.insert(*seed);
            for (VertexId u : outside_neighbors(g, members, *seed)) {
                t.leaves.insert(u);
                t.parent[u] = *seed;
            }
            f.trees.push_back(std::move(t));
            continue;
        }
        return;
    }
}

}  // namespace

BushyForest build_maximal_bushy_forest(const Graph& g) {
    BushyForest f;
    maximalize(g, f);
    normalize_roots(f);
    return f;
}

std::vector<std::string> check_maximal(const Graph& g, const BushyForest& f) {
    std::vector<std::string> violations;
    std::set<VertexId> members = f.all_vertices();
    for (VertexId v : g.vertices()) {
        if (members.count(v)) continue;
        if (outside_neighbors(g, members, v).size() >= 4)
            violations.push_back("outside vertex with four outside neighbors: " + describe(v));
        for (VertexId u : g.neighbors(v))
            if (f.is_internal(u)) {
                violations.push_back("outside vertex adjacent to internal vertex: " +
                                     describe(v));
                break;
            }
    }
    for (const auto& t : f.trees)
        for (VertexId l : t.leaves)
            if (outside_neighbors(g, members, l).size() >= 3)
                violations.push_back("leaf with three outside neighbors: " + describe(l));
    return violations;
}

std::set<VertexId> high_magnitude_vertices(const Graph& g, const BushyForest& f) {
    std::set<VertexId> members = f.all_vertices();
    std::set<VertexId> hm;
    for (VertexId v : g.vertices()) {
        if (members.count(v)) continue;
        std::size_t outside = outside_neighbors(g, members, v).size();
        if (outside == 3 && outside < g.degree(v)) hm.insert(v);
    }
    return hm;
}

namespace {

std::vector<std::size_t> adjacent_trees(const Graph& g, const BushyForest& f, VertexId v) {
    std::set<std::size_t> idx;
    for (VertexId u : g.neighbors(v))
        if (auto t = f.tree_of(u)) idx.insert(*t);
    return {idx.begin(), idx.end()};
}

VertexId smallest_adjacent_leaf(const Graph& g, const BushyTree& t, VertexId v) {
    std::optional<VertexId> best;
    for (VertexId u : g.neighbors(v))
        if (t.leaves.count(u) && (!best || u < *best)) best = u;
    if (!best) throw std::logic_error("high-magnitude vertex without adjacent leaf");
    return *best;
}

bool pair_has_common_neighbor(const Graph& g, const BushyForest& f, const BushyTree& t,
                              VertexId v, VertexId w) {
    std::set<VertexId> members = f.all_vertices();
    const auto& nv = g.neighbors(v);
    for (VertexId x : g.neighbors(w)) {
        if (!std::binary_search(nv.begin(), nv.end(), x)) continue;
        if (t.leaves.count(x) || !members.count(x)) return true;
    }
    return false;
}

BushyTree star_tree(VertexId root, const std::vector<VertexId>& leaves) {
    BushyTree t;
    t.root = root;
    t.internal.insert(root);
    for (VertexId l : leaves) {
        t.leaves.insert(l);
        t.parent[l] = root;
    }
    return t;
}

void replace_tree(BushyForest& f, std::size_t idx, std::vector<BushyTree> replacements) {
    f.trees.erase(f.trees.begin() + static_cast<std::ptrdiff_t>(idx));
    for (auto& t : replacements) f.trees.push_back(std::move(t));
}

}  // namespace

BushyForest to_low_magnitude(const Graph& g, BushyForest f) {
    maximalize(g, f);
    normalize_roots(f);

    const std::size_t limit = g.vertex_count() * g.vertex_count() + 16;
    for (std::size_t step = 0; step <= limit; ++step) {
        if (step == limit) throw std::logic_error("low-magnitude rewrite loop did not settle");
        const auto metric_before =
            std::make_pair(f.trees.size(), f.internal_count());
        std::set<VertexId> members = f.all_vertices();
        std::set<VertexId> hm = high_magnitude_vertices(g, f);

        bool fired = false;

        // Case 1: high-magnitude vertex on a tree with several internals.
        for (VertexId v : hm) {
            for (std::size_t ti : adjacent_trees(g, f, v)) {
                const BushyTree& t = f.trees[ti];
                if (t.internal.size() < 2) continue;
                VertexId l = smallest_adjacent_leaf(g, t, v);
                VertexId l_parent = t.parent.at(l);
                std::optional<VertexId> r;
                for (VertexId cand : t.internal)
                    if (cand != l_parent) {
                        r = cand;
                        break;
                    }
                if (!r) throw std::logic_error("no internal vertex away from the leaf");
                std::vector<VertexId> r_tree_nbrs;
                for (const auto& [child, par] : t.parent) {
                    if (par == *r) r_tree_nbrs.push_back(child);
                    if (child == *r) r_tree_nbrs.push_back(par);
                }
                std::vector<VertexId> v_leaves = outside_neighbors(g, members, v);
                v_leaves.push_back(l);
                replace_tree(f, ti, {star_tree(*r, r_tree_nbrs), star_tree(v, v_leaves)});
                fired = true;
                break;
            }
            if (fired) break;
        }

        // Case 2: high-magnitude vertex on a one-internal tree with five or
        // more leaves: split off the touched leaf.
        if (!fired) {
            for (VertexId v : hm) {
                for (std::size_t ti : adjacent_trees(g, f, v)) {
                    BushyTree& t = f.trees[ti];
                    if (t.internal.size() != 1 || t.leaves.size() < 5) continue;
                    VertexId l = smallest_adjacent_leaf(g, t, v);
                    t.leaves.erase(l);
                    t.parent.erase(l);
                    std::vector<VertexId> v_leaves = outside_neighbors(g, members, v);
                    v_leaves.push_back(l);
                    f.trees.push_back(star_tree(v, v_leaves));
                    fired = true;
                    break;
                }
                if (fired) break;
            }
        }

        // Cases 3 and 4: a same-tree pair with no common neighbor that is a
        // leaf of that tree or an outside vertex.
        if (!fired) {
            for (auto vit = hm.begin(); vit != hm.end() && !fired; ++vit) {
                for (auto wit = std::next(vit); wit != hm.end() && !fired; ++wit) {
                    VertexId v = *vit, w = *wit;
                    std::vector<std::size_t> tv = adjacent_trees(g, f, v);
                    std::vector<std::size_t> tw = adjacent_trees(g, f, w);
                    std::vector<std::size_t> shared;
                    std::set_intersection(tv.begin(), tv.end(), tw.begin(), tw.end(),
                                          std::back_inserter(shared));
                    for (std::size_t ti : shared) {
                        const BushyTree& t = f.trees[ti];
                        if (pair_has_common_neighbor(g, f, t, v, w)) continue;
                        if (t.internal.size() != 1)
                            throw std::logic_error("pair rewrite on a multi-internal tree");
                        VertexId lv = smallest_adjacent_leaf(g, t, v);
                        VertexId lw = smallest_adjacent_leaf(g, t, w);
                        if (lv == lw) throw std::logic_error("pair shares a leaf but no neighbor");
                        std::vector<VertexId> ov = outside_neighbors(g, members, v);
                        std::vector<VertexId> ow = outside_neighbors(g, members, w);
                        if (!g.has_edge(v, w)) {
                            ov.push_back(lv);
                            ow.push_back(lw);
                            replace_tree(f, ti, {star_tree(v, ov), star_tree(w, ow)});
                        } else {
                            BushyTree nt;
                            nt.root = std::min(v, w);
                            nt.internal = {v, w};
                            nt.parent[std::max(v, w)] = nt.root;
                            auto attach = [&nt](VertexId leaf, VertexId par) {
                                nt.leaves.insert(leaf);
                                nt.parent[leaf] = par;
                            };
                            attach(lv, v);
                            attach(lw, w);
                            for (VertexId o : ov)
                                if (o != w) attach(o, v);
                            for (VertexId o : ow)
                                if (o != v) attach(o, w);
                            replace_tree(f, ti, {std::move(nt)});
                        }
                        fired = true;
                        break;
                    }
                }
            }
        }

        if (!fired) break;
        maximalize(g, f);
        normalize_roots(f);
        const auto metric_after = std::make_pair(f.trees.size(), f.internal_count());
        if (metric_after <= metric_before)
            throw std::logic_error("rewrite failed to grow the forest");
    }
    return f;
}

std::vector<std::string> check_low_magnitude(const Graph& g, const BushyForest& f) {
    std::vector<std::string> violations;
    std::set<VertexId> hm = high_magnitude_vertices(g, f);
    for (VertexId v : hm) {
        for (std::size_t ti : adjacent_trees(g, f, v)) {
            const BushyTree& t = f.trees[ti];
            if (t.internal.size() != 1 || t.leaves.size() != 4)
                violations.push_back("high-magnitude vertex " + describe(v) +
                                     " adjacent to a tree that is not one-internal/four-leaf");
        }
    }
    for (std::size_t ti = 0; ti < f.trees.size(); ++ti) {
        std::vector<VertexId> on_tree;
        for (VertexId v : hm) {
            auto ts = adjacent_trees(g, f, v);
            if (std::binary_search(ts.begin(), ts.end(), ti)) on_tree.push_back(v);
        }
        for (std::size_t i = 0; i < on_tree.size(); ++i)
            for (std::size_t j = i + 1; j < on_tree.size(); ++j)
                if (!pair_has_common_neighbor(g, f, f.trees[ti], on_tree[i], on_tree[j]))
                    violations.push_back("high-magnitude pair without common neighbor: " +
                                         describe(on_tree[i]) + "," + describe(on_tree[j]));
    }
    return violations;
}

std::set<VertexId> Partition::n3_all() const {
    std::set<VertexId> out;
    for (const auto& s : n3) out.insert(s.begin(), s.end());
    return out;
}

std::set<VertexId> Partition::n_all() const {
    std::set<VertexId> out = n3_all();
    out.insert(n1.begin(), n1.end());
    out.insert(n2.begin(), n2.end());
    out.insert(n_other.begin(), n_other.end());
    return out;
}

std::set<VertexId> Partition::u_all() const {
    std::set<VertexId> out = u_prime;
    for (const auto& s : u_by_n1) out.insert(s.begin(), s.end());
    return out;
}

Partition partition(const Graph& g, const BushyForest& f) {
    Partition p;
    std::set<VertexId> members = f.all_vertices();
    for (const auto& t : f.trees) {
        p.roots.insert(t.root);
        for (VertexId v : t.internal)
            if (v != t.root) p.internal.insert(v);
        p.leaves.insert(t.leaves.begin(), t.leaves.end());
    }

    std::set<VertexId> hm = high_magnitude_vertices(g, f);
    std::vector<std::size_t> hm_per_tree(f.trees.size(), 0);
    for (VertexId v : hm)
        for (std::size_t ti : adjacent_trees(g, f, v)) ++hm_per_tree[ti];

    std::set<VertexId> n_set, u_set;
    for (VertexId v : g.vertices()) {
        if (members.count(v)) continue;
        std::size_t outside = outside_neighbors(g, members, v).size();
        if (outside > 3)
            throw std::logic_error("outside vertex with four outside neighbors in partition");
        std::size_t forest_nbrs = g.degree(v) - outside;
        if (forest_nbrs == 0) {
            u_set.insert(v);
            continue;
        }
        n_set.insert(v);
        for (VertexId u : g.neighbors(v))
            if (f.is_internal(u))
                throw std::logic_error("forest neighbor adjacent to an internal vertex");
        if (hm.count(v)) {
            std::size_t i = 0;
            for (std::size_t ti : adjacent_trees(g, f, v)) i = std::max(i, hm_per_tree[ti]);
            if (i < 1 || i > 8)
                throw std::logic_error("high-magnitude tree load out of range");
            p.n3[i].insert(v);
        } else if (forest_nbrs >= 2) {
            p.n2.insert(v);
        } else if (g.degree(v) == 3) {
            p.n1.insert(v);
        } else {
            p.n_other.insert(v);
        }
    }

    std::set<VertexId> n3_set = p.n3_all();
    for (VertexId v : u_set) {
        if (g.degree(v) != 3)
            throw std::logic_error("vertex outside and not adjacent to the forest has degree != 3");
        bool all_hm = true;
        for (VertexId u : g.neighbors(v)) all_hm = all_hm && n3_set.count(u) != 0;
        if (all_hm) p.u_prime.insert(v);
    }

    // Remaining outside vertices grouped by the number of degree-three
    // forest neighbors (N1) in their component of G[(U - U') union N1].
    std::set<VertexId> pool;
    for (VertexId v : u_set)
        if (!p.u_prime.count(v)) pool.insert(v);
    pool.insert(p.n1.begin(), p.n1.end());
    auto comps = components_where(g, [&](VertexId v) { return pool.count(v) != 0; });
    for (const auto& comp : comps) {
        std::size_t j = 0;
        std::vector<VertexId> comp_u;
        for (VertexId v : comp) {
            if (p.n1.count(v))
                ++j;
            else
                comp_u.push_back(v);
        }
        if (comp_u.empty()) continue;
        if (j > 7) throw std::logic_error("component with more than seven N1 vertices");
        for (VertexId v : comp_u) p.u_by_n1[j].insert(v);
    }

    auto bad = check_partition_constraints(p);
    if (!bad.empty()) throw std::logic_error("partition constraint failed: " + bad.front());
    return p;
}

std::vector<std::string> check_partition_constraints(const Partition& p) {
    std::vector<std::string> out;
    const long long R = static_cast<long long>(p.roots.size());
    const long long I = static_cast<long long>(p.internal.size());
    const long long L = static_cast<long long>(p.leaves.size());
    const long long N1 = static_cast<long long>(p.n1.size());
    const long long N2 = static_cast<long long>(p.n2.size());
    const long long N3 = static_cast<long long>(p.n3_all().size());
    const long long UP = static_cast<long long>(p.u_prime.size());

    if (4 * R + 2 * I > L) out.push_back("4|R|+2|I| <= |L|");
    if (N1 + 2 * N2 + N3 > 2 * L) out.push_back("|N1|+2|N2|+|N3| <= 2|L|");
    // |U'| >= (1/5)|N3,5| + (2/6)|N3,6| + (5/7)|N3,7| + |N3,8|, scaled by 210.
    {
        const long long lhs = 210 * UP;
        const long long rhs = 42 * static_cast<long long>(p.n3[5].size()) +
                              70 * static_cast<long long>(p.n3[6].size()) +
                              150 * static_cast<long long>(p.n3[7].size()) +
                              210 * static_cast<long long>(p.n3[8].size());
        if (lhs < rhs) out.push_back("|U'| lower bound from N3 tree loads");
    }
    // sum_j (10-j)/(8-j) |Uj| <= 2|N2| + 3|N3| - 3|U'|, scaled by 840.
    {
        long long lhs = 0;
        for (int j = 0; j <= 7; ++j)
            lhs += static_cast<long long>(p.u_by_n1[static_cast<std::size_t>(j)].size()) *
                   (10 - j) * (840 / (8 - j));
        const long long rhs = 840 * (2 * N2 + 3 * N3 - 3 * UP);
        if (lhs > rhs) out.push_back("edge budget between N2/N3 and U components");
    }
    return out;
}

}  // namespace threecolor
