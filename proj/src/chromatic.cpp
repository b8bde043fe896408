#include "threecolor/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

namespace threecolor {

std::size_t ChromaticTree::grandchild_count() const {
    std::size_t n = 0;
    for (const auto& gc : grandchildren) n += gc.size();
    return n;
}

std::vector<VertexId> ChromaticTree::members() const {
    std::vector<VertexId> out{root, children[0], children[1], children[2]};
    for (const auto& gc : grandchildren) out.insert(out.end(), gc.begin(), gc.end());
    return out;
}

namespace {

// A claw can be rooted at r exactly when r and its whole subgraph
// neighborhood are free; vertices here have at most three subgraph
// neighbors, so the children are forced.
std::optional<ChromaticTree> claw_at(const Graph& gs, const std::set<VertexId>& free,
                                     VertexId r) {
    if (!free.count(r)) return std::nullopt;
    const auto& nbrs = gs.neighbors(r);
    if (nbrs.size() < 3) return std::nullopt;
    if (nbrs.size() > 3) throw std::logic_error("subgraph vertex with four neighbors");
    for (VertexId u : nbrs)
        if (!free.count(u)) return std::nullopt;
    ChromaticTree t;
    t.root = r;
    std::copy(nbrs.begin(), nbrs.end(), t.children.begin());
    return t;
}

std::set<VertexId> covered_by(const std::vector<ChromaticTree>& trees) {
    std::set<VertexId> out;
    for (const auto& t : trees) {
        out.insert(t.root);
        out.insert(t.children.begin(), t.children.end());
    }
    return out;
}

void add_claws_greedily(const Graph& gs, std::vector<ChromaticTree>& trees,
                        const std::set<VertexId>& excluded) {
    std::set<VertexId> free;
    std::set<VertexId> covered = covered_by(trees);
    for (VertexId v : gs.vertices())
        if (!covered.count(v) && !excluded.count(v)) free.insert(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : gs.vertices()) {
            if (auto t = claw_at(gs, free, v)) {
                for (VertexId m : t->members()) free.erase(m);
                trees.push_back(*t);
                changed = true;
            }
        }
    }
}

// One-for-two improvement: removing tree `idx` frees its four vertices; try
// to root two disjoint claws at the freed vertices or their neighbors.
bool improve_once(const Graph& gs, std::vector<ChromaticTree>& trees, std::size_t idx,
                  const std::set<VertexId>& excluded) {
    std::set<VertexId> free;
    std::set<VertexId> covered;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i == idx) continue;
        for (VertexId m : trees[i].members()) covered.insert(m);
    }
    for (VertexId v : gs.vertices())
        if (!covered.count(v) && !excluded.count(v)) free.insert(v);

    std::set<VertexId> candidates;
    for (VertexId m : trees[idx].members()) {
        candidates.insert(m);
        for (VertexId u : gs.neighbors(m)) candidates.insert(u);
    }
    std::vector<ChromaticTree> claws;
    for (VertexId r : candidates)
        if (auto t = claw_at(gs, free, r)) claws.push_back(*t);
    for (std::size_t a = 0; a < claws.size(); ++a) {
        auto ma = claws[a].members();
        std::sort(ma.begin(), ma.end());
        for (std::size_t b = a + 1; b < claws.size(); ++b) {
            auto mb = claws[b].members();
            bool disjoint = std::none_of(mb.begin(), mb.end(), [&](VertexId v) {
                return std::binary_search(ma.begin(), ma.end(), v);
            });
            if (!disjoint) continue;
            trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(idx));
            trees.push_back(claws[a]);
            trees.push_back(claws[b]);
            return true;
        }
    }
    return false;
}

void improve_to_fixpoint(const Graph& gs, std::vector<ChromaticTree>& trees,
                         const std::set<VertexId>& excluded) {
    bool changed = true;
    while (changed) {
        changed = false;
        add_claws_greedily(gs, trees, excluded);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            if (improve_once(gs, trees, i, excluded)) {
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

std::vector<ChromaticTree> build_k13_forest(const Graph& gs) {
    std::vector<ChromaticTree> trees;
    improve_to_fixpoint(gs, trees, {});
    return trees;
}

namespace {

struct CandidateInfo {
    std::vector<std::size_t> trees;  // adjacent tree indices, ascending
};

std::map<VertexId, CandidateInfo> candidate_map(const Graph& gs,
                                                const std::vector<ChromaticTree>& trees,
                                                const std::set<VertexId>& admissible,
                                                const std::set<VertexId>& excluded) {
    std::map<VertexId, std::set<std::size_t>> adj;
    std::set<VertexId> covered = covered_by(trees);
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (VertexId c : trees[i].children)
            for (VertexId u : gs.neighbors(c))
                if (admissible.count(u) && !covered.count(u) && !excluded.count(u))
                    adj[u].insert(i);
    std::map<VertexId, CandidateInfo> out;
    for (VertexId v : admissible) {
        if (covered.count(v) || excluded.count(v)) continue;
        auto it = adj.find(v);
        if (it == adj.end() || it->second.empty())
            throw std::logic_error("admissible vertex not adjacent to any tree");
        out[v] = CandidateInfo{{it->second.begin(), it->second.end()}};
    }
    return out;
}

// Candidate weight of a tree in sixths: a candidate adjacent to i trees
// contributes 6/i. A load strictly above five means > 30.
std::vector<long> tree_weights_sixths(std::size_t tree_count,
                                      const std::map<VertexId, CandidateInfo>& cands) {
    std::vector<long> w(tree_count, 0);
    for (const auto& [v, info] : cands)
        for (std::size_t ti : info.trees)
            w[ti] += 6 / static_cast<long>(info.trees.size());
    return w;
}

// Try to replace the overloaded tree by two disjoint claws drawn from its
// vertices and candidates. Vertices have at most three subgraph neighbors,
// so each potential root determines its claw.
bool replace_overloaded(const Graph& gs, std::vector<ChromaticTree>& trees, std::size_t idx,
                        const std::vector<VertexId>& tree_candidates,
                        const std::set<VertexId>& excluded) {
    std::set<VertexId> covered;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i == idx) continue;
        for (VertexId m : trees[i].members()) covered.insert(m);
    }
    std::set<VertexId> free;
    for (VertexId v : gs.vertices())
        if (!covered.count(v) && !excluded.count(v)) free.insert(v);

    std::set<VertexId> roots(tree_candidates.begin(), tree_candidates.end());
    for (VertexId m : trees[idx].members()) roots.insert(m);

    std::vector<ChromaticTree> claws;
    for (VertexId r : roots)
        if (auto t = claw_at(gs, free, r)) claws.push_back(*t);
    for (std::size_t a = 0; a < claws.size(); ++a) {
        auto ma = claws[a].members();
        std::sort(ma.begin(), ma.end());
        for (std::size_t b = a + 1; b < claws.size(); ++b) {
            auto mb = claws[b].members();
            bool disjoint = std::none_of(mb.begin(), mb.end(), [&](VertexId v) {
                return std::binary_search(ma.begin(), ma.end(), v);
            });
            if (!disjoint) continue;
            trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(idx));
            trees.push_back(claws[a]);
            trees.push_back(claws[b]);
            return true;
        }
    }
    return false;
}

// Verify the irreducible shape: each child carries exactly two of the six
// candidates, the candidates close into a single six-cycle among
// themselves, and nothing in the structure has another subgraph neighbor.
void verify_closed_shape(const Graph& gs, const ChromaticTree& t,
                         const std::vector<VertexId>& cands) {
    if (cands.size() != 6) throw std::logic_error("irreducible tree without six candidates");
    std::set<VertexId> cand_set(cands.begin(), cands.end());
    std::set<VertexId> inside(cands.begin(), cands.end());
    inside.insert(t.root);
    inside.insert(t.children.begin(), t.children.end());
    if (inside.size() != 10) throw std::logic_error("configuration vertices overlap");

    for (VertexId c : t.children) {
        std::size_t with_cand = 0;
        for (VertexId u : gs.neighbors(c)) {
            if (!inside.count(u)) throw std::logic_error("child has an outside subgraph neighbor");
            if (cand_set.count(u)) ++with_cand;
        }
        if (with_cand != 2) throw std::logic_error("child without exactly two candidates");
    }
    for (VertexId v : cands) {
        std::size_t cand_nbrs = 0;
        for (VertexId u : gs.neighbors(v)) {
            if (!inside.count(u))
                throw std::logic_error("candidate has an outside subgraph neighbor");
            if (cand_set.count(u)) ++cand_nbrs;
        }
        if (cand_nbrs != 2) throw std::logic_error("candidates do not form a cycle");
    }
    // Two neighbors each and connected in one piece: walk the cycle.
    std::vector<VertexId> order{cands.front()};
    std::set<VertexId> seen{cands.front()};
    while (true) {
        bool advanced = false;
        for (VertexId u : gs.neighbors(order.back())) {
            if (cand_set.count(u) && !seen.count(u)) {
                order.push_back(u);
                seen.insert(u);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    if (order.size() != 6) throw std::logic_error("candidates form two cycles, not one");
}

// Backtracking extension of fixed boundary colors over the configuration.
std::optional<Coloring> color_config(const Graph& g, const std::vector<VertexId>& members,
                                     const Coloring& boundary_colors) {
    Coloring out = boundary_colors;
    auto assign = [&](auto&& self, std::size_t i) -> bool {
        if (i == members.size()) return true;
        VertexId v = members[i];
        for (Color c = 0; c < kNumColors; ++c) {
            bool ok = true;
            for (VertexId u : g.neighbors(v)) {
                auto it = out.find(u);
                if (it != out.end() && it->second == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out[v] = c;
                if (self(self, i + 1)) return true;
                out.erase(v);
            }
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return out;
}

TrivialConfig extract_config(const Graph& g, const Graph& gs, const ChromaticTree& t,
                             const std::vector<VertexId>& cands) {
    verify_closed_shape(gs, t, cands);
    TrivialConfig cfg;
    cfg.members = t.members();
    cfg.members.insert(cfg.members.end(), cands.begin(), cands.end());
    std::sort(cfg.members.begin(), cfg.members.end());

    std::set<VertexId> inside(cfg.members.begin(), cfg.members.end());
    std::set<VertexId> boundary;
    for (VertexId v : cfg.members)
        for (VertexId u : g.neighbors(v))
            if (!inside.count(u)) boundary.insert(u);
    cfg.boundary.assign(boundary.begin(), boundary.end());

    // Precompute an extension for every boundary coloring that admits one.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < cfg.boundary.size(); ++i) combos *= kNumColors;
    for (std::size_t code = 0; code < combos; ++code) {
        Coloring bc;
        std::size_t rest = code;
        for (VertexId b : cfg.boundary) {
            bc[b] = static_cast<Color>(rest % kNumColors);
            rest /= kNumColors;
        }
        if (auto ext = color_config(g, cfg.members, bc)) {
            Coloring only_members;
            for (VertexId m : cfg.members) only_members[m] = ext->at(m);
            std::vector<Color> key;
            for (VertexId b : cfg.boundary) key.push_back(bc[b]);
            cfg.rule[key] = std::move(only_members);
        }
    }
    return cfg;
}

}  // namespace

ChromaticForest assign_grandchildren(const Graph& g, const Graph& gs,
                                     std::vector<ChromaticTree> forest,
                                     const std::set<VertexId>& admissible) {
    std::vector<TrivialConfig> configs;
    std::set<VertexId> extracted;

    const std::size_t limit = gs.vertex_count() + forest.size() + 16;
    for (std::size_t step = 0;; ++step) {
        if (step > limit) throw std::logic_error("grandchild assignment did not settle");
        auto cands = candidate_map(gs, forest, admissible, extracted);
        auto weights = tree_weights_sixths(forest.size(), cands);

        std::optional<std::size_t> overloaded;
        for (std::size_t i = 0; i < forest.size(); ++i)
            if (weights[i] > 30) {
                overloaded = i;
                break;
            }
        if (overloaded) {
            std::vector<VertexId> tree_cands;
            for (const auto& [v, info] : cands)
                if (std::binary_search(info.trees.begin(), info.trees.end(), *overloaded))
                    tree_cands.push_back(v);
            if (replace_overloaded(gs, forest, *overloaded, tree_cands, extracted)) {
                improve_to_fixpoint(gs, forest, extracted);
            } else {
                TrivialConfig cfg = extract_config(g, gs, forest[*overloaded], tree_cands);
                extracted.insert(cfg.members.begin(), cfg.members.end());
                configs.push_back(std::move(cfg));
                forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(*overloaded));
                improve_to_fixpoint(gs, forest, extracted);
            }
            continue;
        }

        // All loads at most five: a full attachment exists (each candidate
        // adjacent to i trees puts 1/i on each, so no family of trees can be
        // overdemanded). Greedy by id, balancing on current grandchild
        // counts; when every adjacent tree is full, free a slot by an
        // augmenting chain of moves. A child is never the bottleneck: it has
        // at most two candidate neighbors, one of which is the vertex being
        // attached.
        for (auto& t : forest)
            for (auto& gc : t.grandchildren) gc.clear();
        std::map<VertexId, std::size_t> attached_to;
        auto attach = [&](VertexId v, std::size_t ti) {
            for (std::size_t ci = 0; ci < 3; ++ci) {
                VertexId child = forest[ti].children[ci];
                const auto& nbrs = gs.neighbors(v);
                if (std::binary_search(nbrs.begin(), nbrs.end(), child) &&
                    forest[ti].grandchildren[ci].size() < 2) {
                    forest[ti].grandchildren[ci].push_back(v);
                    attached_to[v] = ti;
                    return;
                }
            }
            throw std::logic_error("no child slot for grandchild attachment");
        };
        auto detach = [&](VertexId v) {
            std::size_t ti = attached_to.at(v);
            for (auto& gc : forest[ti].grandchildren) std::erase(gc, v);
            attached_to.erase(v);
        };

        for (const auto& [v, info] : cands) {
            std::vector<std::size_t> order = info.trees;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return forest[a].grandchild_count() < forest[b].grandchild_count();
            });
            std::optional<std::size_t> target;
            for (std::size_t ti : order)
                if (forest[ti].grandchild_count() < 5) {
                    target = ti;
                    break;
                }
            if (!target) {
                // BFS over trees along "some grandchild could move there"
                // edges until a tree with room appears, then shift the chain.
                std::map<std::size_t, std::pair<std::size_t, VertexId>> came_from;
                std::vector<std::size_t> queue = info.trees;
                std::set<std::size_t> seen(queue.begin(), queue.end());
                std::optional<std::size_t> room;
                for (std::size_t qi = 0; qi < queue.size() && !room; ++qi) {
                    std::size_t ti = queue[qi];
                    for (const auto& gc : forest[ti].grandchildren) {
                        for (VertexId u : gc) {
                            for (std::size_t alt : cands.at(u).trees) {
                                if (!seen.insert(alt).second) continue;
                                came_from[alt] = {ti, u};
                                if (forest[alt].grandchild_count() < 5) {
                                    room = alt;
                                    break;
                                }
                                queue.push_back(alt);
                            }
                            if (room) break;
                        }
                        if (room) break;
                    }
                }
                if (!room)
                    throw std::logic_error("grandchild attachment failed despite feasible loads");
                std::size_t cur = *room;
                while (came_from.count(cur)) {
                    auto [prev, moved] = came_from[cur];
                    detach(moved);
                    attach(moved, cur);
                    cur = prev;
                }
                target = cur;  // one of v's trees, now with room
            }
            attach(v, *target);
        }

        ChromaticForest out;
        out.trees = std::move(forest);
        out.trivially_colored = std::move(configs);
        for (const auto& t : out.trees)
            for (VertexId m : t.members()) out.covered.insert(m);
        for (const auto& cfg : out.trivially_colored)
            out.covered.insert(cfg.members.begin(), cfg.members.end());
        return out;
    }
}

EnumerationSchedule schedule(const ChromaticTree& tree) {
    EnumerationSchedule s;
    const std::size_t gc = tree.grandchild_count();
    if (gc <= 4) {
        s.kind = EnumerationSchedule::Kind::RootBranch;
        return s;
    }
    if (gc != 5) throw std::invalid_argument("tree with more than five grandchildren");
    s.kind = EnumerationSchedule::Kind::TwoChildBranch;
    std::size_t k = 0;
    for (std::size_t ci = 0; ci < 3; ++ci)
        if (tree.grandchildren[ci].size() == 2) s.branch_children[k++] = ci;
    if (k != 2) throw std::logic_error("five grandchildren without a 2+2+1 split");
    return s;
}

}  // namespace threecolor
