#include "threecolor/csp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace threecolor {

namespace {

constexpr std::uint8_t kFullMask = 0b111;

Conflict normalized(VarColor a, VarColor b) {
    return a < b ? Conflict{a, b} : Conflict{b, a};
}

}  // namespace

void CspInstance::add_variable(VarId v, std::uint8_t domain_mask) {
    domain_mask &= kFullMask;
    if (domain_mask == 0) {
        unsat_ = true;
        return;
    }
    if (!domain_.emplace(v, domain_mask).second)
        throw std::invalid_argument("duplicate variable");
}

bool CspInstance::pair_live(const VarColor& p) const {
    auto it = domain_.find(p.var);
    return it != domain_.end() && (it->second >> p.color) & 1;
}

void CspInstance::add_conflict(VarColor a, VarColor b) {
    if (unsat_) return;
    if (a.var == b.var) {
        if (a.color == b.color)
            drop_color(a.var, a.color);  // the pair conflicts with itself
        return;                          // distinct colors of one variable never co-occur
    }
    if (!pair_live(a) || !pair_live(b)) return;  // can never fire
    conflicts_.insert(normalized(a, b));
}

void CspInstance::drop_color(VarId v, Color c) {
    auto it = domain_.find(v);
    if (it == domain_.end() || !((it->second >> c) & 1)) return;
    it->second &= static_cast<std::uint8_t>(~(1u << c));
    if (it->second == 0) {
        unsat_ = true;
        return;
    }
    // Conflicts mentioning the dead pair can never fire.
    for (auto cit = conflicts_.begin(); cit != conflicts_.end();) {
        const VarColor dead{v, c};
        if (cit->first == dead || cit->second == dead)
            cit = conflicts_.erase(cit);
        else
            ++cit;
    }
}

void CspInstance::restrict_domain(VarId v, std::uint8_t mask) {
    auto it = domain_.find(v);
    if (it == domain_.end()) throw std::invalid_argument("unknown variable");
    for (Color c = 0; c < kNumColors && !unsat_; ++c)
        if (((it->second >> c) & 1) && !((mask >> c) & 1)) drop_color(v, c);
}

void CspInstance::erase_variable(VarId v) {
    for (auto it = conflicts_.begin(); it != conflicts_.end();) {
        if (it->first.var == v || it->second.var == v)
            it = conflicts_.erase(it);
        else
            ++it;
    }
    domain_.erase(v);
}

void CspInstance::commit(VarId v, Color c) {
    subs_.push_back({v, Committed{c}});
    // Selecting (v,c) rules out every pair in conflict with it.
    std::vector<VarColor> blocked;
    for (const auto& [p, q] : conflicts_) {
        if (p.var == v && p.color == c) blocked.push_back(q);
        if (q.var == v && q.color == c) blocked.push_back(p);
    }
    erase_variable(v);
    for (const auto& vc : blocked) {
        drop_color(vc.var, vc.color);
        if (unsat_) return;
    }
}

void CspInstance::resolve_two_domain(VarId v) {
    const std::uint8_t mask = domain_.at(v);
    Color a = 0;
    while (!((mask >> a) & 1)) ++a;
    Color b = static_cast<Color>(a + 1);
    while (!((mask >> b) & 1)) ++b;

    std::vector<VarColor> forbids_a, forbids_b;
    for (const auto& [p, q] : conflicts_) {
        if (p.var == v) (p.color == a ? forbids_a : forbids_b).push_back(q);
        if (q.var == v) (q.color == a ? forbids_a : forbids_b).push_back(p);
    }
    subs_.push_back({v, Resolved{a, b, forbids_a, forbids_b}});
    erase_variable(v);

    // v is unusable only when both colors are blocked, so any pair of
    // blockers spanning both colors must not be selected together.
    for (const auto& pa : forbids_a) {
        for (const auto& pb : forbids_b) {
            if (pa == pb) {
                drop_color(pa.var, pa.color);
                if (unsat_) return;
            } else {
                add_conflict(pa, pb);
            }
        }
    }
}

void CspInstance::eliminate_small_domains() {
    while (!unsat_) {
        std::optional<VarId> pick;
        for (const auto& [v, mask] : domain_) {
            if (std::popcount(mask) <= 2) {
                pick = v;
                break;
            }
        }
        if (!pick) return;
        const std::uint8_t mask = domain_.at(*pick);
        if (std::popcount(mask) == 1)
            commit(*pick, static_cast<Color>(std::countr_zero(mask)));
        else
            resolve_two_domain(*pick);
    }
}

CspInstance from_partial_coloring(const Graph& g, const Coloring& fixed) {
    for (const auto& [v, c] : fixed) {
        if (!g.has_vertex(v)) throw std::invalid_argument("fixed vertex not in graph");
        for (VertexId u : g.neighbors(v)) {
            auto it = fixed.find(u);
            if (it != fixed.end() && it->second == c)
                throw std::invalid_argument("fixed colors conflict along an edge");
        }
    }
    CspInstance csp;
    for (VertexId v : g.vertices()) {
        if (fixed.count(v)) continue;
        std::uint8_t mask = 0b111;
        for (VertexId u : g.neighbors(v)) {
            auto it = fixed.find(u);
            if (it != fixed.end()) mask &= static_cast<std::uint8_t>(~(1u << it->second));
        }
        if (mask == 0) {
            csp.mark_unsat();
            return csp;
        }
        csp.add_variable(v, mask);
    }
    if (csp.unsat()) return csp;
    for (VertexId v : g.vertices()) {
        if (fixed.count(v)) continue;
        for (VertexId u : g.neighbors(v)) {
            if (u <= v || fixed.count(u)) continue;
            for (Color c = 0; c < kNumColors; ++c)
                csp.add_conflict({v, c}, {u, c});
        }
    }
    return csp;
}

CspInstance from_partial_coloring(const Instance& inst) {
    return from_partial_coloring(inst.graph, inst.fixed);
}

namespace {

// Depth-first search over 3-domain variables; elimination keeps every other
// domain size out of the live instance.
bool search(CspInstance& csp) {
    csp.eliminate_small_domains();
    if (csp.unsat()) return false;
    if (csp.variable_count() == 0) return true;

    std::map<VarId, std::size_t> incident;
    for (const auto& [p, q] : csp.conflicts()) {
        ++incident[p.var];
        ++incident[q.var];
    }
    VarId best = csp.domains().begin()->first;
    std::size_t best_count = incident[best];
    for (const auto& [v, _] : csp.domains()) {
        if (incident[v] > best_count) {
            best = v;
            best_count = incident[v];
        }
    }
    for (Color c = 0; c < kNumColors; ++c) {
        CspInstance child = csp;
        child.restrict_domain(best, static_cast<std::uint8_t>(1u << c));
        if (search(child)) {
            csp = std::move(child);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<CspSolution> solve(CspInstance csp) {
    if (!search(csp)) return std::nullopt;

    CspSolution sol;
    // Substitutions in reverse: anything a record references was either
    // still live at the end (and got committed) or eliminated later (and is
    // already back-substituted).
    auto assigned = [&](const VarColor& p) {
        auto it = sol.assignment.find(p.var);
        if (it == sol.assignment.end())
            throw std::logic_error("substitution references unassigned variable");
        return it->second == p.color;
    };
    for (auto it = csp.subs_.rbegin(); it != csp.subs_.rend(); ++it) {
        if (const auto* com = std::get_if<CspInstance::Committed>(&it->how)) {
            sol.assignment[it->var] = com->color;
        } else {
            const auto& res = std::get<CspInstance::Resolved>(it->how);
            bool a_blocked = std::any_of(res.forbids_a.begin(), res.forbids_a.end(), assigned);
            if (!a_blocked) {
                sol.assignment[it->var] = res.color_a;
            } else {
                bool b_blocked =
                    std::any_of(res.forbids_b.begin(), res.forbids_b.end(), assigned);
                if (b_blocked)
                    throw std::logic_error("resolved variable has no consistent color");
                sol.assignment[it->var] = res.color_b;
            }
        }
    }
    return sol;
}

}  // namespace threecolor
