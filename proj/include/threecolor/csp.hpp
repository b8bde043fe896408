#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "threecolor/reduce.hpp"

namespace threecolor {

using VarId = VertexId;

struct VarColor {
    VarId var;
    Color color;
    auto operator<=>(const VarColor&) const = default;
};

/// Unordered constraint: the two variable-color pairs cannot both be
/// selected. Stored normalized with the smaller pair first.
using Conflict = std::pair<VarColor, VarColor>;

struct CspSolution {
    std::map<VarId, Color> assignment;
};

/// (3,2)-CSP: variables with at most three colors and binary conflicts
/// between variable-color pairs. Conflicts are kept normalized, deduplicated
/// and live: both sides always reference present variables and in-domain
/// colors. An empty domain flips the instance to unsat.
class CspInstance {
public:
    /// Domain is a bitmask over colors 0..2; must be non-zero.
    void add_variable(VarId v, std::uint8_t domain_mask);
    /// Adds a conflict between two pairs. Conflicts within one variable are
    /// folded away: same color shrinks the domain, different colors can
    /// never both be selected and are dropped.
    void add_conflict(VarColor a, VarColor b);
    void mark_unsat() { unsat_ = true; }

    bool unsat() const { return unsat_; }
    std::size_t variable_count() const { return domain_.size(); }
    const std::map<VarId, std::uint8_t>& domains() const { return domain_; }
    const std::set<Conflict>& conflicts() const { return conflicts_; }

    /// Eliminate every variable whose domain has two or fewer colors.
    /// Singletons are committed and propagated. Two-color variables are
    /// resolved away: for a variable v with domain {a,b}, every pair of
    /// external variable-color pairs that together forbid both a and b
    /// becomes directly conflicting, which preserves satisfiability; a
    /// substitution record lets solutions of the reduced instance be
    /// extended back over v.
    void eliminate_small_domains();

    /// Restrict a variable's domain (used by branching).
    void restrict_domain(VarId v, std::uint8_t mask);

    friend std::optional<CspSolution> solve(CspInstance csp);

private:
    struct Committed {
        Color color;
    };
    struct Resolved {
        Color color_a;
        Color color_b;
        std::vector<VarColor> forbids_a;  // pairs blocking color_a
        std::vector<VarColor> forbids_b;  // pairs blocking color_b
    };
    struct SubRecord {
        VarId var;
        std::variant<Committed, Resolved> how;
    };

    void drop_color(VarId v, Color c);
    void commit(VarId v, Color c);
    void resolve_two_domain(VarId v);
    void erase_variable(VarId v);
    bool pair_live(const VarColor& p) const;

    std::map<VarId, std::uint8_t> domain_;
    std::set<Conflict> conflicts_;
    std::vector<SubRecord> subs_;
    bool unsat_ = false;
};

/// One variable per vertex of inst.graph not in inst.fixed, with the fixed
/// neighbors' colors removed from its domain; one conflict per remaining
/// edge and shared color. Fixed colors must be conflict-free along edges.
CspInstance from_partial_coloring(const Graph& g, const Coloring& fixed);
CspInstance from_partial_coloring(const Instance& inst);

/// Complete search: small-domain elimination, then branch on the variable
/// with the most incident conflicts (ties by smallest id). Returns a
/// satisfying assignment over all original variables, or nullopt.
std::optional<CspSolution> solve(CspInstance csp);

}  // namespace threecolor
