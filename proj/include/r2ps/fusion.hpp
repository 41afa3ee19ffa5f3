#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mass.hpp"

namespace r2ps {

enum class Rule { left, right };

inline const char* to_string(Rule rule) {
    return rule == Rule::left ? "left" : "right";
}

inline Rule rule_from_string(std::string_view text) {
    if (text == "left")
        return Rule::left;
    if (text == "right")
        return Rule::right;
    throw ValidationError("unknown rule '" + std::string(text) + "' (expected left or right)");
}

/// Result of one combination, binary or chained.
struct FusionOutcome {
    MassFunction result;
    double conflict = 0.0;             // K for a binary sum, 1 - prod(1-K_i) for a chain
    Rule rule = Rule::left;
    std::vector<std::string> operands; // source identifiers when known
};

namespace detail {

struct Accumulated {
    std::map<Event, double, CanonicalEventLess> cells;
    double conflict = 0.0;
};

// Nested loops over canonically sorted focal lists: the per-cell accumulation
// order is fixed, so identical inputs give bit-identical results.
inline Accumulated accumulate_junctions(Rule rule, const MassFunction& m1,
                                        const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame());
    Accumulated acc;
    for (const auto& [b, mass_b] : m1.focal()) {
        for (const auto& [c, mass_c] : m2.focal()) {
            Event junction = rule == Rule::left ? left_junction(b, c) : right_junction(b, c);
            if (junction.is_empty())
                acc.conflict += mass_b * mass_c;
            else
                acc.cells[std::move(junction)] += mass_b * mass_c;
        }
    }
    return acc;
}

inline FusionOutcome normalize(Rule rule, Accumulated acc, const Frame& frame,
                               double tolerance) {
    if (acc.cells.empty())
        throw TotalConflictError("total conflict: every focal pair is disjoint");
    const double norm = 1.0 - acc.conflict;
    if (!(norm > 0.0))
        throw TotalConflictError("total conflict (K = 1)");
    std::vector<std::pair<Event, double>> focal;
    focal.reserve(acc.cells.size());
    for (const auto& [event, sum] : acc.cells)
        focal.emplace_back(event, sum / norm);
    return FusionOutcome{MassFunction(frame, std::move(focal), tolerance), acc.conflict, rule, {}};
}

inline double result_tolerance(const MassFunction& m1, const MassFunction& m2) {
    double t = std::max(m1.tolerance(), m2.tolerance());
    return std::max(4.0 * t, MassFunction::default_tolerance);
}

} // namespace detail

/// Conflict coefficient of the left junctional sum: the total product mass of
/// focal pairs whose left junction is empty.
inline double conflict_left(const MassFunction& m1, const MassFunction& m2) {
    return detail::accumulate_junctions(Rule::left, m1, m2).conflict;
}

/// Mirror with the right junction. Always equal to conflict_left up to
/// summation order, since junction emptiness is element-set symmetric.
inline double conflict_right(const MassFunction& m1, const MassFunction& m2) {
    return detail::accumulate_junctions(Rule::right, m1, m2).conflict;
}

/// Left junctional sum: product-and-normalize combination over left junctions.
/// The result keeps the left operand's order and frequency information.
inline FusionOutcome left_junctional_sum(const MassFunction& m1, const MassFunction& m2) {
    return detail::normalize(Rule::left, detail::accumulate_junctions(Rule::left, m1, m2),
                             m1.frame(), detail::result_tolerance(m1, m2));
}

/// Right junctional sum: the mirror over right junctions; the result keeps the
/// right operand's order and frequency information.
inline FusionOutcome right_junctional_sum(const MassFunction& m1, const MassFunction& m2) {
    return detail::normalize(Rule::right, detail::accumulate_junctions(Rule::right, m1, m2),
                             m1.frame(), detail::result_tolerance(m1, m2));
}

inline FusionOutcome combine(Rule rule, const MassFunction& m1, const MassFunction& m2) {
    return rule == Rule::left ? left_junctional_sum(m1, m2) : right_junctional_sum(m1, m2);
}

/// Classical Dempster combination at the set level; the reference the
/// junctional sums degenerate to under projection.
inline SetMassFunction dempster_combine(const SetMassFunction& m1, const SetMassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame());
    std::map<ElementSet, double, CanonicalSetLess> cells;
    double conflict = 0.0;
    for (const auto& [a, mass_a] : m1.focal()) {
        for (const auto& [b, mass_b] : m2.focal()) {
            ElementSet common = intersect(a, b);
            if (common.empty())
                conflict += mass_a * mass_b;
            else
                cells[std::move(common)] += mass_a * mass_b;
        }
    }
    if (cells.empty())
        throw TotalConflictError("total conflict: every focal pair is disjoint");
    const double norm = 1.0 - conflict;
    if (!(norm > 0.0))
        throw TotalConflictError("total conflict (K = 1)");
    std::vector<std::pair<ElementSet, double>> focal;
    focal.reserve(cells.size());
    for (const auto& [set, sum] : cells)
        focal.emplace_back(set, sum / norm);
    double tolerance = std::max(4.0 * std::max(m1.tolerance(), m2.tolerance()),
                                MassFunction::default_tolerance);
    return SetMassFunction(m1.frame(), std::move(focal), tolerance);
}

/// Left-to-right fold of the sources under a single rule. The reported
/// conflict is cumulative: 1 - prod over steps of (1 - K_step).
inline FusionOutcome chain(Rule rule, const std::vector<MassFunction>& sources,
                           std::vector<std::string> names = {}) {
    if (sources.empty())
        throw ValidationError("chain needs at least one source");
    FusionOutcome acc{sources.front(), 0.0, rule, {}};
    double survival = 1.0;
    for (std::size_t i = 1; i < sources.size(); ++i) {
        try {
            FusionOutcome step = combine(rule, acc.result, sources[i]);
            survival *= 1.0 - step.conflict;
            acc.result = std::move(step.result);
        } catch (const TotalConflictError& e) {
            throw TotalConflictError(std::string(e.what()) + " at chain step " + std::to_string(i),
                                     i);
        }
    }
    acc.conflict = 1.0 - survival;
    acc.operands = std::move(names);
    return acc;
}

} // namespace r2ps
