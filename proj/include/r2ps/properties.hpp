#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fusion.hpp"

namespace r2ps {

/// Entrywise comparison of two mass assignments over the union of their
/// focal supports (missing entries count as 0).
struct MassDelta {
    bool same_support = true;
    double max_deviation = 0.0;
    std::string worst; // key with the largest deviation
};

namespace detail {

template <typename Entries, typename Less>
MassDelta compare_sorted(const Entries& a, const Entries& b, Less less) {
    MassDelta delta;
    std::size_t i = 0;
    std::size_t j = 0;
    auto consider = [&](const auto& key, double x, double y) {
        double d = std::abs(x - y);
        if (d > delta.max_deviation) {
            delta.max_deviation = d;
            delta.worst = key.to_string();
        }
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            delta.same_support = false;
            consider(a[i].first, a[i].second, 0.0);
            ++i;
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            delta.same_support = false;
            consider(b[j].first, 0.0, b[j].second);
            ++j;
        } else {
            consider(a[i].first, a[i].second, b[j].second);
            ++i;
            ++j;
        }
    }
    return delta;
}

inline void append_mass_lines(std::vector<std::string>& out, const MassFunction& mf,
                              const std::string& header) {
    out.push_back(header);
    for (const auto& [event, mass] : mf.focal())
        out.push_back("  " + event.to_string() + " : " + format_fixed(mass, 6));
}

inline void append_mass_lines(std::vector<std::string>& out, const SetMassFunction& m,
                              const std::string& header) {
    out.push_back(header);
    for (const auto& [set, mass] : m.focal())
        out.push_back("  " + set.to_string() + " : " + format_fixed(mass, 6));
}

} // namespace detail

inline MassDelta compare_masses(const MassFunction& a, const MassFunction& b) {
    require_same_frame(a.frame(), b.frame());
    return detail::compare_sorted(a.focal(), b.focal(), CanonicalEventLess{});
}

inline MassDelta compare_masses(const SetMassFunction& a, const SetMassFunction& b) {
    require_same_frame(a.frame(), b.frame());
    return detail::compare_sorted(a.focal(), b.focal(), CanonicalSetLess{});
}

/// Two mass functions are considered equal when their focal supports are
/// identical and every per-entry difference is at most tol.
inline bool masses_equal(const MassFunction& a, const MassFunction& b, double tol) {
    MassDelta delta = compare_masses(a, b);
    return delta.same_support && delta.max_deviation <= tol;
}

/// Outcome of an executable algebraic-law check.
struct PropertyReport {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    std::string detail;                // optional one-line summary
    std::vector<std::string> witness;  // populated when pass is false
};

/// Consistency: the projections of the left sum and of the right sum both
/// equal the Dempster combination of the projected operands.
inline PropertyReport check_consistency(const MassFunction& m1, const MassFunction& m2,
                                        double tol = MassFunction::default_tolerance) {
    SetMassFunction from_left = project_mass(left_junctional_sum(m1, m2).result);
    SetMassFunction from_right = project_mass(right_junctional_sum(m1, m2).result);
    SetMassFunction from_sets = dempster_combine(project_mass(m1), project_mass(m2));

    MassDelta lr = compare_masses(from_left, from_right);
    MassDelta ld = compare_masses(from_left, from_sets);
    MassDelta rd = compare_masses(from_right, from_sets);

    PropertyReport report;
    report.name = "consistency";
    report.max_deviation = std::max({lr.max_deviation, ld.max_deviation, rd.max_deviation});
    report.pass = lr.same_support && ld.same_support && rd.same_support &&
                  report.max_deviation <= tol;
    if (!report.pass) {
        detail::append_mass_lines(report.witness, from_left, "projection of left sum:");
        detail::append_mass_lines(report.witness, from_right, "projection of right sum:");
        detail::append_mass_lines(report.witness, from_sets, "dempster of projections:");
    }
    return report;
}

/// Pseudo-Matthew effect: with the left rule, every ordering that starts with
/// the same source chains to the identical mass function (mirror with the
/// right rule and the final source). Also checks the bound that all n!
/// orderings produce at most n distinct results.
inline PropertyReport check_pseudo_matthew(Rule rule, const std::vector<MassFunction>& sources,
                                           double tol = MassFunction::default_tolerance) {
    if (sources.empty())
        throw ValidationError("pseudo-matthew check needs at least one source");
    const std::size_t n = sources.size();

    PropertyReport report;
    report.name = std::string("pseudo-matthew ") + to_string(rule);
    if (n < 3) {
        report.pass = true;
        report.detail = "vacuous (fewer than 3 sources)";
        return report;
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    auto describe = [&](const std::vector<std::size_t>& p) {
        std::string text = "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0)
                text += ',';
            text += std::to_string(p[i] + 1);
        }
        return text + ")";
    };

    std::vector<std::vector<std::size_t>> orderings;
    std::vector<MassFunction> results;
    do {
        std::vector<MassFunction> ordered;
        ordered.reserve(n);
        for (std::size_t index : perm)
            ordered.push_back(sources[index]);
        orderings.push_back(perm);
        results.push_back(chain(rule, ordered).result);
    } while (std::next_permutation(perm.begin(), perm.end()));

    report.pass = true;
    // group agreement: fixed first source (left) or fixed last source (right)
    std::vector<std::size_t> representative(n, orderings.size());
    for (std::size_t k = 0; k < orderings.size(); ++k) {
        std::size_t anchor = rule == Rule::left ? orderings[k].front() : orderings[k].back();
        if (representative[anchor] == orderings.size()) {
            representative[anchor] = k;
            continue;
        }
        MassDelta delta = compare_masses(results[representative[anchor]], results[k]);
        report.max_deviation = std::max(report.max_deviation, delta.max_deviation);
        if (!delta.same_support || delta.max_deviation > tol) {
            report.pass = false;
            if (report.witness.empty()) {
                detail::append_mass_lines(report.witness, results[representative[anchor]],
                                          "ordering " + describe(orderings[representative[anchor]]) + ":");
                detail::append_mass_lines(report.witness, results[k],
                                          "ordering " + describe(orderings[k]) + ":");
            }
        }
    }

    // distinct results over every ordering: at most n
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < results.size(); ++k) {
        bool found = false;
        for (std::size_t rep : reps) {
            if (masses_equal(results[rep], results[k], tol)) {
                found = true;
                break;
            }
        }
        if (!found)
            reps.push_back(k);
    }
    report.detail = std::to_string(reps.size()) + " distinct results over " +
                    std::to_string(results.size()) + " orderings";
    if (reps.size() > n) {
        report.pass = false;
        if (report.witness.empty())
            report.witness.push_back("more than " + std::to_string(n) + " distinct chain results");
    }
    return report;
}

/// Associativity of the junctional sums: compares (m1 op1 m2) op2 m3 with
/// m1 op1 (m2 op2 m3). Guaranteed to pass when op1 == op2; with mixed
/// directions the two groupings may legitimately differ, and the report then
/// carries both results as witness.
inline PropertyReport check_associativity(Rule rule1, Rule rule2, const MassFunction& m1,
                                          const MassFunction& m2, const MassFunction& m3,
                                          double tol = MassFunction::default_tolerance) {
    MassFunction grouped_left = combine(rule2, combine(rule1, m1, m2).result, m3).result;
    MassFunction grouped_right = combine(rule1, m1, combine(rule2, m2, m3).result).result;

    MassDelta delta = compare_masses(grouped_left, grouped_right);
    PropertyReport report;
    report.name = std::string("associativity ") + to_string(rule1) + "," + to_string(rule2);
    report.max_deviation = delta.max_deviation;
    report.pass = delta.same_support && delta.max_deviation <= tol;
    if (!report.pass) {
        detail::append_mass_lines(report.witness, grouped_left,
                                  std::string("(m1 +") + to_string(rule1) + " m2) +" +
                                      to_string(rule2) + " m3:");
        detail::append_mass_lines(report.witness, grouped_right,
                                  std::string("m1 +") + to_string(rule1) + " (m2 +" +
                                      to_string(rule2) + " m3):");
    }
    return report;
}

} // namespace r2ps
