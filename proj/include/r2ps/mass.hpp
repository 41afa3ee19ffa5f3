#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "event.hpp"
#include "format.hpp"

namespace r2ps {

class SetMassFunction;

/// Mass function over permutation events. Focal events are distinct, nonempty
/// and share the frame; every mass is positive and the total is 1 within the
/// construction tolerance. Focal entries are stored in canonical event order,
/// which fixes the accumulation order of every downstream combination.
class MassFunction {
public:
    static constexpr double default_tolerance = 1e-9;

    MassFunction(Frame frame, std::vector<std::pair<Event, double>> focal,
                 double tolerance = default_tolerance)
        : frame_(std::move(frame)), focal_(std::move(focal)), tolerance_(tolerance) {
        std::sort(focal_.begin(), focal_.end(), [](const auto& a, const auto& b) {
            return canonical_order(a.first, b.first) < 0;
        });
        double total = 0.0;
        for (std::size_t i = 0; i < focal_.size(); ++i) {
            const auto& [event, mass] = focal_[i];
            require_same_frame(frame_, event.frame());
            if (event.is_empty())
                throw ValidationError("the empty event cannot carry mass");
            if (!(mass > 0.0))
                throw ValidationError("mass for '" + event.to_string() + "' must be positive");
            if (i > 0 && focal_[i - 1].first == event)
                throw ValidationError("duplicate focal event '" + event.to_string() + "'");
            total += mass;
        }
        if (std::abs(total - 1.0) > tolerance_)
            throw ValidationError("masses total " + format_fixed(total, 12) + " (expected 1)");
    }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::pair<Event, double>>& focal() const noexcept { return focal_; }
    std::size_t size() const noexcept { return focal_.size(); }
    double tolerance() const noexcept { return tolerance_; }

    /// Mass of an event; 0 when the event is not focal.
    double mass(const Event& event) const {
        auto it = std::lower_bound(focal_.begin(), focal_.end(), event,
                                   [](const auto& entry, const Event& key) {
                                       return canonical_order(entry.first, key) < 0;
                                   });
        if (it != focal_.end() && it->first == event)
            return it->second;
        return 0.0;
    }

    bool is_focal(const Event& event) const { return mass(event) > 0.0; }

private:
    Frame frame_;
    std::vector<std::pair<Event, double>> focal_;
    double tolerance_;
};

/// Basic probability assignment: masses over nonempty element subsets.
/// Same positivity and total invariants as MassFunction.
class SetMassFunction {
public:
    SetMassFunction(Frame frame, std::vector<std::pair<ElementSet, double>> focal,
                    double tolerance = MassFunction::default_tolerance)
        : frame_(std::move(frame)), focal_(std::move(focal)), tolerance_(tolerance) {
        std::sort(focal_.begin(), focal_.end(), [](const auto& a, const auto& b) {
            return canonical_order(a.first, b.first) < 0;
        });
        double total = 0.0;
        for (std::size_t i = 0; i < focal_.size(); ++i) {
            const auto& [set, mass] = focal_[i];
            require_same_frame(frame_, set.frame());
            if (set.empty())
                throw ValidationError("the empty set cannot carry mass");
            if (!(mass > 0.0))
                throw ValidationError("mass for '" + set.to_string() + "' must be positive");
            if (i > 0 && focal_[i - 1].first == set)
                throw ValidationError("duplicate focal set '" + set.to_string() + "'");
            total += mass;
        }
        if (std::abs(total - 1.0) > tolerance_)
            throw ValidationError("masses total " + format_fixed(total, 12) + " (expected 1)");
    }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::pair<ElementSet, double>>& focal() const noexcept { return focal_; }
    std::size_t size() const noexcept { return focal_.size(); }
    double tolerance() const noexcept { return tolerance_; }

    double mass(const ElementSet& set) const {
        auto it = std::lower_bound(focal_.begin(), focal_.end(), set,
                                   [](const auto& entry, const ElementSet& key) {
                                       return canonical_order(entry.first, key) < 0;
                                   });
        if (it != focal_.end() && it->first == set)
            return it->second;
        return 0.0;
    }

private:
    Frame frame_;
    std::vector<std::pair<ElementSet, double>> focal_;
    double tolerance_;
};

/// Degeneration to the set level: m(A) collects the mass of every focal event
/// whose element set is A. Total mass is preserved.
inline SetMassFunction project_mass(const MassFunction& mf) {
    std::map<ElementSet, double, CanonicalSetLess> cells;
    for (const auto& [event, mass] : mf.focal())
        cells[event.project()] += mass;
    std::vector<std::pair<ElementSet, double>> focal(cells.begin(), cells.end());
    return SetMassFunction(mf.frame(), std::move(focal), mf.tolerance());
}

/// Represent a set-level mass function at the event level: each focal set
/// becomes the repetition-free event listing its elements in ascending frame
/// order. project_mass(lift_set_mass(m)) == m.
inline MassFunction lift_set_mass(const SetMassFunction& m) {
    std::vector<std::pair<Event, double>> focal;
    focal.reserve(m.size());
    for (const auto& [set, mass] : m.focal())
        focal.emplace_back(set.canonical_event(), mass);
    return MassFunction(m.frame(), std::move(focal), m.tolerance());
}

/// True iff every focal event is repetition-free, i.e. the mass function is
/// expressible in plain (non-repeatable) permutation-set terms.
inline bool is_rps(const MassFunction& mf) {
    for (const auto& [event, mass] : mf.focal()) {
        (void)mass;
        if (!event.is_repetition_free())
            return false;
    }
    return true;
}

} // namespace r2ps
