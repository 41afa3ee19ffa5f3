#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "properties.hpp"

namespace r2ps {

/// Named expert assertions over a shared frame, in declaration order.
class ExpertPanel {
public:
    ExpertPanel(Frame frame, std::vector<std::pair<std::string, MassFunction>> experts)
        : frame_(std::move(frame)), experts_(std::move(experts)) {
        if (experts_.empty())
            throw ValidationError("panel needs at least one expert");
        for (std::size_t i = 0; i < experts_.size(); ++i) {
            require_same_frame(frame_, experts_[i].second.frame());
            if (experts_[i].first.empty())
                throw ValidationError("empty expert identifier");
            for (std::size_t j = i + 1; j < experts_.size(); ++j)
                if (experts_[i].first == experts_[j].first)
                    throw ValidationError("duplicate expert identifier '" + experts_[i].first + "'");
        }
    }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::pair<std::string, MassFunction>>& experts() const noexcept {
        return experts_;
    }
    std::size_t size() const noexcept { return experts_.size(); }

private:
    Frame frame_;
    std::vector<std::pair<std::string, MassFunction>> experts_;
};

/// Aggregated support entries for one projection class, canonical event order.
struct SupportGroup {
    ElementSet set;
    std::vector<std::pair<Event, double>> entries;
    std::size_t winner = 0; // index into entries
    bool tie = false;
};

struct DecisionReport {
    std::vector<FusionOutcome> outcomes; // one per expert placed first
    SetMassFunction projection;          // shared degeneration of every outcome
    std::vector<SupportGroup> support;   // one group per focal set of the projection
    MassFunction decision;

    bool has_tie() const {
        for (const auto& group : support)
            if (group.tie)
                return true;
        return false;
    }
};

/// One left chain per expert placed first, the rest following in panel order.
/// By the pseudo-Matthew effect the tail order does not affect the result, so
/// these are exactly the n distinct candidate fusions of the panel.
inline std::vector<FusionOutcome> fuse_all_orders(const ExpertPanel& panel) {
    std::vector<FusionOutcome> outcomes;
    outcomes.reserve(panel.size());
    for (std::size_t first = 0; first < panel.size(); ++first) {
        std::vector<MassFunction> ordered;
        std::vector<std::string> names;
        ordered.reserve(panel.size());
        names.reserve(panel.size());
        ordered.push_back(panel.experts()[first].second);
        names.push_back(panel.experts()[first].first);
        for (std::size_t i = 0; i < panel.size(); ++i) {
            if (i == first)
                continue;
            ordered.push_back(panel.experts()[i].second);
            names.push_back(panel.experts()[i].first);
        }
        outcomes.push_back(chain(Rule::left, ordered, std::move(names)));
    }
    return outcomes;
}

/// Winner-take-all decision: all outcomes share one projection m; within each
/// projection class the event with the highest aggregated support receives the
/// entire class mass. Ties resolve to the canonically first event and are
/// flagged.
inline DecisionReport decide(const ExpertPanel& panel) {
    std::vector<FusionOutcome> outcomes = fuse_all_orders(panel);
    SetMassFunction projection = project_mass(outcomes.front().result);

    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        MassDelta delta = compare_masses(projection, project_mass(outcomes[i].result));
        if (!delta.same_support || delta.max_deviation > 1e-9)
            throw Error("per-ordering fusion results disagree after projection (deviation " +
                        format_scientific(delta.max_deviation) + ")");
    }

    std::map<Event, double, CanonicalEventLess> totals;
    for (const auto& outcome : outcomes)
        for (const auto& [event, mass] : outcome.result.focal())
            totals[event] += mass;

    std::map<ElementSet, std::vector<std::pair<Event, double>>, CanonicalSetLess> grouped;
    for (const auto& [event, total] : totals)
        grouped[event.project()].emplace_back(event, total);

    std::vector<SupportGroup> support;
    std::vector<std::pair<Event, double>> winners;
    for (const auto& [set, class_mass] : projection.focal()) {
        SupportGroup group{set, grouped.at(set), 0, false};
        for (std::size_t i = 1; i < group.entries.size(); ++i)
            if (group.entries[i].second > group.entries[group.winner].second)
                group.winner = i;
        for (std::size_t i = 0; i < group.entries.size(); ++i)
            if (i != group.winner &&
                group.entries[i].second == group.entries[group.winner].second)
                group.tie = true;
        winners.emplace_back(group.entries[group.winner].first, class_mass);
        support.push_back(std::move(group));
    }

    MassFunction decision(panel.frame(), std::move(winners), projection.tolerance());
    return DecisionReport{std::move(outcomes), std::move(projection), std::move(support),
                          std::move(decision)};
}

} // namespace r2ps
