#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace r2ps {

class Event;
class ElementSet;

/// Frame of discernment: an ordered set of distinct element labels.
/// The declared order is canonical and fixes each element's index.
/// Immutable after construction; copies share the label storage.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels) {
        if (labels.empty())
            throw ValidationError("frame needs at least one element");
        for (const auto& label : labels) {
            if (label.empty())
                throw ValidationError("empty element label");
            if (label.find_first_of(" \t\r\n\f\v#:") != std::string::npos)
                throw ValidationError("malformed element label '" + label + "'");
        }
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw ValidationError("duplicate element label '" + labels[i] + "'");
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_->size(); }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    const std::string& label(std::size_t index) const { return labels_->at(index); }

    std::optional<std::size_t> find(std::string_view label) const {
        for (std::size_t i = 0; i < labels_->size(); ++i)
            if ((*labels_)[i] == label)
                return i;
        return std::nullopt;
    }

    std::size_t index_of(std::string_view label) const {
        if (auto index = find(label))
            return *index;
        throw ValidationError("unknown element '" + std::string(label) + "'");
    }

    /// Convenience constructors for events and sets given by label; see event.hpp.
    Event event(std::initializer_list<std::string_view> labels) const;
    ElementSet set(std::initializer_list<std::string_view> labels) const;

    /// Frames compare by label sequence, so separately parsed frames are compatible.
    friend bool operator==(const Frame& a, const Frame& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

inline void require_same_frame(const Frame& a, const Frame& b) {
    if (!(a == b))
        throw FrameMismatchError("operands belong to different frames");
}

} // namespace r2ps
