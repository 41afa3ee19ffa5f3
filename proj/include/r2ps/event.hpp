#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "frame.hpp"

namespace r2ps {

class ElementSet;

/// Permutation event: an ordered tuple of frame elements, repetition allowed.
/// Order and multiplicity both distinguish events. The zero-length event is
/// the conflict sentinel: it arises only as a junction result and never
/// carries mass.
class Event {
public:
    Event(Frame frame, std::vector<std::size_t> items)
        : frame_(std::move(frame)), items_(std::move(items)) {
        for (std::size_t index : items_)
            if (index >= frame_.size())
                throw ValidationError("element index out of range for frame");
    }

    static Event empty(Frame frame) { return Event(std::move(frame), {}); }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::size_t>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool is_empty() const noexcept { return items_.empty(); }

    bool contains(std::size_t index) const {
        return std::find(items_.begin(), items_.end(), index) != items_.end();
    }

    /// True when no element occurs twice (the repetition-free, RPS-compatible case).
    bool is_repetition_free() const {
        std::vector<char> seen(frame_.size(), 0);
        for (std::size_t index : items_) {
            if (seen[index])
                return false;
            seen[index] = 1;
        }
        return true;
    }

    /// The set of distinct elements, order and frequency discarded.
    ElementSet project() const;

    std::string to_string() const {
        if (items_.empty())
            return "()";
        std::string text;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i > 0)
                text += ' ';
            text += frame_.label(items_[i]);
        }
        return text;
    }

private:
    Frame frame_;
    std::vector<std::size_t> items_;
};

inline bool operator==(const Event& a, const Event& b) {
    return a.frame() == b.frame() && a.items() == b.items();
}
inline bool operator!=(const Event& a, const Event& b) { return !(a == b); }

/// Canonical event order: ascending length, then lexicographic by element index.
inline std::strong_ordering canonical_order(const Event& a, const Event& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    return a.items() <=> b.items();
}

struct CanonicalEventLess {
    bool operator()(const Event& a, const Event& b) const {
        return canonical_order(a, b) < 0;
    }
};

/// Projection target: an unordered subset of frame elements.
/// Members are kept sorted by frame index; duplicates collapse.
class ElementSet {
public:
    ElementSet(Frame frame, std::vector<std::size_t> members)
        : frame_(std::move(frame)), members_(std::move(members)) {
        for (std::size_t index : members_)
            if (index >= frame_.size())
                throw ValidationError("element index out of range for frame");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(std::size_t index) const {
        return std::binary_search(members_.begin(), members_.end(), index);
    }

    bool is_whole_frame() const noexcept { return members_.size() == frame_.size(); }

    /// The repetition-free event listing the members in ascending frame order.
    Event canonical_event() const { return Event(frame_, members_); }

    std::string to_string() const {
        std::string text;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i > 0)
                text += ' ';
            text += frame_.label(members_[i]);
        }
        return text;
    }

private:
    Frame frame_;
    std::vector<std::size_t> members_;
};

inline bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.frame() == b.frame() && a.members() == b.members();
}
inline bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

/// Canonical set order: ascending size, then lexicographic by member index.
inline std::strong_ordering canonical_order(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    return a.members() <=> b.members();
}

struct CanonicalSetLess {
    bool operator()(const ElementSet& a, const ElementSet& b) const {
        return canonical_order(a, b) < 0;
    }
};

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
    require_same_frame(a.frame(), b.frame());
    std::vector<std::size_t> common;
    std::set_intersection(a.members().begin(), a.members().end(),
                          b.members().begin(), b.members().end(),
                          std::back_inserter(common));
    return ElementSet(a.frame(), std::move(common));
}

inline ElementSet Event::project() const {
    if (items_.empty())
        throw ValidationError("cannot project the empty event");
    return ElementSet(frame_, items_);
}

/// Left junction: the subsequence of m keeping exactly those occurrences whose
/// element appears anywhere in n. Preserves m's order and multiplicities; the
/// result is empty iff the two events share no element.
inline Event left_junction(const Event& m, const Event& n) {
    require_same_frame(m.frame(), n.frame());
    std::vector<char> present(m.frame().size(), 0);
    for (std::size_t index : n.items())
        present[index] = 1;
    std::vector<std::size_t> kept;
    kept.reserve(m.size());
    for (std::size_t index : m.items())
        if (present[index])
            kept.push_back(index);
    return Event(m.frame(), std::move(kept));
}

/// Right junction: keeps n's occurrences instead; identical to left_junction(n, m).
inline Event right_junction(const Event& m, const Event& n) {
    return left_junction(n, m);
}

inline Event Frame::event(std::initializer_list<std::string_view> labels) const {
    std::vector<std::size_t> items;
    items.reserve(labels.size());
    for (std::string_view label : labels)
        items.push_back(index_of(label));
    return Event(*this, std::move(items));
}

inline ElementSet Frame::set(std::initializer_list<std::string_view> labels) const {
    std::vector<std::size_t> members;
    members.reserve(labels.size());
    for (std::string_view label : labels)
        members.push_back(index_of(label));
    return ElementSet(*this, std::move(members));
}

} // namespace r2ps
