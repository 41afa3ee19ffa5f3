#pragma once

#include <vector>

#include "event.hpp"

namespace r2ps {

/// All nonempty tuples over the frame with length 1..max_len, in canonical
/// order (ascending length, then lexicographic by element index). There are
/// sum over i of M^i such tuples for a frame of M elements; the empty event
/// is not a member.
inline std::vector<Event> enumerate_r2es(const Frame& frame, std::size_t max_len) {
    if (max_len < 1)
        throw ValidationError("max_len must be at least 1");
    const std::size_t m = frame.size();
    std::vector<Event> events;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> tuple(len, 0);
        for (;;) {
            events.emplace_back(frame, tuple);
            std::size_t pos = len;
            while (pos > 0) {
                if (++tuple[pos - 1] < m)
                    break;
                tuple[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
        }
    }
    return events;
}

inline std::vector<Event> enumerate_r2es(const Frame& frame) {
    return enumerate_r2es(frame, frame.size());
}

/// The repetition-free event space: the empty event plus every tuple of
/// distinct elements with length 1..M, in canonical order. Used for the
/// degenerate (repetition-free) checks.
inline std::vector<Event> enumerate_pes(const Frame& frame) {
    const std::size_t m = frame.size();
    std::vector<Event> events;
    events.push_back(Event::empty(frame));
    std::vector<std::size_t> tuple;
    std::vector<char> used(m, 0);
    auto emit = [&](auto&& self, std::size_t len) -> void {
        if (tuple.size() == len) {
            events.emplace_back(frame, tuple);
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i])
                continue;
            used[i] = 1;
            tuple.push_back(i);
            self(self, len);
            tuple.pop_back();
            used[i] = 0;
        }
    };
    for (std::size_t len = 1; len <= m; ++len)
        emit(emit, len);
    return events;
}

} // namespace r2ps
