#pragma once

#include <vector>

#include "ktbench/types.hpp"

namespace ktbench {

// Padding marker for the unfilled tail of a student's last interval.
constexpr int kSentinelSlot = -1;

// Fixed-length window of consecutive attempts. Slots hold indices into the
// owning StudentSequence's records, or kSentinelSlot past the end.
struct Segment {
    std::string student_id;
    int index = 1; // 1-based interval number z
    std::vector<int> slots;

    int filled() const {
        int n = 0;
        for (int s : slots)
            if (s != kSentinelSlot) ++n;
        return n;
    }
};

// Splits a sequence into ceil(len/L) intervals of L slots each; the final
// partial interval is sentinel-padded. No all-sentinel trailing interval is
// emitted.
std::vector<Segment> segment_sequence(const StudentSequence& seq, int interval_len);

} // namespace ktbench
