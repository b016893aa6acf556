#include "ktbench/segmentation.hpp"

#include "ktbench/errors.hpp"

namespace ktbench {

std::vector<Segment> segment_sequence(const StudentSequence& seq, int interval_len) {
    if (interval_len < 1)
        throw ConfigError("interval length must be >= 1");

    const int n = static_cast<int>(seq.records.size());
    std::vector<Segment> segments;
    segments.reserve(static_cast<size_t>((n + interval_len - 1) / interval_len));
    for (int start = 0; start < n; start += interval_len) {
        Segment seg;
        seg.student_id = seq.student_id;
        seg.index = static_cast<int>(segments.size()) + 1;
        seg.slots.resize(static_cast<size_t>(interval_len), kSentinelSlot);
        for (int k = 0; k < interval_len && start + k < n; ++k)
            seg.slots[static_cast<size_t>(k)] = start + k;
        segments.push_back(std::move(seg));
    }
    return segments;
}

} // namespace ktbench
