#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ktbench {

// One graded attempt. `skill_id` indexes the owning dataset's vocabulary;
// `item_id` may be empty (IRT then falls back to the skill tag).
struct InteractionRecord {
    std::string student_id;
    int skill_id = -1;
    std::string item_id;
    int correct = 0;          // 0 or 1
    int order_index = 0;      // dense chronological position within the student
    double order_key = 0.0;   // raw sort key from the source file

    bool operator==(const InteractionRecord&) const = default;
};

enum class MultiskillMode {
    first, // keep the first listed tag of a multi-tagged attempt
    joint  // fold the tag set into one combined skill
};

// Dense bijection between raw skill tags and contiguous ids 0..n-1.
class SkillVocabulary {
public:
    SkillVocabulary() = default;
    explicit SkillVocabulary(MultiskillMode mode) : mode_(mode) {}

    // Returns the id for a tag, inserting it if unseen.
    int id_for(const std::string& tag);
    std::optional<int> find(const std::string& tag) const;
    const std::string& tag(int id) const;
    int size() const { return static_cast<int>(tags_.size()); }
    MultiskillMode mode() const { return mode_; }

    // Order-normalized combined tag for a multi-skill attempt: sorted,
    // de-duplicated, joined with '+'.
    static std::string joint_tag(std::vector<std::string> tags);

private:
    std::unordered_map<std::string, int> ids_;
    std::vector<std::string> tags_;
    MultiskillMode mode_ = MultiskillMode::first;
};

struct StudentSequence {
    std::string student_id;
    std::vector<InteractionRecord> records; // chronological, non-empty
};

struct Dataset {
    SkillVocabulary vocab;
    std::vector<StudentSequence> students; // sorted by student_id
    long dropped_rows = 0;                 // malformed rows skipped at load

    long total_records() const {
        long n = 0;
        for (const auto& s : students) n += static_cast<long>(s.records.size());
        return n;
    }
};

struct FoldSplit {
    int fold_index = 0;
    std::vector<std::string> train_students; // sorted
    std::vector<std::string> test_students;  // sorted

    bool is_test(const std::string& id) const;
};

} // namespace ktbench
