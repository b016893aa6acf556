#pragma once

#include <span>
#include <string>
#include <vector>

#include "ktbench/segmentation.hpp"
#include "ktbench/types.hpp"

namespace ktbench {

// How per-skill success/failure ratios accumulate across intervals.
// `cumulative` folds all attempts in intervals 1..z into a single
// (correct - incorrect) / total ratio and keeps entries in [-1, 1];
// `per_interval` sums per-interval ratios, each normalized by the running
// attempt total at that interval.
enum class AbilityNorm { cumulative, per_interval };

AbilityNorm parse_ability_norm(const std::string& name);
std::string ability_norm_name(AbilityNorm n);

// Per-skill learning-ability vector of a student after interval z.
struct AbilityProfile {
    std::string student_id;
    int up_to_interval = 0; // z
    std::vector<double> values;
};

// Balance of outcomes on one skill: (correct - incorrect) / total,
// 0 when the skill has no attempts.
double skill_balance(std::span<const int> outcomes);

// Incremental profile builder; feed intervals in order.
class ProfileAccumulator {
public:
    ProfileAccumulator(int n_skills, AbilityNorm norm = AbilityNorm::cumulative);

    // Consumes one interval's attempts as (skill_id, correct) pairs.
    void add_interval(std::span<const std::pair<int, int>> attempts);

    int intervals() const { return intervals_; }
    std::vector<double> profile() const;

private:
    AbilityNorm norm_;
    int intervals_ = 0;
    std::vector<long> correct_, total_;
    std::vector<double> ratio_sum_; // per_interval mode only
};

// Profile over intervals 1..z of a segmented sequence; sentinel slots ignored.
AbilityProfile build_profile(const StudentSequence& seq,
                             const std::vector<Segment>& segments, int z,
                             int n_skills,
                             AbilityNorm norm = AbilityNorm::cumulative);

// CSV export (student,z,v_0..v_{n-1}) for clustering audits.
std::string profiles_to_csv(const std::vector<AbilityProfile>& profiles);

} // namespace ktbench
