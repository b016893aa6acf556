#include "ktbench/ability.hpp"

#include <sstream>

#include "ktbench/errors.hpp"

namespace ktbench {

AbilityNorm parse_ability_norm(const std::string& name) {
    if (name == "cumulative") return AbilityNorm::cumulative;
    if (name == "per_interval") return AbilityNorm::per_interval;
    throw ConfigError("unknown ability normalization: " + name);
}

std::string ability_norm_name(AbilityNorm n) {
    return n == AbilityNorm::cumulative ? "cumulative" : "per_interval";
}

double skill_balance(std::span<const int> outcomes) {
    long correct = 0, total = 0;
    for (int a : outcomes) {
        correct += (a != 0);
        ++total;
    }
    if (total == 0) return 0.0;
    long incorrect = total - correct;
    return static_cast<double>(correct - incorrect) / static_cast<double>(total);
}

ProfileAccumulator::ProfileAccumulator(int n_skills, AbilityNorm norm)
    : norm_(norm),
      correct_(static_cast<size_t>(n_skills), 0),
      total_(static_cast<size_t>(n_skills), 0),
      ratio_sum_(static_cast<size_t>(n_skills), 0.0) {
    if (n_skills <= 0) throw ConfigError("profile needs a positive skill count");
}

void ProfileAccumulator::add_interval(std::span<const std::pair<int, int>> attempts) {
    std::vector<long> interval_correct(correct_.size(), 0);
    std::vector<long> interval_total(correct_.size(), 0);
    for (const auto& [skill, correct] : attempts) {
        if (skill < 0 || skill >= static_cast<int>(correct_.size()))
            throw DataError("skill id out of range in profile: " + std::to_string(skill));
        auto j = static_cast<size_t>(skill);
        interval_correct[j] += (correct != 0);
        ++interval_total[j];
    }
    for (size_t j = 0; j < correct_.size(); ++j) {
        correct_[j] += interval_correct[j];
        total_[j] += interval_total[j];
        if (norm_ == AbilityNorm::per_interval && total_[j] > 0 && interval_total[j] > 0) {
            long interval_incorrect = interval_total[j] - interval_correct[j];
            ratio_sum_[j] += static_cast<double>(interval_correct[j] - interval_incorrect) /
                             static_cast<double>(total_[j]);
        }
    }
    ++intervals_;
}

std::vector<double> ProfileAccumulator::profile() const {
    std::vector<double> values(correct_.size(), 0.0);
    for (size_t j = 0; j < correct_.size(); ++j) {
        if (norm_ == AbilityNorm::cumulative) {
            if (total_[j] > 0) {
                long incorrect = total_[j] - correct_[j];
                values[j] = static_cast<double>(correct_[j] - incorrect) /
                            static_cast<double>(total_[j]);
            }
        } else {
            values[j] = ratio_sum_[j];
        }
    }
    return values;
}

AbilityProfile build_profile(const StudentSequence& seq,
                             const std::vector<Segment>& segments, int z,
                             int n_skills, AbilityNorm norm) {
    if (z < 1) throw ConfigError("profile interval z must be >= 1");
    ProfileAccumulator acc(n_skills, norm);
    for (const auto& seg : segments) {
        if (seg.index > z) break;
        std::vector<std::pair<int, int>> attempts;
        for (int slot : seg.slots) {
            if (slot == kSentinelSlot) continue;
            const auto& rec = seq.records[static_cast<size_t>(slot)];
            attempts.emplace_back(rec.skill_id, rec.correct);
        }
        acc.add_interval(attempts);
    }
    AbilityProfile profile;
    profile.student_id = seq.student_id;
    profile.up_to_interval = z;
    profile.values = acc.profile();
    return profile;
}

std::string profiles_to_csv(const std::vector<AbilityProfile>& profiles) {
    std::ostringstream out;
    size_t n = profiles.empty() ? 0 : profiles[0].values.size();
    out << "student,z";
    for (size_t j = 0; j < n; ++j) out << ",v" << j;
    out << '\n';
    out.precision(17);
    for (const auto& p : profiles) {
        out << p.student_id << ',' << p.up_to_interval;
        for (double v : p.values) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace ktbench
