#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ktbench/types.hpp"

namespace ktbench {

enum class DatasetFormat { canonical, assistments, kdd };

DatasetFormat parse_format(const std::string& name);
std::string format_name(DatasetFormat f);

struct LoadOptions {
    DatasetFormat format = DatasetFormat::canonical;
    MultiskillMode multiskill = MultiskillMode::first;
    // Header-name overrides for the logical columns
    // order/student/item/skill/correct.
    std::map<std::string, std::string> columns;
};

// Parses an interaction log, drops malformed rows (counted in
// Dataset::dropped_rows), groups by student and sorts chronologically
// (ties broken by file row order).
Dataset load_interactions(const std::string& path, const LoadOptions& opts);

struct CleanStats {
    long kept = 0;
    long removed_duplicates = 0;  // exact duplicates and collapsed multi-skill rows
    long removed_reattempts = 0;  // later attempts on an already-seen item
};

// First-attempt-only cleaning: collapses multi-skill duplicate rows per the
// vocabulary's multiskill mode, removes exact duplicates, keeps only the
// first attempt per (student, item), then rebuilds the vocabulary densely
// over the surviving records.
Dataset clean_records(const Dataset& ds, CleanStats* stats = nullptr);

// Deterministic student-level partition into n_folds test sets.
std::vector<FoldSplit> student_level_split(const Dataset& ds, int n_folds,
                                           std::uint64_t seed);

struct SynthConfig {
    int n_students = 300;
    int n_skills = 10;
    int n_groups = 2;
    int attempts_per_student = 100;
    std::uint64_t seed = 42;
    // Success probability for group g at practice count k on skill s:
    //   clamp(group_base[g] + group_growth[g]*k + skill_spread*offset(s))
    // where offset(s) spans [-1, 1] across skills.
    std::vector<double> group_base;   // defaults to a spread over [0.8, 0.3]
    std::vector<double> group_growth; // defaults to 0
    double skill_spread = 0.15;
    double clamp_lo = 0.02;
    double clamp_hi = 0.98;
};

struct SynthData {
    Dataset dataset;
    std::map<std::string, int> group_of_student; // planted ability group
};

SynthData generate_synthetic(const SynthConfig& cfg);

// Canonical CSV: header `order,student,item,skill,correct`.
std::string to_canonical_csv(const Dataset& ds);
void write_canonical_csv(const std::string& path, const Dataset& ds);

} // namespace ktbench
