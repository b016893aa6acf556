#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktbench/ability.hpp"
#include "ktbench/segmentation.hpp"
#include "ktbench/types.hpp"

namespace ktbench {

// Frozen k-means centroids over ability profiles. Group labels live in
// {1} + {2..k+1}: label 1 is reserved for every student's first interval,
// label c+1 means nearest centroid c.
struct ClusterModel {
    int k = 0;
    int dim = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> centroids;

    int label_space() const { return k + 1; }
};

struct KmeansFit {
    ClusterModel model;
    std::vector<int> assignments;        // centroid index per input point
    std::vector<double> objective_trace; // sum of squared distances, per round
    int rounds_run = 0;
};

// Lloyd's algorithm, run for `iterations` rounds or until assignments
// stabilize. Initial centroids are k distinct points sampled with `seed`;
// a cluster that empties is re-seeded to the point farthest from its
// assigned centroid.
KmeansFit fit_kmeans(const std::vector<std::vector<double>>& points, int k,
                     int iterations, std::uint64_t seed);

// 1 + index of the nearest centroid (ties -> lowest index). The profile must
// cover intervals 1..z-1 of the student being labeled.
int assign_group(const ClusterModel& model, const std::vector<double>& profile);

// Group label per interval: label[0] (z=1) is always 1, later intervals are
// assigned from the profile over the preceding intervals.
std::vector<int> label_sequence(const ClusterModel& model,
                                const StudentSequence& seq,
                                const std::vector<Segment>& segments,
                                int n_skills,
                                AbilityNorm norm = AbilityNorm::cumulative);

std::string cluster_model_to_csv(const ClusterModel& model);
void save_cluster_model(const std::string& path, const ClusterModel& model);
ClusterModel load_cluster_model(const std::string& path);

} // namespace ktbench
