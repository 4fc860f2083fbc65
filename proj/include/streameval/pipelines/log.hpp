#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streameval/measures/aggregates.hpp"
#include "streameval/selectors/selector.hpp"

namespace streameval {

struct ScoredStep {
    long step = 0;       // source step index of the scored batch
    long first_obs = 0;  // global index of its first observation
    long n_obs = 0;
};

struct DriftAdaptation {
    long position = 0;  // known drift, observation index
    std::optional<double> dpd;
    std::optional<long> drt;  // absent = not restored (or not computable)
    bool restorable = false;  // whether the series covered the drift at all
};

struct Summary {
    std::map<std::string, double> series_mean;  // mean raw value per per-step measure
    std::optional<double> cumulative_accuracy;  // observation-weighted

    std::optional<double> dcr, fdr, mtfa, mean_delay, mtr;
    std::vector<DriftAdaptation> per_drift;
    std::optional<double> mean_dpd, mean_drt;

    std::optional<double> mean_fss;
    std::optional<double> reduction;
};

// Everything one pipeline run records for one model instance.
struct MeasurementLog {
    std::string model;

    std::vector<ScoredStep> steps;
    std::map<std::string, MeasureSeries> series;  // keyed by measure id
    std::map<std::string, long> series_offset;    // scored steps skipped before a series starts

    std::vector<long> detections;  // alarm positions, observation indices
    std::vector<std::pair<long, SelectionVector>> selections;  // (source step, a_t)

    std::vector<double> test_seconds, train_seconds;  // per scored step / per trained step
    double pretrain_seconds = 0.0;

    long total_observations = 0;  // stream length actually consumed
    Summary summary;
};

// Across-fold aggregate of one summary scalar.
struct FoldStat {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    int n = 0;
};

struct KfoldResult {
    std::vector<MeasurementLog> folds;
    std::map<std::string, FoldStat> summary;  // keyed by summary scalar name
};

}  // namespace streameval
