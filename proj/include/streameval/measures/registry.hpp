#pragma once

#include <span>
#include <string>
#include <vector>

namespace streameval {

enum class MeasureKind {
    per_step,    // computed on every scored batch
    detection,   // end-of-run scalar from the detection record
    adaptation,  // end-of-run scalar from the loss series around known drifts
    selection,   // derived from the selection history
};

struct MeasureInfo {
    std::string id;
    MeasureKind kind;
    bool lower_better;
    std::string description;
};

// All measure ids exposed through configs and result files.
const std::vector<MeasureInfo>& measure_registry();

bool is_known_measure(const std::string& id);
const MeasureInfo& measure_info(const std::string& id);

// Evaluate a per-step measure (accuracy, zero_one, f1, kappa) on one batch.
// noise_variability and fss are per-step too but need more context than the
// two label vectors, so they are computed by the pipelines directly.
double compute_batch_measure(const std::string& id, std::span<const int> y_true,
                             std::span<const int> y_pred, double zero_division = 0.0);

}  // namespace streameval
