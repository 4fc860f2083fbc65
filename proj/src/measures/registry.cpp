#include "streameval/measures/registry.hpp"

#include <stdexcept>

#include "streameval/measures/classification.hpp"

namespace streameval {

const std::vector<MeasureInfo>& measure_registry() {
    static const std::vector<MeasureInfo> registry = {
        {"accuracy", MeasureKind::per_step, false, "fraction of correct predictions per batch"},
        {"zero_one", MeasureKind::per_step, true, "1 - accuracy per batch"},
        {"f1", MeasureKind::per_step, false, "binary F1 score per batch"},
        {"kappa", MeasureKind::per_step, false, "Cohen's kappa per batch"},
        {"noise_variability", MeasureKind::per_step, true,
         "mean loss increase under Gaussian input perturbations"},
        {"dpd", MeasureKind::adaptation, true,
         "loss change across known drifts (window mean after minus before)"},
        {"drt", MeasureKind::adaptation, true,
         "steps until pre-drift window-mean performance is restored"},
        {"dcr", MeasureKind::detection, false,
         "fraction of known drifts detected within the tolerance window"},
        {"fdr", MeasureKind::detection, true,
         "fraction of detections outside every tolerance window"},
        {"mtfa", MeasureKind::detection, false, "mean time between false alarms"},
        {"delay", MeasureKind::detection, true,
         "mean steps from a known drift to its first detection"},
        {"mtr", MeasureKind::detection, false, "(mtfa / delay) * dcr"},
        {"fss", MeasureKind::selection, false,
         "stability of the active feature set over a sliding window"},
        {"reduction_rate", MeasureKind::selection, false,
         "fraction of features left unselected"},
    };
    return registry;
}

bool is_known_measure(const std::string& id) {
    for (const auto& m : measure_registry())
        if (m.id == id) return true;
    return false;
}

const MeasureInfo& measure_info(const std::string& id) {
    for (const auto& m : measure_registry())
        if (m.id == id) return m;
    throw std::invalid_argument("unknown measure id '" + id + "'");
}

double compute_batch_measure(const std::string& id, std::span<const int> y_true,
                             std::span<const int> y_pred, double zero_division) {
    if (id == "accuracy") return accuracy(y_true, y_pred);
    if (id == "zero_one") return zero_one_loss(y_true, y_pred);
    if (id == "f1") return f1_binary(y_true, y_pred, zero_division);
    if (id == "kappa") return cohen_kappa(y_true, y_pred);
    throw std::invalid_argument("measure '" + id + "' is not a per-batch label measure");
}

}  // namespace streameval
