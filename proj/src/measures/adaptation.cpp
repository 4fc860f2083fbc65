#include "streameval/measures/adaptation.hpp"

#include <algorithm>
#include <stdexcept>

namespace streameval {

namespace {

double pre_drift_mean(std::span<const double> series, long drift_index, long window) {
    if (window < 1) throw std::invalid_argument("drift measures: window must be >= 1");
    if (drift_index - window < 0)
        throw std::invalid_argument("drift measures: insufficient history before the drift");
    double sum = 0.0;
    for (long t = drift_index - window; t < drift_index; ++t) sum += series[t];
    return sum / static_cast<double>(window);
}

}  // namespace

double drift_performance_deterioration(std::span<const double> loss_series,
                                       long drift_index, long window) {
    const double before = pre_drift_mean(loss_series, drift_index, window);
    if (drift_index + window > static_cast<long>(loss_series.size()))
        throw std::invalid_argument("dpd: insufficient history after the drift");
    double after = 0.0;
    for (long t = drift_index; t < drift_index + window; ++t) after += loss_series[t];
    return after / static_cast<double>(window) - before;
}

std::optional<long> drift_restoration_time(std::span<const double> loss_series,
                                           long drift_index, long window,
                                           bool lower_better,
                                           std::optional<long> horizon_end) {
    const double reference = pre_drift_mean(loss_series, drift_index, window);
    if (drift_index >= static_cast<long>(loss_series.size()))
        throw std::invalid_argument("drt: series does not reach the drift");
    const long end = std::min<long>(static_cast<long>(loss_series.size()),
                                    horizon_end.value_or(static_cast<long>(loss_series.size())));
    for (long t = drift_index; t < end; ++t) {
        const bool restored =
            lower_better ? loss_series[t] <= reference : loss_series[t] >= reference;
        if (restored) return t - drift_index;
    }
    return std::nullopt;
}

}  // namespace streameval
