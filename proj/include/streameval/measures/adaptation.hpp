#pragma once

#include <optional>
#include <span>

namespace streameval {

// Mean change of a per-step loss series across a drift: the mean over the W
// steps starting at drift_index minus the mean over the W steps before it.
// drift_index is the position of the first post-drift step in the series.
double drift_performance_deterioration(std::span<const double> loss_series,
                                       long drift_index, long window);

// Steps until the series first returns to its pre-drift window mean: the
// first t >= drift_index with series[t] <= mean(series[drift_index-W ..
// drift_index-1]) for lower-is-better series (>= when higher is better),
// searching up to horizon_end (exclusive; e.g. the next known drift) or the
// series end. nullopt = not restored within the horizon.
std::optional<long> drift_restoration_time(std::span<const double> loss_series,
                                           long drift_index, long window,
                                           bool lower_better = true,
                                           std::optional<long> horizon_end = std::nullopt);

}  // namespace streameval
