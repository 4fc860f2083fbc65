#pragma once

#include <functional>
#include <optional>
#include <span>

#include "streameval/learners/predictor.hpp"
#include "streameval/rng.hpp"
#include "streameval/selectors/selector.hpp"
#include "streameval/stream/batch.hpp"

namespace streameval {

using BatchLoss = std::function<double(std::span<const int> y_true,
                                       std::span<const int> y_pred)>;

// Mean loss increase of the (unmodified) model under n_samples Gaussian input
// perturbations, relative to the unperturbed loss. Noise is redrawn per
// sample across the whole batch.
double noise_variability(const OnlinePredictor& model, const Batch& batch,
                         const BatchLoss& loss, double noise_std, int n_samples,
                         Rng& rng);

// Nogueira-style stability of the last w selection vectors (all with the same
// k out of m features):
//   FSS = 1 - [ (1/m) sum_j s_j^2 ] / [ (k/m)(1 - k/m) ],
// with s_j^2 the unbiased sample variance of feature j's selection bit.
// Undefined (nullopt) for k == 0 or k == m; at most 1, can be negative.
std::optional<double> feature_set_stability(std::span<const SelectionVector> window);

// fraction of the original features a size-k selection leaves unused
double reduction_rate(int k, int m);

}  // namespace streameval
