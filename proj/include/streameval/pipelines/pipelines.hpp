#pragma once

#include <functional>
#include <memory>

#include "streameval/detectors/detector.hpp"
#include "streameval/learners/predictor.hpp"
#include "streameval/pipelines/config.hpp"
#include "streameval/pipelines/log.hpp"
#include "streameval/rng.hpp"
#include "streameval/selectors/selector.hpp"
#include "streameval/stream/source.hpp"

namespace streameval {

// Test-then-train over the whole stream. Per step: predict and score on the
// masked batch, feed per-observation 0/1 errors to the detector (optionally
// resetting model and selector on alarm), update the selector on the raw
// batch, then train the predictor on the freshly masked batch. The first
// n_pretrain observations are train-only.
MeasurementLog run_prequential(const PipelineConfig& config, StreamSource& source,
                               OnlinePredictor& model, DriftDetector* detector,
                               FeatureSelector* selector, Rng nv_rng);

// Periodic test on a withheld FIFO holdout set of holdout_size observations.
// Every test_interval training steps the oldest ceil(h/10) holdout entries
// are replaced with fresh withheld observations, then all measures are scored
// on the holdout set. Drift detectors are not supported here.
MeasurementLog run_holdout(const PipelineConfig& config, StreamSource& source,
                           OnlinePredictor& model, FeatureSelector* selector,
                           Rng nv_rng);

// Per-instance roles for one time step: entry 0 means "test this fold",
// entry w > 0 means "train this fold with weight w".
std::vector<unsigned> kfold_assign(KfoldScheme scheme, int k, Rng& rng);

// k clones of the prototype advance in lockstep; kfold_assign routes every
// step. Fold runs are independent given the precomputed assignment table and
// may execute on parallel workers; the reduction is ordered by fold index.
KfoldResult run_kfold(const PipelineConfig& config, const StreamSource& source,
                      const OnlinePredictor& prototype, const DriftDetector* detector,
                      const FeatureSelector* selector);

// Chunked index-parallel helper used for folds and for multi-model runs.
// Results must be written to pre-sized, per-index slots.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace streameval
