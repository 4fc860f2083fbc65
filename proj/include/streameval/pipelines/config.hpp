#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace streameval {

enum class PipelineKind { prequential, holdout, kfold };
enum class KfoldScheme { cross, split, bootstrap };

// Declarative description of one evaluation run. The JSON front end fills
// this in; defaults here are the documented config defaults.
struct PipelineConfig {
    PipelineKind kind = PipelineKind::prequential;

    std::size_t batch_size = 1;
    long n_pretrain = 0;
    bool standardize = false;

    // periodic holdout
    long test_interval = 1;  // e: training steps between test events
    long holdout_size = 100;  // h

    // distributed k-fold
    int k = 10;
    KfoldScheme scheme = KfoldScheme::cross;

    // aggregation of per-step measures
    std::size_t window = 25;  // w_agg
    double fading = 0.99;     // alpha

    // noise variability
    double noise_std = 1.0;
    int noise_samples = 15;

    // ground truth for drift measures
    std::vector<long> known_drifts;  // observation indices
    long tolerance = 500;            // W for detection measures, in observations
    long drift_window = 25;          // W for dpd/drt, in scored steps

    std::size_t fss_window = 2;
    bool reset_after_drift = false;

    // loss used by noise_variability, dpd and drt
    std::string reference_measure = "zero_one";
    double zero_division = 0.0;

    std::vector<std::string> measures;

    int workers = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (batch_size < 1) throw std::invalid_argument("pipeline: batch_size must be >= 1");
        if (n_pretrain < 0) throw std::invalid_argument("pipeline: n_pretrain must be >= 0");
        if (kind == PipelineKind::holdout) {
            if (test_interval < 1)
                throw std::invalid_argument("pipeline: test_interval must be >= 1");
            if (holdout_size < 1)
                throw std::invalid_argument("pipeline: holdout_size must be >= 1");
        }
        if (kind == PipelineKind::kfold && k < 2)
            throw std::invalid_argument("pipeline: k must be >= 2");
        if (window < 1) throw std::invalid_argument("pipeline: window must be >= 1");
        if (!(fading > 0.0 && fading <= 1.0))
            throw std::invalid_argument("pipeline: fading must lie in (0, 1]");
        if (noise_samples < 1)
            throw std::invalid_argument("pipeline: noise_samples must be >= 1");
        if (fss_window < 2) throw std::invalid_argument("pipeline: fss_window must be >= 2");
        if (drift_window < 1) throw std::invalid_argument("pipeline: drift_window must be >= 1");
        if (tolerance < 0) throw std::invalid_argument("pipeline: tolerance must be >= 0");
        if (workers < 1) throw std::invalid_argument("pipeline: workers must be >= 1");
    }
};

}  // namespace streameval
