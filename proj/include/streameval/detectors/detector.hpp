#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace streameval {

// Active concept-drift detector fed with a per-observation signal (the
// pipelines feed the predictor's 0/1 test error). update() returns true on
// alarm and records the supplied step in the detection log.
class DriftDetector {
public:
    virtual ~DriftDetector() = default;

    bool update(double value, long step) {
        const bool alarm = update_impl(value);
        if (alarm) {
            if (!detections_.empty() && step <= detections_.back())
                throw std::logic_error("detector: steps must be strictly increasing");
            detections_.push_back(step);
        }
        ++samples_;
        return alarm;
    }

    // convenience for tests: step = running sample count
    bool update(double value) { return update(value, samples_); }

    // fresh state, hyperparameters kept, detection log cleared
    void reset() {
        reset_impl();
        detections_.clear();
        samples_ = 0;
    }

    virtual std::unique_ptr<DriftDetector> clone_fresh() const = 0;
    virtual std::string name() const = 0;

    const std::vector<long>& detections() const { return detections_; }

protected:
    virtual bool update_impl(double value) = 0;
    virtual void reset_impl() = 0;

private:
    std::vector<long> detections_;
    long samples_ = 0;
};

}  // namespace streameval
