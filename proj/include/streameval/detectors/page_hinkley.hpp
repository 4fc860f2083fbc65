#pragma once

#include "streameval/detectors/detector.hpp"

namespace streameval {

// Page-Hinkley test for an upward shift of the input mean. After updating the
// running mean x̄, the cumulative statistic advances by value - x̄ - delta and
// its running minimum is tracked; an alarm fires once the gap exceeds lambda
// (after min_instances warm-up samples) and resets the statistics.
class PageHinkley final : public DriftDetector {
public:
    explicit PageHinkley(double delta = 0.005, double lambda = 50.0, long min_instances = 30)
        : delta_(delta), lambda_(lambda), min_instances_(min_instances) {}

    std::unique_ptr<DriftDetector> clone_fresh() const override {
        return std::make_unique<PageHinkley>(delta_, lambda_, min_instances_);
    }
    std::string name() const override { return "page_hinkley"; }

    double delta() const { return delta_; }
    double lambda() const { return lambda_; }
    long min_instances() const { return min_instances_; }
    double statistic() const { return cumulative_; }
    double statistic_min() const { return minimum_; }

protected:
    bool update_impl(double value) override;
    void reset_impl() override;

private:
    double delta_;
    double lambda_;
    long min_instances_;

    long count_ = 0;
    double mean_ = 0.0;
    double cumulative_ = 0.0;  // m
    double minimum_ = 0.0;     // M = min over time of m
};

}  // namespace streameval
