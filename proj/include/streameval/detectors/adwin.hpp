#pragma once

#include <deque>
#include <vector>

#include "streameval/detectors/detector.hpp"

namespace streameval {

// Adaptive sliding window over values in [0, 1]. The window is kept as an
// exponential histogram: row i holds buckets that each summarize 2^i values
// (sum only; sizes are implicit), at most max_buckets per row, oldest first
// within a row and older rows above. Once per update every bucket-boundary
// split of the window is tested and the oldest bucket is dropped while the
// subwindow means differ by more than the adaptive cut threshold.
class AdwinDetector final : public DriftDetector {
public:
    explicit AdwinDetector(double delta = 0.002, int max_buckets = 5)
        : delta_(delta), max_buckets_(max_buckets) {}

    std::unique_ptr<DriftDetector> clone_fresh() const override {
        return std::make_unique<AdwinDetector>(delta_, max_buckets_);
    }
    std::string name() const override { return "adwin"; }

    double delta() const { return delta_; }
    long width() const { return width_; }
    double mean() const { return width_ > 0 ? total_ / static_cast<double>(width_) : 0.0; }

protected:
    bool update_impl(double value) override;
    void reset_impl() override;

private:
    void insert(double value);
    void compress();
    bool drop_oldest_while_cut();  // true if anything was dropped
    void drop_oldest_bucket();

    double delta_;
    int max_buckets_;

    // rows_[i]: sums of buckets holding 2^i values each; front() is oldest
    std::vector<std::deque<double>> rows_;
    long width_ = 0;
    double total_ = 0.0;
};

}  // namespace streameval
