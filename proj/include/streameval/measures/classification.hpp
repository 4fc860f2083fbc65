#pragma once

#include <map>
#include <span>
#include <utility>

namespace streameval {

// Per-(true, predicted) class pair counts.
class ConfusionCounts {
public:
    ConfusionCounts() = default;
    ConfusionCounts(std::span<const int> y_true, std::span<const int> y_pred);

    void add(int truth, int predicted, long count = 1);
    long total() const { return total_; }
    long at(int truth, int predicted) const;
    const std::map<std::pair<int, int>, long>& cells() const { return cells_; }

private:
    std::map<std::pair<int, int>, long> cells_;
    long total_ = 0;
};

// fraction of matching positions; throws on empty or mismatched input
double accuracy(std::span<const int> y_true, std::span<const int> y_pred);

inline double zero_one_loss(std::span<const int> y_true, std::span<const int> y_pred) {
    return 1.0 - accuracy(y_true, y_pred);
}

// binary F1 = 2PR / (P + R); any zero denominator yields zero_division
double f1_binary(std::span<const int> y_true, std::span<const int> y_pred,
                 double zero_division = 0.0);

// kappa = (p_o - p_e) / (1 - p_e); 0 when p_e == 1
double cohen_kappa(const ConfusionCounts& counts);

inline double cohen_kappa(std::span<const int> y_true, std::span<const int> y_pred) {
    return cohen_kappa(ConfusionCounts(y_true, y_pred));
}

}  // namespace streameval
