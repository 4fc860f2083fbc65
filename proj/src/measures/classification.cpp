#include "streameval/measures/classification.hpp"

#include <set>
#include <stdexcept>

#include "streameval/simd/kernels.hpp"

namespace streameval {

ConfusionCounts::ConfusionCounts(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.size() != y_pred.size())
        throw std::invalid_argument("confusion: prediction length mismatch");
    for (std::size_t i = 0; i < y_true.size(); ++i) add(y_true[i], y_pred[i]);
}

void ConfusionCounts::add(int truth, int predicted, long count) {
    cells_[{truth, predicted}] += count;
    total_ += count;
}

long ConfusionCounts::at(int truth, int predicted) const {
    const auto it = cells_.find({truth, predicted});
    return it == cells_.end() ? 0 : it->second;
}

double accuracy(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.empty()) throw std::invalid_argument("accuracy: empty input");
    if (y_true.size() != y_pred.size())
        throw std::invalid_argument("accuracy: prediction length mismatch");
    const std::size_t matches =
        simd::active().count_equal(y_true.data(), y_pred.data(), y_true.size());
    return static_cast<double>(matches) / static_cast<double>(y_true.size());
}

double f1_binary(std::span<const int> y_true, std::span<const int> y_pred,
                 double zero_division) {
    if (y_true.empty()) throw std::invalid_argument("f1: empty input");
    if (y_true.size() != y_pred.size())
        throw std::invalid_argument("f1: prediction length mismatch");
    long tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i], p = y_pred[i];
        if ((t != 0 && t != 1) || (p != 0 && p != 1))
            throw std::invalid_argument("f1: labels must be binary");
        if (p == 1 && t == 1) ++tp;
        if (p == 1 && t == 0) ++fp;
        if (p == 0 && t == 1) ++fn;
    }
    if (tp + fp == 0 || tp + fn == 0) return zero_division;
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (precision + recall == 0.0) return zero_division;
    return 2.0 * precision * recall / (precision + recall);
}

double cohen_kappa(const ConfusionCounts& counts) {
    const long total = counts.total();
    if (total < 1) throw std::invalid_argument("kappa: empty counts");

    std::set<int> classes;
    for (const auto& [cell, _] : counts.cells()) {
        classes.insert(cell.first);
        classes.insert(cell.second);
    }

    double observed = 0.0, expected = 0.0;
    const double n = static_cast<double>(total);
    for (int c : classes) {
        observed += static_cast<double>(counts.at(c, c)) / n;
        long row = 0, col = 0;
        for (int d : classes) {
            row += counts.at(c, d);
            col += counts.at(d, c);
        }
        expected += (static_cast<double>(row) / n) * (static_cast<double>(col) / n);
    }
    if (expected >= 1.0) return 0.0;
    return (observed - expected) / (1.0 - expected);
}

}  // namespace streameval
