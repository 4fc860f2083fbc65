#include "streameval/measures/stability.hpp"

#include <stdexcept>

#include "streameval/simd/kernels.hpp"

namespace streameval {

double noise_variability(const OnlinePredictor& model, const Batch& batch,
                         const BatchLoss& loss, double noise_std, int n_samples,
                         Rng& rng) {
    if (n_samples < 1) throw std::invalid_argument("noise_variability: n_samples must be >= 1");
    if (batch.features.cols() != model.width())
        throw std::invalid_argument("noise_variability: feature width mismatch");

    const double base = loss(batch.labels, model.predict(batch.features));

    const std::size_t rows = batch.features.rows();
    const std::size_t cols = batch.features.cols();
    Matrix perturbed(rows, cols);
    std::vector<double> noise(cols);
    const auto& k = simd::active();

    double acc = 0.0;
    for (int n = 0; n < n_samples; ++n) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (auto& z : noise) z = rng.normal();
            k.add_scaled(perturbed.row(i).data(), batch.features.row(i).data(), noise_std,
                         noise.data(), cols);
        }
        acc += loss(batch.labels, model.predict(perturbed)) - base;
    }
    return acc / static_cast<double>(n_samples);
}

std::optional<double> feature_set_stability(std::span<const SelectionVector> window) {
    if (window.size() < 2)
        throw std::invalid_argument("fss: window must contain at least two selections");
    const std::size_t m = window.front().width();
    const int k = window.front().k;
    for (const auto& sel : window) {
        if (sel.width() != m) throw std::invalid_argument("fss: mixed widths in window");
        if (sel.k != k) throw std::invalid_argument("fss: mixed k across window");
    }
    if (k == 0 || static_cast<std::size_t>(k) == m) return std::nullopt;

    const double w = static_cast<double>(window.size());
    double total_variance = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double ones = 0.0;
        for (const auto& sel : window) ones += sel.bits[j];
        const double p = ones / w;
        total_variance += (w / (w - 1.0)) * p * (1.0 - p);
    }
    const double km = static_cast<double>(k) / static_cast<double>(m);
    return 1.0 - (total_variance / static_cast<double>(m)) / (km * (1.0 - km));
}

double reduction_rate(int k, int m) {
    if (k < 1 || k > m) throw std::invalid_argument("reduction_rate: requires 1 <= k <= m");
    return static_cast<double>(m - k) / static_cast<double>(m);
}

}  // namespace streameval
