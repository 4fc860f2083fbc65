#include "streameval/selectors/ofs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "streameval/simd/kernels.hpp"

namespace streameval {

Batch apply_selection(Batch batch, const SelectionVector& selection) {
    batch.features = apply_selection(std::move(batch.features), selection);
    return batch;
}

Matrix apply_selection(Matrix features, const SelectionVector& selection) {
    if (features.cols() != selection.width())
        throw std::invalid_argument("apply_selection: width mismatch");
    const auto& k = simd::active();
    for (std::size_t i = 0; i < features.rows(); ++i)
        k.mask(features.row(i).data(), selection.bits.data(), features.cols());
    return features;
}

OfsSelector::OfsSelector(std::size_t n_features, int k, double eta, double lambda)
    : weights_(n_features, 0.0), k_(k), eta_(eta), lambda_(lambda) {
    if (k < 1 || static_cast<std::size_t>(k) > n_features)
        throw std::invalid_argument("ofs: k must satisfy 1 <= k <= n_features");
    if (!(eta > 0.0)) throw std::invalid_argument("ofs: eta must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("ofs: lambda must be > 0");
}

std::vector<std::size_t> OfsSelector::top_magnitude_indices(std::span<const double> w,
                                                            std::size_t n) {
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(w[a]) > std::abs(w[b]);
    });
    idx.resize(std::min(n, idx.size()));
    return idx;
}

SelectionVector OfsSelector::update_select(const Matrix& features,
                                           std::span<const int> labels) {
    if (features.cols() != weights_.size())
        throw std::invalid_argument("ofs: feature width mismatch");
    if (labels.size() != features.rows())
        throw std::invalid_argument("ofs: labels size mismatch");

    const auto& kn = simd::active();
    const double radius = 1.0 / std::sqrt(lambda_);
    for (std::size_t i = 0; i < features.rows(); ++i) {
        if (labels[i] != 0 && labels[i] != 1)
            throw std::invalid_argument("ofs: labels must be binary");
        auto x = features.row(i);
        const double score = kn.dot(weights_.data(), x.data(), x.size());
        const int pred = score > 0.0 ? 1 : 0;
        if (pred == labels[i]) continue;

        const double keep = 1.0 - eta_ * lambda_;
        for (auto& wj : weights_) wj *= keep;
        kn.axpy(weights_.data(), eta_ * (2.0 * labels[i] - 1.0), x.data(), x.size());

        const double norm = std::sqrt(kn.dot(weights_.data(), weights_.data(), weights_.size()));
        if (norm > radius)
            for (auto& wj : weights_) wj *= radius / norm;

        // truncate to the k largest-magnitude coordinates
        const auto keep_idx = top_magnitude_indices(weights_, static_cast<std::size_t>(k_));
        std::vector<double> truncated(weights_.size(), 0.0);
        for (std::size_t j : keep_idx) truncated[j] = weights_[j];
        weights_ = std::move(truncated);
    }
    return current_selection();
}

SelectionVector OfsSelector::current_selection() const {
    SelectionVector sel{std::vector<std::uint8_t>(weights_.size(), 0), k_};
    for (std::size_t j : top_magnitude_indices(weights_, static_cast<std::size_t>(k_)))
        sel.bits[j] = 1;
    return sel;
}

}  // namespace streameval
