#include "streameval/learners/gaussian_nb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace streameval {

GaussianNB::GaussianNB(std::size_t n_features, std::vector<int> classes)
    : n_features_(n_features), classes_(std::move(classes)) {
    if (n_features_ < 1) throw std::invalid_argument("gaussian_nb: n_features must be >= 1");
    if (classes_.empty()) throw std::invalid_argument("gaussian_nb: class set must be non-empty");
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    counts_.assign(classes_.size(), 0);
    mean_.assign(classes_.size(), std::vector<double>(n_features_, 0.0));
    m2_.assign(classes_.size(), std::vector<double>(n_features_, 0.0));
}

int GaussianNB::class_index(int class_id) const {
    const auto it = std::lower_bound(classes_.begin(), classes_.end(), class_id);
    if (it == classes_.end() || *it != class_id)
        throw std::invalid_argument("gaussian_nb: unknown class id " + std::to_string(class_id));
    return static_cast<int>(it - classes_.begin());
}

std::vector<int> GaussianNB::predict(const Matrix& features) const {
    check_width(features, n_features_);
    const long long total = std::accumulate(counts_.begin(), counts_.end(), 0LL);

    std::vector<int> out(features.rows());
    for (std::size_t i = 0; i < features.rows(); ++i) {
        if (total == 0) {
            out[i] = classes_.front();
            continue;
        }
        auto x = features.row(i);
        double best = -std::numeric_limits<double>::infinity();
        int best_class = classes_.front();
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            if (counts_[c] == 0) continue;
            double log_p = std::log(static_cast<double>(counts_[c]) / static_cast<double>(total));
            for (std::size_t j = 0; j < n_features_; ++j) {
                const double var =
                    std::max(m2_[c][j] / static_cast<double>(counts_[c]), kVarFloor);
                const double d = x[j] - mean_[c][j];
                log_p -= 0.5 * (std::log(2.0 * std::numbers::pi * var) + d * d / var);
            }
            if (log_p > best) {  // strict: ties stay with the lowest class id
                best = log_p;
                best_class = classes_[c];
            }
        }
        out[i] = best_class;
    }
    return out;
}

void GaussianNB::partial_fit(const Matrix& features, std::span<const int> labels,
                             std::span<const unsigned> weights) {
    check_width(features, n_features_);
    if (labels.size() != features.rows() || weights.size() != features.rows())
        throw std::invalid_argument("gaussian_nb: labels/weights size mismatch");
    for (std::size_t i = 0; i < features.rows(); ++i) {
        const int c = class_index(labels[i]);
        auto x = features.row(i);
        for (unsigned rep = 0; rep < weights[i]; ++rep) {
            ++counts_[c];
            const double n = static_cast<double>(counts_[c]);
            for (std::size_t j = 0; j < n_features_; ++j) {
                const double delta = x[j] - mean_[c][j];
                mean_[c][j] += delta / n;
                m2_[c][j] += delta * (x[j] - mean_[c][j]);
            }
        }
    }
}

void GaussianNB::reset() {
    counts_.assign(classes_.size(), 0);
    for (auto& v : mean_) v.assign(n_features_, 0.0);
    for (auto& v : m2_) v.assign(n_features_, 0.0);
}

long long GaussianNB::class_count(int class_id) const { return counts_[class_index(class_id)]; }

std::vector<double> GaussianNB::class_mean(int class_id) const {
    return mean_[class_index(class_id)];
}

std::vector<double> GaussianNB::class_variance(int class_id) const {
    const int c = class_index(class_id);
    std::vector<double> v(n_features_, 0.0);
    if (counts_[c] > 0)
        for (std::size_t j = 0; j < n_features_; ++j)
            v[j] = m2_[c][j] / static_cast<double>(counts_[c]);
    return v;
}

std::uint64_t GaussianNB::state_hash() const {
    std::uint64_t h = hash_bytes(counts_.data(), counts_.size() * sizeof(long long));
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        h = hash_bytes(mean_[c].data(), mean_[c].size() * sizeof(double), h);
        h = hash_bytes(m2_[c].data(), m2_[c].size() * sizeof(double), h);
    }
    return h;
}

}  // namespace streameval
