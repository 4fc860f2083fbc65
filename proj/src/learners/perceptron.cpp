#include "streameval/learners/perceptron.hpp"

#include <stdexcept>

#include "streameval/simd/kernels.hpp"

namespace streameval {

Perceptron::Perceptron(std::size_t n_features, double learning_rate)
    : weights_(n_features, 0.0), learning_rate_(learning_rate) {
    if (n_features < 1) throw std::invalid_argument("perceptron: n_features must be >= 1");
    if (!(learning_rate > 0.0))
        throw std::invalid_argument("perceptron: learning_rate must be > 0");
}

int Perceptron::predict_row(std::span<const double> x) const {
    const double score = simd::active().dot(weights_.data(), x.data(), x.size()) + bias_;
    return score > 0.0 ? 1 : 0;
}

std::vector<int> Perceptron::predict(const Matrix& features) const {
    check_width(features, weights_.size());
    std::vector<int> out(features.rows());
    for (std::size_t i = 0; i < features.rows(); ++i) out[i] = predict_row(features.row(i));
    return out;
}

void Perceptron::partial_fit(const Matrix& features, std::span<const int> labels,
                             std::span<const unsigned> weights) {
    check_width(features, weights_.size());
    if (labels.size() != features.rows() || weights.size() != features.rows())
        throw std::invalid_argument("perceptron: labels/weights size mismatch");
    const auto& k = simd::active();
    for (std::size_t i = 0; i < features.rows(); ++i) {
        if (labels[i] != 0 && labels[i] != 1)
            throw std::invalid_argument("perceptron: labels must be binary");
        auto x = features.row(i);
        for (unsigned rep = 0; rep < weights[i]; ++rep) {
            if (predict_row(x) == labels[i]) continue;
            const double step = learning_rate_ * (2.0 * labels[i] - 1.0);
            k.axpy(weights_.data(), step, x.data(), x.size());
            bias_ += step;
        }
    }
}

void Perceptron::reset() {
    weights_.assign(weights_.size(), 0.0);
    bias_ = 0.0;
}

std::uint64_t Perceptron::state_hash() const {
    std::uint64_t h = hash_bytes(weights_.data(), weights_.size() * sizeof(double));
    h = hash_bytes(&bias_, sizeof(bias_), h);
    return h;
}

}  // namespace streameval
