#pragma once

#include "streameval/learners/predictor.hpp"

namespace streameval {

// Binary perceptron with the classic misclassification-driven update:
// on a wrong prediction, w += lr * (2y - 1) * x and b += lr * (2y - 1).
// Scores of exactly zero predict class 0 (ties break toward the lowest id).
class Perceptron final : public OnlinePredictor {
public:
    Perceptron(std::size_t n_features, double learning_rate = 1.0);

    std::vector<int> predict(const Matrix& features) const override;
    void partial_fit(const Matrix& features, std::span<const int> labels,
                     std::span<const unsigned> weights) override;
    using OnlinePredictor::partial_fit;
    void reset() override;
    std::unique_ptr<OnlinePredictor> clone() const override {
        return std::make_unique<Perceptron>(*this);
    }
    std::string name() const override { return "perceptron"; }
    std::size_t width() const override { return weights_.size(); }
    std::uint64_t state_hash() const override;

    double learning_rate() const { return learning_rate_; }
    std::span<const double> weights() const { return weights_; }
    double bias() const { return bias_; }

private:
    int predict_row(std::span<const double> x) const;

    std::vector<double> weights_;
    double bias_ = 0.0;
    double learning_rate_;
};

}  // namespace streameval
