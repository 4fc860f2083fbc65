#pragma once

#include "streameval/learners/predictor.hpp"

namespace streameval {

// Gaussian naive Bayes over a fixed class set. Per-class per-feature mean and
// variance are maintained with streaming Welford updates; sample weight k is
// applied as k sequential updates so weighted and repeated fits are
// bit-identical.
class GaussianNB final : public OnlinePredictor {
public:
    GaussianNB(std::size_t n_features, std::vector<int> classes);

    std::vector<int> predict(const Matrix& features) const override;
    void partial_fit(const Matrix& features, std::span<const int> labels,
                     std::span<const unsigned> weights) override;
    using OnlinePredictor::partial_fit;
    void reset() override;
    std::unique_ptr<OnlinePredictor> clone() const override {
        return std::make_unique<GaussianNB>(*this);
    }
    std::string name() const override { return "gaussian_nb"; }
    std::size_t width() const override { return n_features_; }
    std::uint64_t state_hash() const override;

    long long class_count(int class_id) const;
    std::vector<double> class_mean(int class_id) const;
    std::vector<double> class_variance(int class_id) const;  // population variance

    static constexpr double kVarFloor = 1e-9;

private:
    int class_index(int class_id) const;

    std::size_t n_features_;
    std::vector<int> classes_;            // ascending
    std::vector<long long> counts_;       // per class
    std::vector<std::vector<double>> mean_, m2_;  // per class, per feature
};

}  // namespace streameval
