#pragma once

#include "streameval/selectors/selector.hpp"

namespace streameval {

// Online feature selection via truncated gradient descent. For every
// misclassified row (linear rule w·x > 0 vs binary label):
//   w <- (1 - eta * lambda) * w + eta * (2y - 1) * x
// then w is projected onto the L2 ball of radius 1 / sqrt(lambda) and all but
// the k largest-magnitude entries are zeroed. The selection marks the k
// largest-|w| indices, ties broken toward the lower index.
class OfsSelector final : public FeatureSelector {
public:
    OfsSelector(std::size_t n_features, int k, double eta = 0.2, double lambda = 0.01);

    SelectionVector update_select(const Matrix& features, std::span<const int> labels) override;
    SelectionVector current_selection() const override;
    void reset() override { weights_.assign(weights_.size(), 0.0); }
    std::unique_ptr<FeatureSelector> clone() const override {
        return std::make_unique<OfsSelector>(*this);
    }
    std::string name() const override { return "ofs"; }
    int k() const override { return k_; }
    std::size_t width() const override { return weights_.size(); }

    std::span<const double> weights() const { return weights_; }

    // indices of the n largest-|w| entries, lower index wins ties
    static std::vector<std::size_t> top_magnitude_indices(std::span<const double> w,
                                                          std::size_t n);

private:
    std::vector<double> weights_;
    int k_;
    double eta_;
    double lambda_;
};

}  // namespace streameval
