#pragma once

#include <span>
#include <vector>

#include "streameval/stream/batch.hpp"

namespace streameval {

// Streaming per-feature standardization. Statistics are updated with each
// incoming batch before the batch itself is transformed, so the transform of
// observation t always uses every observation up to and including t.
class OnlineStandardizer {
public:
    OnlineStandardizer() = default;

    // Welford update with every row of the batch.
    void absorb(const Matrix& features);

    // (x - mean) / max(sqrt(population variance), 1e-12), current statistics.
    Matrix transform(const Matrix& features) const;

    // update-then-transform in one call
    Batch absorb_transform(Batch batch) {
        absorb(batch.features);
        batch.features = transform(batch.features);
        return batch;
    }

    long long count() const { return count_; }
    std::span<const double> mean() const { return mean_; }
    std::vector<double> variance() const;  // population variance, 0 when empty

    static constexpr double kStdFloor = 1e-12;

private:
    void ensure_width(std::size_t m) const;

    long long count_ = 0;
    std::vector<double> mean_;
    std::vector<double> m2_;
};

}  // namespace streameval
