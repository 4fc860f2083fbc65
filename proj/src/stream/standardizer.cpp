#include "streameval/stream/standardizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "streameval/simd/kernels.hpp"

namespace streameval {

void OnlineStandardizer::ensure_width(std::size_t m) const {
    if (!mean_.empty() && mean_.size() != m)
        throw std::invalid_argument("standardizer: batch width mismatch");
}

void OnlineStandardizer::absorb(const Matrix& features) {
    ensure_width(features.cols());
    if (mean_.empty()) {
        mean_.assign(features.cols(), 0.0);
        m2_.assign(features.cols(), 0.0);
    }
    for (std::size_t i = 0; i < features.rows(); ++i) {
        ++count_;
        auto row = features.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double delta = row[j] - mean_[j];
            mean_[j] += delta / static_cast<double>(count_);
            m2_[j] += delta * (row[j] - mean_[j]);
        }
    }
}

std::vector<double> OnlineStandardizer::variance() const {
    std::vector<double> v(m2_.size(), 0.0);
    if (count_ > 0)
        for (std::size_t j = 0; j < m2_.size(); ++j) v[j] = m2_[j] / static_cast<double>(count_);
    return v;
}

Matrix OnlineStandardizer::transform(const Matrix& features) const {
    ensure_width(features.cols());
    if (count_ == 0) throw std::logic_error("standardizer: transform before any update");

    const std::size_t m = features.cols();
    std::vector<double> inv_std(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double sd = std::sqrt(m2_[j] / static_cast<double>(count_));
        inv_std[j] = 1.0 / std::max(sd, kStdFloor);
    }

    Matrix out(features.rows(), m);
    const auto& k = simd::active();
    for (std::size_t i = 0; i < features.rows(); ++i)
        k.standardize(out.row(i).data(), features.row(i).data(), mean_.data(), inv_std.data(), m);
    return out;
}

}  // namespace streameval
