#include "streameval/stream/source.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "streameval/rng.hpp"
#include "streameval/simd/kernels.hpp"

namespace streameval {

std::optional<Batch> MaterializedSource::next_batch(std::size_t batch_size) {
    if (batch_size < 1) throw std::invalid_argument("next_batch: batch_size must be >= 1");
    const long total = static_cast<long>(backing_->labels.size());
    if (cursor_ >= total) return std::nullopt;

    const std::size_t n = std::min<std::size_t>(batch_size, total - cursor_);
    Batch b;
    b.step = step_++;
    b.first_index = cursor_;
    b.features = backing_->features.slice_rows(cursor_, n);
    b.labels.assign(backing_->labels.begin() + cursor_, backing_->labels.begin() + cursor_ + n);
    cursor_ += static_cast<long>(n);
    return b;
}

namespace {

std::vector<double> random_unit_vector(Rng& rng, std::size_t m) {
    std::vector<double> v(m);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& x : v) {
            x = rng.normal();
            norm2 += x * x;
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

// v minus its projection on u (u unit length), renormalized
std::vector<double> orthonormal_to(Rng& rng, const std::vector<double>& u) {
    const std::size_t m = u.size();
    std::vector<double> v(m);
    double norm2 = 0.0;
    do {
        v = random_unit_vector(rng, m);
        const double d = simd::scalar_kernels().dot(v.data(), u.data(), m);
        norm2 = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            v[j] -= d * u[j];
            norm2 += v[j] * v[j];
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

}  // namespace

std::unique_ptr<StreamSource> synth_abrupt(std::uint64_t seed, std::size_t n_features,
                                           const DriftSchedule& schedule, long n_total,
                                           double magnitude) {
    if (n_features < 1) throw std::invalid_argument("synth_abrupt: n_features must be >= 1");
    if (n_total < 1) throw std::invalid_argument("synth_abrupt: n_total must be >= 1");
    schedule.validate();
    for (const auto& d : schedule.points)
        if (d.position >= n_total)
            throw std::invalid_argument("synth_abrupt: schedule position beyond stream length");

    Rng rng = Rng::substream(seed, "synth_abrupt");
    auto backing = std::make_shared<MaterializedSource::Backing>();
    backing->features = Matrix(n_total, n_features);
    backing->labels.resize(n_total);
    backing->classes = {0, 1};
    backing->schedule = schedule;
    backing->has_schedule = true;

    std::vector<double> dir = random_unit_vector(rng, n_features);
    double sep = magnitude;
    std::size_t next_drift = 0;

    for (long t = 0; t < n_total; ++t) {
        if (next_drift < schedule.points.size() && t == schedule.points[next_drift].position) {
            // real drift: the labeling direction changes
            dir = random_unit_vector(rng, n_features);
            sep = schedule.points[next_drift].magnitude;
            ++next_drift;
        }
        const int y = rng.bernoulli(0.5) ? 1 : 0;
        const double sign = (y == 1) ? 1.0 : -1.0;
        auto row = backing->features.row(t);
        for (std::size_t j = 0; j < n_features; ++j)
            row[j] = sign * sep * dir[j] + rng.normal();
        backing->labels[t] = y;
    }
    return std::make_unique<MaterializedSource>(std::move(backing));
}

std::unique_ptr<StreamSource> synth_hyperplane(std::uint64_t seed, std::size_t n_features,
                                               double rotation_rate, long n_total,
                                               const DriftSchedule& schedule) {
    if (n_features < 2) throw std::invalid_argument("synth_hyperplane: n_features must be >= 2");
    if (n_total < 1) throw std::invalid_argument("synth_hyperplane: n_total must be >= 1");
    if (rotation_rate < 0.0)
        throw std::invalid_argument("synth_hyperplane: rotation_rate must be >= 0");
    schedule.validate();
    for (const auto& d : schedule.points)
        if (d.position >= n_total)
            throw std::invalid_argument("synth_hyperplane: schedule position beyond stream length");

    Rng rng = Rng::substream(seed, "synth_hyperplane");
    auto backing = std::make_shared<MaterializedSource::Backing>();
    backing->features = Matrix(n_total, n_features);
    backing->labels.resize(n_total);
    backing->classes = {0, 1};
    backing->schedule = schedule;
    backing->has_schedule = true;

    // the normal lives in the plane spanned by u, v: n(theta) = cos(theta) u + sin(theta) v
    const std::vector<double> u = random_unit_vector(rng, n_features);
    const std::vector<double> v = orthonormal_to(rng, u);
    double theta = 0.0;
    long rotate_until = -1;  // exclusive end of the active gradual interval
    std::size_t next_drift = 0;

    std::vector<double> normal(n_features);
    const auto& k = simd::scalar_kernels();
    for (long t = 0; t < n_total; ++t) {
        if (next_drift < schedule.points.size() && t == schedule.points[next_drift].position) {
            const auto& d = schedule.points[next_drift];
            if (d.kind == DriftKind::gradual && rotation_rate > 0.0) {
                const long span = static_cast<long>(std::ceil(d.magnitude / rotation_rate));
                rotate_until = t + span;
            }
            ++next_drift;
        }
        if (t < rotate_until) theta += rotation_rate;
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t j = 0; j < n_features; ++j) normal[j] = c * u[j] + s * v[j];

        auto row = backing->features.row(t);
        for (std::size_t j = 0; j < n_features; ++j) row[j] = rng.normal();
        const double score = k.dot(normal.data(), row.data(), n_features);
        backing->labels[t] = score > 0.0 ? 1 : 0;
    }
    return std::make_unique<MaterializedSource>(std::move(backing));
}

}  // namespace streameval
