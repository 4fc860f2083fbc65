#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace streameval {

// One fading-factor step: S' = value + alpha * S, N' = 1 + alpha * N,
// estimate = S' / N'. alpha == 1 reduces to the running mean.
struct FadingState {
    double s = 0.0;
    double n = 0.0;
};

inline double fading_update(FadingState& state, double value, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("fading: alpha must lie in (0, 1]");
    state.s = value + alpha * state.s;
    state.n = 1.0 + alpha * state.n;
    return state.s / state.n;
}

// FIFO window capped at w values; returns the mean of the retained values.
inline double window_update(std::deque<double>& buffer, double value, std::size_t w) {
    if (w < 1) throw std::invalid_argument("window: size must be >= 1");
    buffer.push_back(value);
    if (buffer.size() > w) buffer.pop_front();
    double sum = 0.0;
    for (double v : buffer) sum += v;
    return sum / static_cast<double>(buffer.size());
}

// Raw per-step values of one measure together with their sliding-window and
// fading-factor aggregates.
class MeasureSeries {
public:
    MeasureSeries() = default;
    MeasureSeries(std::string id, bool lower_better, std::size_t window, double alpha)
        : id_(std::move(id)), lower_better_(lower_better), window_(window), alpha_(alpha) {}

    void push(double raw_value) {
        raw_.push_back(raw_value);
        windowed_.push_back(window_update(buffer_, raw_value, window_));
        faded_.push_back(fading_update(fading_, raw_value, alpha_));
    }

    const std::string& id() const { return id_; }
    bool lower_better() const { return lower_better_; }
    const std::vector<double>& raw() const { return raw_; }
    const std::vector<double>& windowed() const { return windowed_; }
    const std::vector<double>& faded() const { return faded_; }
    std::size_t size() const { return raw_.size(); }
    bool empty() const { return raw_.empty(); }

    double mean_raw() const {
        double sum = 0.0;
        for (double v : raw_) sum += v;
        return raw_.empty() ? 0.0 : sum / static_cast<double>(raw_.size());
    }

private:
    std::string id_;
    bool lower_better_ = false;
    std::size_t window_ = 25;
    double alpha_ = 0.99;
    std::deque<double> buffer_;
    FadingState fading_;
    std::vector<double> raw_, windowed_, faded_;
};

}  // namespace streameval
