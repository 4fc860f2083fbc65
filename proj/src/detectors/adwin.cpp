#include "streameval/detectors/adwin.hpp"

#include <cmath>
#include <stdexcept>

namespace streameval {

bool AdwinDetector::update_impl(double value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("adwin: value must lie in [0, 1]");
    insert(value);
    compress();
    return drop_oldest_while_cut();
}

void AdwinDetector::insert(double value) {
    if (rows_.empty()) rows_.emplace_back();
    rows_[0].push_back(value);
    ++width_;
    total_ += value;
}

void AdwinDetector::compress() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() <= static_cast<std::size_t>(max_buckets_)) break;
        // merge the two oldest buckets of this row into one bucket of the next
        const double merged = rows_[i].front() + *(rows_[i].begin() + 1);
        rows_[i].pop_front();
        rows_[i].pop_front();
        if (i + 1 == rows_.size()) rows_.emplace_back();
        // every existing bucket of row i+1 is older, so the merged one goes last
        rows_[i + 1].push_back(merged);
    }
}

void AdwinDetector::drop_oldest_bucket() {
    for (std::size_t i = rows_.size(); i-- > 0;) {
        if (rows_[i].empty()) continue;
        width_ -= 1L << i;
        total_ -= rows_[i].front();
        rows_[i].pop_front();
        return;
    }
}

bool AdwinDetector::drop_oldest_while_cut() {
    bool dropped_any = false;
    bool again = true;
    while (again && width_ >= 2) {
        again = false;
        const double log_term = std::log(4.0 * static_cast<double>(width_) / delta_);
        long n0 = 0;
        double s0 = 0.0;
        // walk bucket boundaries from the oldest end
        for (std::size_t i = rows_.size(); i-- > 0 && !again;) {
            for (const double sum : rows_[i]) {
                n0 += 1L << i;
                s0 += sum;
                const long n1 = width_ - n0;
                if (n1 <= 0) break;
                const double mu0 = s0 / static_cast<double>(n0);
                const double mu1 = (total_ - s0) / static_cast<double>(n1);
                const double harmonic =
                    1.0 / (1.0 / static_cast<double>(n0) + 1.0 / static_cast<double>(n1));
                const double eps = std::sqrt(log_term / (2.0 * harmonic));
                if (std::abs(mu0 - mu1) > eps) {
                    drop_oldest_bucket();
                    dropped_any = true;
                    again = true;
                    break;
                }
            }
        }
    }
    return dropped_any;
}

void AdwinDetector::reset_impl() {
    rows_.clear();
    width_ = 0;
    total_ = 0.0;
}

}  // namespace streameval
