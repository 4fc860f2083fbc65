#include "streameval/detectors/page_hinkley.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streameval {

bool PageHinkley::update_impl(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("page_hinkley: value must be finite");

    ++count_;
    mean_ += (value - mean_) / static_cast<double>(count_);
    cumulative_ += value - mean_ - delta_;
    minimum_ = std::min(minimum_, cumulative_);

    if (count_ >= min_instances_ && cumulative_ - minimum_ > lambda_) {
        reset_impl();
        return true;
    }
    return false;
}

void PageHinkley::reset_impl() {
    count_ = 0;
    mean_ = 0.0;
    cumulative_ = 0.0;
    minimum_ = 0.0;
}

}  // namespace streameval
