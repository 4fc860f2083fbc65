#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "streameval/matrix.hpp"

namespace streameval {

// One time step's worth of observations.
struct Batch {
    long step = 0;         // index of the next_batch call that produced it
    long first_index = 0;  // global index of the first observation
    Matrix features;
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }

    void validate() const {
        if (labels.empty() || features.rows() != labels.size())
            throw std::invalid_argument("batch: feature rows must equal label count and be >= 1");
    }

    bool operator==(const Batch&) const = default;
};

enum class DriftKind { abrupt, gradual };

struct DriftPoint {
    long position = 0;
    DriftKind kind = DriftKind::abrupt;
    double magnitude = 1.0;
};

// Ground-truth drift positions of a synthetic stream (or supplied for a real
// data set). Positions are global observation indices.
struct DriftSchedule {
    std::vector<DriftPoint> points;

    bool empty() const { return points.empty(); }

    std::vector<long> positions() const {
        std::vector<long> p;
        p.reserve(points.size());
        for (const auto& d : points) p.push_back(d.position);
        return p;
    }

    void validate() const {
        long prev = 0;
        for (const auto& d : points) {
            if (d.position < 1)
                throw std::invalid_argument("drift schedule: positions must be >= 1");
            if (prev != 0 && d.position <= prev)
                throw std::invalid_argument("drift schedule: positions must be strictly increasing");
            if (!(d.magnitude > 0.0))
                throw std::invalid_argument("drift schedule: magnitudes must be > 0");
            prev = d.position;
        }
    }
};

}  // namespace streameval
