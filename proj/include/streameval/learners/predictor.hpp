#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "streameval/matrix.hpp"

namespace streameval {

// Black-box online classifier contract. predict never mutates state; reset
// returns the model to its freshly constructed state; clone carries full
// state so instances can run independently (e.g. one per fold).
class OnlinePredictor {
public:
    virtual ~OnlinePredictor() = default;

    virtual std::vector<int> predict(const Matrix& features) const = 0;

    // weights[i] == k applies row i exactly k times in sequence; weight 0 is a no-op
    virtual void partial_fit(const Matrix& features, std::span<const int> labels,
                             std::span<const unsigned> weights) = 0;

    void partial_fit(const Matrix& features, std::span<const int> labels) {
        const std::vector<unsigned> ones(labels.size(), 1u);
        partial_fit(features, labels, ones);
    }

    virtual void reset() = 0;
    virtual std::unique_ptr<OnlinePredictor> clone() const = 0;
    virtual std::string name() const = 0;
    virtual std::size_t width() const = 0;

    // FNV-1a over the serialized state; used by purity and reset tests
    virtual std::uint64_t state_hash() const = 0;

protected:
    static std::uint64_t hash_bytes(const void* data, std::size_t n,
                                    std::uint64_t h = 0xcbf29ce484222325ULL) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
        return h;
    }
    static void check_width(const Matrix& features, std::size_t expected) {
        if (features.cols() != expected)
            throw std::invalid_argument("predictor: feature width mismatch");
    }
};

}  // namespace streameval
