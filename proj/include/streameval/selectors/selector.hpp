#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "streameval/stream/batch.hpp"

namespace streameval {

// Binary active-feature vector a_t with exactly k ones.
struct SelectionVector {
    std::vector<std::uint8_t> bits;
    int k = 0;

    std::size_t width() const { return bits.size(); }

    void validate() const {
        const long ones = std::accumulate(bits.begin(), bits.end(), 0L);
        if (ones != k || k < 1 || static_cast<std::size_t>(k) > bits.size())
            throw std::logic_error("selection vector: bit count must equal k, 1 <= k <= m");
    }

    static SelectionVector all_of(std::size_t m) {
        return {std::vector<std::uint8_t>(m, 1), static_cast<int>(m)};
    }

    bool operator==(const SelectionVector&) const = default;
};

// Online feature selector contract: consume a (raw, unmasked) batch, update
// internal weights, return the current active-feature vector.
class FeatureSelector {
public:
    virtual ~FeatureSelector() = default;

    virtual SelectionVector update_select(const Matrix& features,
                                          std::span<const int> labels) = 0;
    virtual SelectionVector current_selection() const = 0;
    virtual void reset() = 0;
    virtual std::unique_ptr<FeatureSelector> clone() const = 0;
    virtual std::string name() const = 0;
    virtual int k() const = 0;
    virtual std::size_t width() const = 0;
};

// Zero out the columns a selection leaves inactive. Width is preserved so
// downstream predictors keep a fixed input dimension.
Batch apply_selection(Batch batch, const SelectionVector& selection);
Matrix apply_selection(Matrix features, const SelectionVector& selection);

}  // namespace streameval
