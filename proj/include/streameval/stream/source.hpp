#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "streameval/stream/batch.hpp"

namespace streameval {

// Pull-based, single-consumer source of batches. Implementations must replay
// bit-identically after reset().
class StreamSource {
public:
    virtual ~StreamSource() = default;

    // Up to batch_size observations; std::nullopt at end of stream.
    virtual std::optional<Batch> next_batch(std::size_t batch_size) = 0;

    virtual void reset() = 0;
    virtual std::size_t n_features() const = 0;
    virtual std::vector<int> classes() const = 0;
    virtual std::optional<long> length() const = 0;  // nullopt = unbounded
    virtual const DriftSchedule* schedule() const { return nullptr; }

    // Fresh copy positioned at the start (shares immutable backing data).
    virtual std::unique_ptr<StreamSource> clone_fresh() const = 0;
};

// In-memory source over a fully materialized stream. Both the CSV loader and
// the synthetic generators produce one of these; generators emit one
// observation per internal time step and batching is a view on top.
class MaterializedSource final : public StreamSource {
public:
    struct Backing {
        Matrix features;
        std::vector<int> labels;
        std::vector<int> classes;
        DriftSchedule schedule;
        bool has_schedule = false;
    };

    explicit MaterializedSource(std::shared_ptr<const Backing> backing)
        : backing_(std::move(backing)) {}

    std::optional<Batch> next_batch(std::size_t batch_size) override;
    void reset() override {
        cursor_ = 0;
        step_ = 0;
    }
    std::size_t n_features() const override { return backing_->features.cols(); }
    std::vector<int> classes() const override { return backing_->classes; }
    std::optional<long> length() const override {
        return static_cast<long>(backing_->labels.size());
    }
    const DriftSchedule* schedule() const override {
        return backing_->has_schedule ? &backing_->schedule : nullptr;
    }
    std::unique_ptr<StreamSource> clone_fresh() const override {
        return std::make_unique<MaterializedSource>(backing_);
    }

private:
    std::shared_ptr<const Backing> backing_;
    long cursor_ = 0;
    long step_ = 0;
};

// Loads a CSV file (comma-separated, decimal-point floats, optional single
// header row). target_col selects the label column, negative counts from the
// end. Labels are coerced to dense integer class ids via sorted distinct
// values.
std::unique_ptr<StreamSource> csv_open(const std::string& path, int target_col,
                                       bool has_header);

// Binary-class Gaussian stream whose class-conditional means sit at
// +/- magnitude along a random unit direction. At every abrupt schedule
// position the direction is re-drawn, which changes P(Y|X).
std::unique_ptr<StreamSource> synth_abrupt(std::uint64_t seed, std::size_t n_features,
                                           const DriftSchedule& schedule, long n_total,
                                           double magnitude = 3.0);

// Labels are the side of a hyperplane through the origin. The normal rotates
// by rotation_rate radians per step, but only inside gradual-drift intervals;
// an interval at position p with magnitude g spans ceil(g / rotation_rate)
// steps, i.e. g is the total rotation angle of that drift.
std::unique_ptr<StreamSource> synth_hyperplane(std::uint64_t seed, std::size_t n_features,
                                               double rotation_rate, long n_total,
                                               const DriftSchedule& schedule);

}  // namespace streameval
