#pragma once

#include <optional>
#include <vector>

namespace streameval {

// Known drifts T_d and detected drifts T̂_d, both as strictly increasing step
// indices, with the tolerance window W: a detection t counts toward drift t_d
// when t_d <= t <= t_d + W.
struct DetectionRecord {
    std::vector<long> known;
    std::vector<long> detected;
    long tolerance = 0;

    void validate() const;
};

// fraction of known drifts with at least one detection in their window
double detected_change_rate(const DetectionRecord& rec);

// 1 - matched / |T̂_d|. Each detection is counted as matched at most once
// (toward the earliest drift whose window contains it), which keeps the value
// in [0, 1] even when tolerance windows overlap. Empty T̂_d -> undefined.
std::optional<double> false_discovery_rate(const DetectionRecord& rec);

// Mean gap between consecutive false alarms (detections matching no window).
// With fewer than two false alarms there is no gap to average and the stream
// length is returned as the optimistic sentinel.
double time_between_false_alarms(const DetectionRecord& rec, long stream_length);

struct DelayResult {
    // (drift position, delay) for each detected drift
    std::vector<std::pair<long, long>> per_drift;
    std::optional<double> mean;  // absent when nothing was detected
};

// delay = first detection in [t_d, t_d + W] minus t_d; undetected drifts are excluded
DelayResult detection_delay(const DetectionRecord& rec);

// MTR = (MTFA / MD) * DCR; undefined when MD is absent or zero
std::optional<double> mean_time_ratio(double mtfa, std::optional<double> mean_delay,
                                      double dcr);

// which detections fall inside some known drift's window
std::vector<bool> matched_detections(const DetectionRecord& rec);

}  // namespace streameval
