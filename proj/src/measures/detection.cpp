#include "streameval/measures/detection.hpp"

#include <stdexcept>

namespace streameval {

void DetectionRecord::validate() const {
    for (std::size_t i = 1; i < known.size(); ++i)
        if (known[i] <= known[i - 1])
            throw std::invalid_argument("detection record: known drifts must be strictly increasing");
    for (std::size_t i = 1; i < detected.size(); ++i)
        if (detected[i] <= detected[i - 1])
            throw std::invalid_argument("detection record: detections must be strictly increasing");
    if (tolerance < 0) throw std::invalid_argument("detection record: tolerance must be >= 0");
}

std::vector<bool> matched_detections(const DetectionRecord& rec) {
    std::vector<bool> matched(rec.detected.size(), false);
    for (std::size_t i = 0; i < rec.detected.size(); ++i) {
        const long t = rec.detected[i];
        for (long td : rec.known) {
            if (td <= t && t <= td + rec.tolerance) {
                matched[i] = true;
                break;
            }
        }
    }
    return matched;
}

double detected_change_rate(const DetectionRecord& rec) {
    rec.validate();
    if (rec.known.empty())
        throw std::invalid_argument("dcr: requires at least one known drift");
    long hit = 0;
    for (long td : rec.known) {
        for (long t : rec.detected) {
            if (td <= t && t <= td + rec.tolerance) {
                ++hit;
                break;
            }
        }
    }
    return static_cast<double>(hit) / static_cast<double>(rec.known.size());
}

std::optional<double> false_discovery_rate(const DetectionRecord& rec) {
    rec.validate();
    if (rec.detected.empty()) return std::nullopt;
    const auto matched = matched_detections(rec);
    long hits = 0;
    for (bool m : matched) hits += m ? 1 : 0;
    return 1.0 - static_cast<double>(hits) / static_cast<double>(rec.detected.size());
}

double time_between_false_alarms(const DetectionRecord& rec, long stream_length) {
    rec.validate();
    const auto matched = matched_detections(rec);
    std::vector<long> false_alarms;
    for (std::size_t i = 0; i < rec.detected.size(); ++i)
        if (!matched[i]) false_alarms.push_back(rec.detected[i]);
    if (false_alarms.size() < 2) return static_cast<double>(stream_length);
    double sum = 0.0;
    for (std::size_t i = 1; i < false_alarms.size(); ++i)
        sum += static_cast<double>(false_alarms[i] - false_alarms[i - 1]);
    return sum / static_cast<double>(false_alarms.size() - 1);
}

DelayResult detection_delay(const DetectionRecord& rec) {
    rec.validate();
    DelayResult out;
    double sum = 0.0;
    for (long td : rec.known) {
        for (long t : rec.detected) {
            if (td <= t && t <= td + rec.tolerance) {
                out.per_drift.emplace_back(td, t - td);
                sum += static_cast<double>(t - td);
                break;
            }
        }
    }
    if (!out.per_drift.empty())
        out.mean = sum / static_cast<double>(out.per_drift.size());
    return out;
}

std::optional<double> mean_time_ratio(double mtfa, std::optional<double> mean_delay,
                                      double dcr) {
    if (!mean_delay.has_value() || *mean_delay <= 0.0) return std::nullopt;
    return (mtfa / *mean_delay) * dcr;
}

}  // namespace streameval
