#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "islrec/image.hpp"

namespace islrec {

inline constexpr int kHistogramBins = 64;

/// Gray-level histogram over [0, 1] split into `kHistogramBins` equal bins.
struct Histogram {
    std::vector<std::uint64_t> bins = std::vector<std::uint64_t>(kHistogramBins, 0);
    std::uint64_t total = 0;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Bin of intensity x is min(floor(x * 64), 63).
int histogram_bin(double intensity) noexcept;

Histogram histogram(const GrayFrame& frame);

/// Normalized L1 distance sum|a_i - b_i| / (2 * total), in [0, 1].
/// Throws InvalidArgument when the histograms are not comparable.
double hist_distance(const Histogram& a, const Histogram& b);

/// Whether a small or a large histogram distance counts as "similar".
enum class SimilaritySense { Below, Above };

/// Counts consecutive similar frame pairs and fires once `n` of them have
/// been seen in a row, then re-arms.
struct DetectorState {
    int consecutive_similar = 0;
    int n = 17;
    double tau_hist = 0.05;
    SimilaritySense sense = SimilaritySense::Below;
    std::optional<Histogram> last_histogram;

    void validate() const;
    bool similar(double distance) const noexcept;
};

struct DetectorStep {
    DetectorState state;
    bool triggered = false;
};

DetectorStep detector_step(DetectorState state, const GrayFrame& frame);

/// Same transition driven by a precomputed histogram.
DetectorStep detector_step(DetectorState state, Histogram h);

}  // namespace islrec
