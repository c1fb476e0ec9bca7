#include "islrec/temporal.hpp"

#include <algorithm>
#include <cmath>

namespace islrec {

int histogram_bin(double intensity) noexcept {
    const double scaled = std::floor(intensity * kHistogramBins);
    if (!(scaled > 0.0)) return 0;
    return static_cast<int>(std::min(scaled, static_cast<double>(kHistogramBins - 1)));
}

Histogram histogram(const GrayFrame& frame) {
    Histogram h;
    for (double v : frame.pixels()) ++h.bins[histogram_bin(v)];
    h.total = frame.size();
    return h;
}

double hist_distance(const Histogram& a, const Histogram& b) {
    if (a.bins.size() != b.bins.size())
        throw InvalidArgument("histograms have different bin counts");
    if (a.total != b.total || a.total == 0)
        throw InvalidArgument("histograms cover different (or zero) pixel counts");
    std::uint64_t l1 = 0;
    for (std::size_t i = 0; i < a.bins.size(); ++i)
        l1 += a.bins[i] > b.bins[i] ? a.bins[i] - b.bins[i] : b.bins[i] - a.bins[i];
    return static_cast<double>(l1) / (2.0 * static_cast<double>(a.total));
}

void DetectorState::validate() const {
    if (n < 1) throw InvalidArgument("trigger count n must be at least 1");
    if (!(tau_hist > 0.0)) throw InvalidArgument("tau_hist must be positive");
    if (consecutive_similar < 0 || consecutive_similar > n)
        throw InvalidArgument("consecutive_similar out of range");
}

bool DetectorState::similar(double distance) const noexcept {
    return sense == SimilaritySense::Below ? distance <= tau_hist : distance >= tau_hist;
}

DetectorStep detector_step(DetectorState state, Histogram h) {
    if (!state.last_histogram) {
        state.last_histogram = std::move(h);
        state.consecutive_similar = 0;
        return {std::move(state), false};
    }
    const double d = hist_distance(h, *state.last_histogram);
    state.consecutive_similar = state.similar(d) ? state.consecutive_similar + 1 : 0;
    state.last_histogram = std::move(h);

    bool fired = false;
    if (state.consecutive_similar >= state.n) {
        fired = true;
        state.consecutive_similar = 0;
    }
    return {std::move(state), fired};
}

DetectorStep detector_step(DetectorState state, const GrayFrame& frame) {
    return detector_step(std::move(state), histogram(frame));
}

}  // namespace islrec
