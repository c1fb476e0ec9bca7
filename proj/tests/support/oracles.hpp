#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition directly and shares no code with the
// library routine it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "islrec/image.hpp"

namespace islrec::oracle {

/// Hexcone HSV -> RGB, rounded to 8 bits.
inline Rgb hsv_to_rgb(const Hsv& p) {
    const double c = p.v * p.s;
    const double hp = p.h / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) r = c, g = x;
    else if (hp < 2) r = x, g = c;
    else if (hp < 3) g = c, b = x;
    else if (hp < 4) g = x, b = c;
    else if (hp < 5) r = x, b = c;
    else r = c, b = x;
    const double m = p.v - c;
    auto q = [&](double u) { return static_cast<std::uint8_t>(std::lround((u + m) * 255.0)); };
    return {q(r), q(g), q(b)};
}

/// Set dilation by the (2r+1)^2 square; only in-frame pixels contribute.
inline BinaryMask dilate(const BinaryMask& m, int r) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x)
            for (int dy = -r; dy <= r; ++dy)
                for (int dx = -r; dx <= r; ++dx) {
                    const int sx = x + dx, sy = y + dy;
                    if (sx >= 0 && sy >= 0 && sx < m.width() && sy < m.height() && m.at(sx, sy))
                        out.at(x, y) = 1;
                }
    return out;
}

inline BinaryMask complement(const BinaryMask& m) {
    BinaryMask out(m.width(), m.height());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] ? 0 : 1;
    return out;
}

/// Erosion as the complement dual of dilation.
inline BinaryMask erode(const BinaryMask& m, int r) { return oracle::complement(oracle::dilate(oracle::complement(m), r)); }
inline BinaryMask open(const BinaryMask& m, int r) { return oracle::dilate(oracle::erode(m, r), r); }
inline BinaryMask close(const BinaryMask& m, int r) { return oracle::erode(oracle::dilate(m, r), r); }
inline BinaryMask smooth(const BinaryMask& m, int r) { return oracle::close(oracle::open(m, r), r); }

inline bool subset(const BinaryMask& a, const BinaryMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

inline std::size_t count_ones(const BinaryMask& m) {
    return static_cast<std::size_t>(std::count(m.pixels().begin(), m.pixels().end(), std::uint8_t{1}));
}

/// 8-connected components by explicit-stack flood fill, in order of each
/// component's first row-major pixel.
inline std::vector<std::vector<std::size_t>> components(const BinaryMask& m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(m.size(), false);
    const int w = m.width(), h = m.height();
    for (std::size_t start = 0; start < m.size(); ++start) {
        if (!m[start] || seen[start]) continue;
        std::vector<std::size_t> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            comp.push_back(i);
            const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    const std::size_t j = static_cast<std::size_t>(ny) * w + nx;
                    if (m[j] && !seen[j]) {
                        seen[j] = true;
                        stack.push_back(j);
                    }
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Largest component, first-found on ties.
inline BinaryMask largest_component(const BinaryMask& m) {
    const auto comps = components(m);
    BinaryMask out(m.width(), m.height());
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& c : comps)
        if (!best || c.size() > best->size()) best = &c;
    if (best)
        for (std::size_t i : *best) out[i] = 1;
    return out;
}

/// Trigger indices for a similarity sequence: frame i (i >= 1) fires iff
/// the run of similar pairs ending at pair (i-1, i) has a length that is a
/// positive multiple of n.
inline std::vector<std::size_t> replay_triggers(const std::vector<bool>& similar_pair, int n) {
    std::vector<std::size_t> out;
    std::size_t run = 0;
    for (std::size_t k = 0; k < similar_pair.size(); ++k) {
        run = similar_pair[k] ? run + 1 : 0;
        if (run > 0 && run % static_cast<std::size_t>(n) == 0) out.push_back(k + 1);
    }
    return out;
}

inline BinaryMask random_mask(std::mt19937_64& rng, int max_side, double density) {
    std::uniform_int_distribution<int> side(1, max_side);
    std::bernoulli_distribution bit(density);
    BinaryMask m(side(rng), side(rng));
    for (auto& p : m.pixels()) p = bit(rng) ? 1 : 0;
    return m;
}

}  // namespace islrec::oracle
