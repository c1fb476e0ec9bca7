#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "islrec/netpbm.hpp"

namespace islrec::synthetic {

namespace {

// Membership test in blob-local coordinates, (u, v) relative to the center.
bool inside(int shape, int u, int v) {
    switch (shape) {
        case 0: return std::abs(u) <= 20 && std::abs(v) <= 14;                       // palm
        case 1: return std::abs(u) <= 6 && std::abs(v) <= 28;                        // bar
        case 2: return (u >= -18 && u <= -6 && std::abs(v) <= 24) ||                 // L
                       (v >= 12 && v <= 24 && u >= -18 && u <= 18);
        case 3: return (std::abs(u) <= 6 && std::abs(v) <= 24) ||                    // cross
                       (std::abs(v) <= 6 && std::abs(u) <= 24);
        case 4: return u * u + v * v <= 24 * 24;                                      // disk
        case 5: return v >= -22 && v <= 22 && std::abs(u) <= (v + 22) / 2;           // triangle
        case 6: {                                                                     // ring
            const int r2 = u * u + v * v;
            return r2 <= 24 * 24 && r2 >= 11 * 11;
        }
        case 7: return std::abs(u - v) <= 7 && std::abs(u + v) <= 44;                // diagonal
        default: throw std::out_of_range("unknown synthetic shape");
    }
}

Rgb shaded(int x, int side) {
    const double f = 0.82 + 0.18 * static_cast<double>(x) / (side - 1);
    auto s = [&](std::uint8_t c) { return static_cast<std::uint8_t>(std::lround(c * f)); };
    return {s(kSkin.r), s(kSkin.g), s(kSkin.b)};
}

}  // namespace

std::string shape_name(int shape) {
    static const char* names[kShapeCount] = {"palm", "bar", "ell", "cross", "disk", "wedge", "ring", "slash"};
    if (shape < 0 || shape >= kShapeCount) throw std::out_of_range("unknown synthetic shape");
    return names[shape];
}

RgbFrame sign_frame(int shape, int dx, int dy, int side) {
    RgbFrame f(side, side);
    const int cx = side / 2 + dx, cy = side / 2 + dy;
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x)
            if (inside(shape, x - cx, y - cy)) f.at(x, y) = shaded(x, side);
    return f;
}

RgbFrame rect_frame(int width, int height, int x0, int y0, int w, int h) {
    RgbFrame f(width, height);
    for (int y = y0; y < y0 + h; ++y)
        for (int x = x0; x < x0 + w; ++x) f.at(x, y) = kSkin;
    return f;
}

RgbFrame add_noise(const RgbFrame& frame, int amplitude, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-amplitude, amplitude);
    RgbFrame out = frame;
    auto jitter = [&](std::uint8_t c) { return static_cast<std::uint8_t>(std::clamp(c + d(rng), 0, 255)); };
    for (Rgb& p : out.pixels()) p = {jitter(p.r), jitter(p.g), jitter(p.b)};
    return out;
}

std::vector<Offset> variant_offsets() { return {{0, 0}, {-7, 3}, {6, -5}}; }

void write_corpus(const std::filesystem::path& root, int noise_amplitude, std::uint64_t seed) {
    const auto offsets = variant_offsets();
    for (int s = 0; s < kShapeCount; ++s) {
        const auto dir = root / shape_name(s);
        std::filesystem::create_directories(dir);
        for (std::size_t v = 0; v < offsets.size(); ++v) {
            RgbFrame f = sign_frame(s, offsets[v].dx, offsets[v].dy);
            if (noise_amplitude > 0) f = add_noise(f, noise_amplitude, seed + 31 * s + v);
            write_ppm(dir / ("frame_" + std::to_string(v) + ".ppm"), f);
        }
    }
}

}  // namespace islrec::synthetic
