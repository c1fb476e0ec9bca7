#include "islrec/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace islrec {

bool SkinThresholds::contains(const Hsv& p) const noexcept {
    const bool hue_ok = h_min <= h_max ? (p.h >= h_min && p.h <= h_max)
                                       : (p.h >= h_min || p.h <= h_max);
    return hue_ok && p.s >= s_min && p.s <= s_max && p.v >= v_min && p.v <= v_max;
}

void SkinThresholds::validate() const {
    if (!(s_min <= s_max) || !(v_min <= v_max))
        throw InvalidArgument("skin thresholds need s_min <= s_max and v_min <= v_max");
    if (s_min < 0.0 || s_max > 1.0 || v_min < 0.0 || v_max > 1.0)
        throw InvalidArgument("skin saturation/value bounds must lie in [0, 1]");
    if (h_min < 0.0 || h_min > 360.0 || h_max < 0.0 || h_max > 360.0)
        throw InvalidArgument("skin hue bounds must lie in [0, 360]");
}

Hsv rgb_to_hsv(Rgb pixel) noexcept {
    const int r = pixel.r, g = pixel.g, b = pixel.b;
    const int hi = std::max({r, g, b});
    const int lo = std::min({r, g, b});
    const int delta = hi - lo;

    Hsv out;
    out.v = hi / 255.0;
    out.s = hi == 0 ? 0.0 : static_cast<double>(delta) / hi;
    if (delta == 0) return out;

    double h;
    if (hi == r)
        h = 60.0 * (static_cast<double>(g - b) / delta);
    else if (hi == g)
        h = 60.0 * (static_cast<double>(b - r) / delta + 2.0);
    else
        h = 60.0 * (static_cast<double>(r - g) / delta + 4.0);
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h -= 360.0;
    out.h = h;
    return out;
}

HsvFrame rgb_to_hsv(const RgbFrame& frame) {
    HsvFrame out(frame.width(), frame.height());
    std::ranges::transform(frame.pixels(), out.pixels().begin(),
                           [](Rgb p) { return rgb_to_hsv(p); });
    return out;
}

BinaryMask skin_mask(const HsvFrame& frame, const SkinThresholds& thr) {
    BinaryMask out(frame.width(), frame.height());
    std::ranges::transform(frame.pixels(), out.pixels().begin(),
                           [&](const Hsv& p) { return std::uint8_t{thr.contains(p)}; });
    return out;
}

namespace {

void require_radius(int radius) {
    if (radius < 1) throw InvalidArgument("morphology radius must be at least 1");
}

// Separable running extremum over a (2r+1)-wide window clipped to the frame.
// `keep_max` selects dilation (any 1) versus erosion (all 1).
BinaryMask window_extremum(const BinaryMask& mask, int radius, bool keep_max) {
    const int w = mask.width(), h = mask.height();
    const std::uint8_t hit = keep_max ? 1 : 0;

    BinaryMask rows(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t v = keep_max ? 0 : 1;
            for (int k = std::max(0, x - radius); k <= std::min(w - 1, x + radius); ++k) {
                if (mask.at(k, y) == hit) {
                    v = hit;
                    break;
                }
            }
            rows.at(x, y) = v;
        }
    }

    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t v = keep_max ? 0 : 1;
            for (int k = std::max(0, y - radius); k <= std::min(h - 1, y + radius); ++k) {
                if (rows.at(x, k) == hit) {
                    v = hit;
                    break;
                }
            }
            out.at(x, y) = v;
        }
    }
    return out;
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, int radius) {
    require_radius(radius);
    return window_extremum(mask, radius, false);
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
    require_radius(radius);
    return window_extremum(mask, radius, true);
}

BinaryMask open(const BinaryMask& mask, int radius) {
    return dilate(erode(mask, radius), radius);
}

BinaryMask close(const BinaryMask& mask, int radius) {
    return erode(dilate(mask, radius), radius);
}

BinaryMask smooth_mask(const BinaryMask& mask, int radius) {
    return close(open(mask, radius), radius);
}

namespace {

// Union-find over provisional labels, with path halving.
struct DisjointSets {
    std::vector<int> parent;

    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        // Smaller root survives so the representative is the earliest label.
        if (a < b)
            parent[b] = a;
        else if (b < a)
            parent[a] = b;
    }
};

}  // namespace

BinaryMask largest_component(const BinaryMask& mask) {
    const int w = mask.width(), h = mask.height();
    std::vector<int> label(mask.size(), -1);
    DisjointSets sets;

    // Two-pass raster labeling; the already-visited 8-neighbours are
    // W, NW, N and NE.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (!mask[i]) continue;
            int current = -1;
            auto visit = [&](int nx, int ny) {
                if (nx < 0 || nx >= w || ny < 0) return;
                const int l = label[static_cast<std::size_t>(ny) * w + nx];
                if (l < 0) return;
                if (current < 0)
                    current = l;
                else
                    sets.unite(current, l);
            };
            visit(x - 1, y);
            visit(x - 1, y - 1);
            visit(x, y - 1);
            visit(x + 1, y - 1);
            label[i] = current < 0 ? sets.make() : current;
        }
    }
    if (sets.parent.empty()) return mask;

    std::vector<std::size_t> area(sets.parent.size(), 0);
    for (int& l : label) {
        if (l < 0) continue;
        l = sets.find(l);
        ++area[l];
    }
    // Roots are ordered by first raster appearance, so the first maximum is
    // the component with the smallest row-major index.
    const int best = static_cast<int>(std::ranges::max_element(area) - area.begin());

    BinaryMask out(w, h);
    for (std::size_t i = 0; i < label.size(); ++i) out[i] = label[i] == best ? 1 : 0;
    return out;
}

GrayFrame masked_gray(const RgbFrame& frame, const BinaryMask& mask) {
    if (!frame.same_shape(mask)) throw InvalidArgument("frame and mask dimensions differ");
    GrayFrame out(frame.width(), frame.height());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (!mask[i]) continue;
        const Rgb p = frame[i];
        out[i] = (0.299 * p.r + 0.587 * p.g + 0.114 * p.b) / 255.0;
    }
    return out;
}

namespace {

struct Tap {
    int lo;
    int hi;
    double frac;
};

std::vector<Tap> sample_taps(int in_dim, int out_dim) {
    std::vector<Tap> taps(out_dim);
    const double scale = static_cast<double>(in_dim) / out_dim;
    for (int i = 0; i < out_dim; ++i) {
        double src = (i + 0.5) * scale - 0.5;
        src = std::clamp(src, 0.0, static_cast<double>(in_dim - 1));
        const int lo = static_cast<int>(std::floor(src));
        taps[i] = {lo, std::min(lo + 1, in_dim - 1), src - lo};
    }
    return taps;
}

double lerp(double a, double b, double t) { return a + t * (b - a); }

}  // namespace

GrayFrame resize_bilinear(const GrayFrame& frame, int out_width, int out_height) {
    if (out_width < 1 || out_height < 1)
        throw InvalidArgument("resize target must be at least 1x1");
    const auto xs = sample_taps(frame.width(), out_width);
    const auto ys = sample_taps(frame.height(), out_height);

    GrayFrame out(out_width, out_height);
    for (int y = 0; y < out_height; ++y) {
        const Tap& ty = ys[y];
        for (int x = 0; x < out_width; ++x) {
            const Tap& tx = xs[x];
            const double a = frame.at(tx.lo, ty.lo), b = frame.at(tx.hi, ty.lo);
            const double c = frame.at(tx.lo, ty.hi), d = frame.at(tx.hi, ty.hi);
            const double v = lerp(lerp(a, b, tx.frac), lerp(c, d, tx.frac), ty.frac);
            // Rounding in the lerps may step just outside the corner range.
            out.at(x, y) = std::clamp(v, std::min({a, b, c, d}), std::max({a, b, c, d}));
        }
    }
    return out;
}

}  // namespace islrec
