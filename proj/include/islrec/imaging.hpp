#pragma once

#include "islrec/image.hpp"

namespace islrec {

/// Inclusive HSV box used to classify a pixel as skin. When `h_min > h_max`
/// the hue interval wraps through 360 degrees.
struct SkinThresholds {
    double h_min = 340.0;
    double h_max = 50.0;
    double s_min = 0.20;
    double s_max = 0.68;
    double v_min = 0.35;
    double v_max = 1.0;

    bool contains(const Hsv& p) const noexcept;
    void validate() const;
};

HsvFrame rgb_to_hsv(const RgbFrame& frame);
Hsv rgb_to_hsv(Rgb pixel) noexcept;

BinaryMask skin_mask(const HsvFrame& frame, const SkinThresholds& thr);

// Square structuring element of side 2*radius+1. Dilation ignores pixels
// outside the frame; erosion is its complement dual, so out-of-frame
// pixels never erode a border pixel.
BinaryMask erode(const BinaryMask& mask, int radius);
BinaryMask dilate(const BinaryMask& mask, int radius);
BinaryMask open(const BinaryMask& mask, int radius);
BinaryMask close(const BinaryMask& mask, int radius);

/// Opening followed by closing.
BinaryMask smooth_mask(const BinaryMask& mask, int radius);

/// Keeps the largest 8-connected component. Among equally large components
/// the one reached first in row-major order wins. An empty mask is returned
/// unchanged.
BinaryMask largest_component(const BinaryMask& mask);

/// ITU-R 601 luma of the masked pixels, scaled to [0, 1]; zero elsewhere.
GrayFrame masked_gray(const RgbFrame& frame, const BinaryMask& mask);

/// Bilinear resampling with pixel-center alignment and border clamping.
GrayFrame resize_bilinear(const GrayFrame& frame, int out_width, int out_height);

}  // namespace islrec
