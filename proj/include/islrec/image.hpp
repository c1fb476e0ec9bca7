#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "islrec/errors.hpp"

namespace islrec {

/// Row-major raster with one `Pixel` per cell. Dimensions are at least 1x1.
template <typename Pixel>
class Image {
public:
    using pixel_type = Pixel;

    Image(int width, int height, Pixel fill = Pixel{})
        : width_(checked(width, height)), height_(height),
          pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

    Image(int width, int height, std::vector<Pixel> pixels)
        : width_(checked(width, height)), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != size())
            throw InvalidArgument("image data length does not match width x height");
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }

    Pixel& at(int x, int y) { return pixels_[index(x, y)]; }
    const Pixel& at(int x, int y) const { return pixels_[index(x, y)]; }

    Pixel& operator[](std::size_t i) { return pixels_[i]; }
    const Pixel& operator[](std::size_t i) const { return pixels_[i]; }

    std::span<Pixel> pixels() noexcept { return pixels_; }
    std::span<const Pixel> pixels() const noexcept { return pixels_; }

    bool same_shape(const auto& other) const noexcept {
        return width_ == other.width() && height_ == other.height();
    }

    friend bool operator==(const Image&, const Image&) = default;

private:
    static int checked(int width, int height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("image dimensions must be at least 1x1");
        return width;
    }

    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<Pixel> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Hue in degrees [0, 360), saturation and value in [0, 1].
struct Hsv {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
    friend bool operator==(const Hsv&, const Hsv&) = default;
};

using RgbFrame = Image<Rgb>;
using HsvFrame = Image<Hsv>;
/// One byte per pixel, each 0 or 1.
using BinaryMask = Image<std::uint8_t>;
/// Intensities in [0, 1].
using GrayFrame = Image<double>;

}  // namespace islrec
