#include "islrec/netpbm.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

namespace islrec {

namespace {

using Kind = ImageParseError::Kind;

bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader {
public:
    HeaderReader(std::span<const std::uint8_t> bytes, std::size_t start) : bytes_(bytes), pos_(start) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else {
                break;
            }
        }
    }

    long read_number(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        if (pos_ >= bytes_.size())
            throw ImageParseError(Kind::MalformedHeader, pos_,
                                  std::string("unexpected end of header reading ") + what);
        long value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max())
                throw ImageParseError(Kind::MalformedHeader, start, std::string(what) + " is too large");
            ++pos_;
        }
        if (pos_ == start)
            throw ImageParseError(Kind::MalformedHeader, pos_, std::string("expected ") + what);
        if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            throw ImageParseError(Kind::MalformedHeader, pos_,
                                  std::string("unexpected character after ") + what);
        return value;
    }

    void single_whitespace() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
            throw ImageParseError(Kind::MalformedHeader, pos_, "expected whitespace before raster");
        ++pos_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

}  // namespace

RgbFrame decode_netpbm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw ImageParseError(Kind::BadMagic, 0, "not a binary PGM (P5) or PPM (P6) file");
    const bool color = bytes[1] == '6';
    if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#')
        throw ImageParseError(Kind::BadMagic, 2, "unexpected character after magic number");

    HeaderReader header(bytes, 2);
    const long width = header.read_number("width");
    const long height = header.read_number("height");
    header.skip_space_and_comments();
    const std::size_t maxval_offset = header.pos();
    const long maxval = header.read_number("maxval");
    if (width < 1 || height < 1)
        throw ImageParseError(Kind::MalformedHeader, maxval_offset, "image dimensions must be positive");
    if (maxval != 255)
        throw ImageParseError(Kind::UnsupportedMaxval, maxval_offset,
                              "unsupported maxval " + std::to_string(maxval) + " (only 255)");
    header.single_whitespace();

    const std::size_t raster = header.pos();
    const std::size_t channels = color ? 3 : 1;
    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
    if (bytes.size() - raster < need)
        throw ImageParseError(Kind::TruncatedPayload, bytes.size(),
                              "raster truncated: expected " + std::to_string(need) + " bytes, found " +
                                  std::to_string(bytes.size() - raster));

    RgbFrame frame(static_cast<int>(width), static_cast<int>(height));
    const std::uint8_t* p = bytes.data() + raster;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (color) {
            frame[i] = {p[0], p[1], p[2]};
            p += 3;
        } else {
            frame[i] = {p[0], p[0], p[0]};
            p += 1;
        }
    }
    return frame;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError(path.string(), "read failed");
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError(path.string(), "write failed");
}

RgbFrame decode_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    try {
        return decode_netpbm(bytes);
    } catch (const ImageParseError& e) {
        throw ImageParseError(e.kind(), e.offset(), path.string() + ": " + e.detail());
    }
}

namespace {

std::vector<std::uint8_t> header_bytes(const char* magic, int w, int h) {
    const std::string s = std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::uint8_t> encode_ppm(const RgbFrame& frame) {
    auto out = header_bytes("P6", frame.width(), frame.height());
    out.reserve(out.size() + frame.size() * 3);
    for (const Rgb& p : frame.pixels()) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

std::vector<std::uint8_t> encode_pgm(const GrayFrame& frame) {
    auto out = header_bytes("P5", frame.width(), frame.height());
    out.reserve(out.size() + frame.size());
    for (double v : frame.pixels()) {
        const double clamped = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        out.push_back(static_cast<std::uint8_t>(std::lround(clamped * 255.0)));
    }
    return out;
}

void write_ppm(const std::filesystem::path& path, const RgbFrame& frame) {
    write_file(path, encode_ppm(frame));
}

}  // namespace islrec
