#pragma once

#include <zlib.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trajgen::io {

// Minimal 8-bit grayscale PNG writer (fixed zlib level, so output bytes are
// reproducible for identical pixels).

namespace detail {

inline void put_u32be(std::string& s, uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

inline void put_chunk(std::string& out, const char type[4], const std::string& data) {
    put_u32be(out, static_cast<uint32_t>(data.size()));
    std::string body(type, 4);
    body += data;
    out += body;
    uint32_t crc = static_cast<uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size())));
    put_u32be(out, crc);
}

}  // namespace detail

inline std::string png_encode_gray(const std::vector<uint8_t>& pixels, int width, int height) {
    if (static_cast<size_t>(width) * height != pixels.size()) {
        throw std::runtime_error("png: pixel buffer does not match dimensions");
    }
    // raw scanlines, filter byte 0 per row
    std::vector<uint8_t> raw;
    raw.reserve(static_cast<size_t>(height) * (width + 1));
    for (int r = 0; r < height; ++r) {
        raw.push_back(0);
        raw.insert(raw.end(), pixels.begin() + static_cast<size_t>(r) * width,
                   pixels.begin() + static_cast<size_t>(r + 1) * width);
    }
    uLongf bound = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<uint8_t> compressed(bound);
    if (::compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK) {
        throw std::runtime_error("png: zlib compression failed");
    }
    compressed.resize(bound);

    std::string out("\x89PNG\r\n\x1a\n", 8);
    std::string ihdr;
    detail::put_u32be(ihdr, static_cast<uint32_t>(width));
    detail::put_u32be(ihdr, static_cast<uint32_t>(height));
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(0);   // grayscale
    ihdr.push_back(0);   // compression
    ihdr.push_back(0);   // filter
    ihdr.push_back(0);   // no interlace
    detail::put_chunk(out, "IHDR", ihdr);
    detail::put_chunk(out, "IDAT",
                      std::string(reinterpret_cast<const char*>(compressed.data()), compressed.size()));
    detail::put_chunk(out, "IEND", "");
    return out;
}

inline void png_write_gray(const std::filesystem::path& path, const std::vector<uint8_t>& pixels,
                           int width, int height) {
    std::string bytes = png_encode_gray(pixels, width, height);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("png: cannot open for write: " + path.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("png: write failed: " + path.string());
}

// Tone-map non-negative counts to 8-bit via ln(1+x) scaled by the patch max.
inline std::vector<uint8_t> tone_map(const std::vector<double>& counts) {
    double max_log = 0.0;
    for (double v : counts) max_log = std::max(max_log, std::log1p(std::max(0.0, v)));
    std::vector<uint8_t> out(counts.size(), 0);
    if (max_log <= 0.0) return out;
    for (size_t i = 0; i < counts.size(); ++i) {
        double t = std::log1p(std::max(0.0, counts[i])) / max_log;
        out[i] = static_cast<uint8_t>(std::lround(255.0 * t));
    }
    return out;
}

}  // namespace trajgen::io
