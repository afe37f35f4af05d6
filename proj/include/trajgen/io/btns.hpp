#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trajgen::io {

// Binary tensor container:
//   magic "BTNS" | version u8 | dtype u8 | ndim u8 | ndim x u32 LE dims |
//   row-major payload, little-endian.
// dtype: 1 = float32, 2 = uint32, 3 = uint8, 4 = float64.

enum class Dtype : uint8_t { F32 = 1, U32 = 2, U8 = 3, F64 = 4 };

inline constexpr uint8_t kBtnsVersion = 1;

inline size_t dtype_size(Dtype d) {
    switch (d) {
        case Dtype::F32: return 4;
        case Dtype::U32: return 4;
        case Dtype::U8: return 1;
        case Dtype::F64: return 8;
    }
    throw std::runtime_error("btns: unknown dtype");
}

struct BtnsTensor {
    Dtype dtype = Dtype::F32;
    std::vector<uint32_t> dims;
    std::vector<uint8_t> payload;

    size_t numel() const {
        size_t n = 1;
        for (uint32_t d : dims) n *= d;
        return n;
    }
};

namespace detail {

inline void put_u32le(std::string& buf, uint32_t v) {
    buf.push_back(static_cast<char>(v & 0xff));
    buf.push_back(static_cast<char>((v >> 8) & 0xff));
    buf.push_back(static_cast<char>((v >> 16) & 0xff));
    buf.push_back(static_cast<char>((v >> 24) & 0xff));
}

}  // namespace detail

inline std::string btns_encode(const BtnsTensor& t) {
    if (t.payload.size() != t.numel() * dtype_size(t.dtype)) {
        throw std::runtime_error("btns: payload size does not match dims");
    }
    std::string buf;
    buf.reserve(7 + 4 * t.dims.size() + t.payload.size());
    buf += "BTNS";
    buf.push_back(static_cast<char>(kBtnsVersion));
    buf.push_back(static_cast<char>(t.dtype));
    buf.push_back(static_cast<char>(t.dims.size()));
    for (uint32_t d : t.dims) detail::put_u32le(buf, d);
    buf.append(reinterpret_cast<const char*>(t.payload.data()), t.payload.size());
    return buf;
}

inline BtnsTensor btns_decode(const std::string& buf) {
    if (buf.size() < 7 || buf.compare(0, 4, "BTNS") != 0) {
        throw std::runtime_error("btns: bad magic");
    }
    if (static_cast<uint8_t>(buf[4]) != kBtnsVersion) {
        throw std::runtime_error("btns: unsupported version");
    }
    BtnsTensor t;
    uint8_t dt = static_cast<uint8_t>(buf[5]);
    if (dt < 1 || dt > 4) throw std::runtime_error("btns: unknown dtype");
    t.dtype = static_cast<Dtype>(dt);
    size_t ndim = static_cast<uint8_t>(buf[6]);
    if (buf.size() < 7 + 4 * ndim) throw std::runtime_error("btns: truncated header");
    size_t off = 7;
    for (size_t i = 0; i < ndim; ++i) {
        uint32_t d = 0;
        for (int b = 3; b >= 0; --b) d = (d << 8) | static_cast<uint8_t>(buf[off + b]);
        t.dims.push_back(d);
        off += 4;
    }
    size_t want = t.numel() * dtype_size(t.dtype);
    if (buf.size() - off != want) throw std::runtime_error("btns: payload size mismatch");
    t.payload.assign(buf.begin() + off, buf.end());
    return t;
}

inline void btns_write(const std::filesystem::path& path, const BtnsTensor& t) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("btns: cannot open for write: " + path.string());
    std::string buf = btns_encode(t);
    f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!f) throw std::runtime_error("btns: write failed: " + path.string());
}

inline BtnsTensor btns_read(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("btns: cannot open: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return btns_decode(buf);
}

// typed helpers ---------------------------------------------------------

template <typename T>
inline std::vector<uint8_t> to_bytes(const std::vector<T>& v) {
    std::vector<uint8_t> out(v.size() * sizeof(T));
    std::memcpy(out.data(), v.data(), out.size());
    return out;
}

template <typename T>
inline std::vector<T> from_bytes(const std::vector<uint8_t>& b) {
    std::vector<T> out(b.size() / sizeof(T));
    std::memcpy(out.data(), b.data(), b.size());
    return out;
}

inline BtnsTensor make_f64(const std::vector<uint32_t>& dims, const std::vector<double>& v) {
    return BtnsTensor{Dtype::F64, dims, to_bytes(v)};
}

inline BtnsTensor make_f32(const std::vector<uint32_t>& dims, const std::vector<float>& v) {
    return BtnsTensor{Dtype::F32, dims, to_bytes(v)};
}

inline BtnsTensor make_u32(const std::vector<uint32_t>& dims, const std::vector<uint32_t>& v) {
    return BtnsTensor{Dtype::U32, dims, to_bytes(v)};
}

inline BtnsTensor make_u8(const std::vector<uint32_t>& dims, const std::vector<uint8_t>& v) {
    return BtnsTensor{Dtype::U8, dims, v};
}

}  // namespace trajgen::io
