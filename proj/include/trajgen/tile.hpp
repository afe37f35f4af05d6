#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "trajgen/geo.hpp"

namespace trajgen {

inline constexpr int kMaxZoom = 24;

struct TileIndex {
    int zoom = kMaxZoom;
    int64_t tx = 0;
    int64_t ty = 0;

    friend bool operator==(const TileIndex&, const TileIndex&) = default;
};

inline int64_t tiles_at_zoom(int zoom) { return int64_t{1} << zoom; }

// Slippy-map convention: tx grows eastward, ty grows southward.
// Points exactly on a tile's east/south boundary belong to the next tile
// (floor semantics); the grid's own south/east edge clamps inward.
inline TileIndex lonlat_to_tile(const GeoPoint& p, int zoom) {
    if (zoom < 0 || zoom > kMaxZoom) {
        throw std::domain_error("lonlat_to_tile: zoom outside [0, 24]");
    }
    if (!(p.lat >= -kMercatorMaxLat && p.lat <= kMercatorMaxLat)) {
        throw std::domain_error("lonlat_to_tile: latitude outside Mercator band");
    }
    const double n = static_cast<double>(tiles_at_zoom(zoom));
    const double lon = normalize_lon(p.lon);
    const double phi = p.lat * kDegToRad;
    double fx = (lon + 180.0) / 360.0 * n;
    double fy = (1.0 - std::asinh(std::tan(phi)) / M_PI) / 2.0 * n;
    auto clamp_idx = [&](double f) {
        int64_t i = static_cast<int64_t>(std::floor(f));
        if (i < 0) i = 0;
        if (i >= tiles_at_zoom(zoom)) i = tiles_at_zoom(zoom) - 1;
        return i;
    };
    return TileIndex{zoom, clamp_idx(fx), clamp_idx(fy)};
}

// Northwest corner of the tile.
inline GeoPoint tile_to_lonlat(const TileIndex& t) {
    if (t.zoom < 0 || t.zoom > kMaxZoom) {
        throw std::domain_error("tile_to_lonlat: zoom outside [0, 24]");
    }
    if (t.tx < 0 || t.ty < 0 || t.tx >= tiles_at_zoom(t.zoom) ||
        t.ty >= tiles_at_zoom(t.zoom)) {
        throw std::domain_error("tile_to_lonlat: tile index out of range");
    }
    const double n = static_cast<double>(tiles_at_zoom(t.zoom));
    double lon = static_cast<double>(t.tx) / n * 360.0 - 180.0;
    double y = M_PI * (1.0 - 2.0 * static_cast<double>(t.ty) / n);
    double lat = std::atan(std::sinh(y)) * kRadToDeg;
    return GeoPoint{lat, lon};
}

// Geographic center of the tile (half a tile in from the NW corner).
inline GeoPoint tile_center(const TileIndex& t) {
    const double n = static_cast<double>(tiles_at_zoom(t.zoom));
    double lon = (static_cast<double>(t.tx) + 0.5) / n * 360.0 - 180.0;
    double y = M_PI * (1.0 - 2.0 * (static_cast<double>(t.ty) + 0.5) / n);
    double lat = std::atan(std::sinh(y)) * kRadToDeg;
    return GeoPoint{lat, lon};
}

struct PatchWindow {
    TileIndex origin;  // northwest corner tile
    int n = 0;         // side length in tiles (= pixels)
};

inline PatchWindow make_patch_window(TileIndex origin, int n) {
    if (n < 1) throw std::domain_error("PatchWindow: n must be >= 1");
    if (origin.tx + n > tiles_at_zoom(origin.zoom) ||
        origin.ty + n > tiles_at_zoom(origin.zoom)) {
        throw std::domain_error("PatchWindow: window exceeds tile grid");
    }
    return PatchWindow{origin, n};
}

// (row, col) of the tile within the window, or nullopt if outside.
inline std::optional<std::pair<int, int>> tile_to_pixel(const TileIndex& t,
                                                        const PatchWindow& w) {
    if (t.zoom != w.origin.zoom) {
        throw std::domain_error("tile_to_pixel: zoom mismatch");
    }
    int64_t col = t.tx - w.origin.tx;
    int64_t row = t.ty - w.origin.ty;
    if (row < 0 || col < 0 || row >= w.n || col >= w.n) return std::nullopt;
    return std::make_pair(static_cast<int>(row), static_cast<int>(col));
}

}  // namespace trajgen
