#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "trajgen/tile.hpp"
#include "trajgen/traffic_sim.hpp"

namespace trajgen {

enum class RasterKind { CRM, HCRM };

inline constexpr int kHeadingChannels = 12;  // 30-degree buckets

inline int channels_for(RasterKind kind) {
    return kind == RasterKind::CRM ? 1 : kHeadingChannels;
}

// Non-negative integer counts over a patch window, channel-major
// ([c][row][col]); c = 1 for CRM, 12 for HCRM.
struct RasterPatch {
    PatchWindow window;
    ObservationInterval interval;
    RasterKind kind = RasterKind::CRM;
    int channels = 1;
    std::vector<uint32_t> values;

    uint32_t at(int ch, int row, int col) const {
        return values[(static_cast<size_t>(ch) * window.n + row) * window.n + col];
    }
    uint32_t& at(int ch, int row, int col) {
        return values[(static_cast<size_t>(ch) * window.n + row) * window.n + col];
    }
    uint64_t total() const {
        uint64_t s = 0;
        for (uint32_t v : values) s += v;
        return s;
    }
};

// Pixel-level condition: 1 where a road edge crosses the tile.
struct BinaryRoadRaster {
    PatchWindow window;
    std::vector<uint8_t> values;  // n*n, row-major

    uint8_t at(int row, int col) const { return values[static_cast<size_t>(row) * window.n + col]; }
    uint8_t& at(int row, int col) { return values[static_cast<size_t>(row) * window.n + col]; }
};

// ln(1+count) per cell; same layout as the RasterPatch it came from.
struct NormalizedPatch {
    PatchWindow window;
    ObservationInterval interval;
    RasterKind kind = RasterKind::CRM;
    int channels = 1;
    std::vector<double> values;
};

inline int heading_bucket(double heading_deg) {
    int k = static_cast<int>(std::floor(heading_deg / 30.0));
    return ((k % kHeadingChannels) + kHeadingChannels) % kHeadingChannels;
}

namespace detail {

template <typename PerPoint>
inline void scan_points(const std::vector<Trajectory>& trajs, const PatchWindow& w,
                        const ObservationInterval& iv, PerPoint&& fn) {
    for (const auto& traj : trajs) {
        for (const auto& pt : traj.points) {
            if (pt.timestamp < iv.start || pt.timestamp >= iv.end()) continue;
            TileIndex t = lonlat_to_tile(pt.position, w.origin.zoom);
            auto px = tile_to_pixel(t, w);
            if (!px) continue;
            fn(px->first, px->second, pt);
        }
    }
}

}  // namespace detail

inline RasterPatch rasterize_crm(const std::vector<Trajectory>& trajs,
                                 const PatchWindow& w, const ObservationInterval& iv) {
    RasterPatch p{w, iv, RasterKind::CRM, 1,
                  std::vector<uint32_t>(static_cast<size_t>(w.n) * w.n, 0)};
    detail::scan_points(trajs, w, iv,
                        [&](int r, int c, const TracePoint&) { p.at(0, r, c) += 1; });
    return p;
}

inline RasterPatch rasterize_hcrm(const std::vector<Trajectory>& trajs,
                                  const PatchWindow& w, const ObservationInterval& iv) {
    RasterPatch p{w, iv, RasterKind::HCRM, kHeadingChannels,
                  std::vector<uint32_t>(static_cast<size_t>(w.n) * w.n * kHeadingChannels, 0)};
    detail::scan_points(trajs, w, iv, [&](int r, int c, const TracePoint& pt) {
        p.at(heading_bucket(pt.heading), r, c) += 1;
    });
    return p;
}

namespace detail {

// Continuous tile coordinates of a point at the given zoom.
inline std::pair<double, double> tile_coords(const GeoPoint& p, int zoom) {
    const double n = static_cast<double>(tiles_at_zoom(zoom));
    double fx = (normalize_lon(p.lon) + 180.0) / 360.0 * n;
    double fy = (1.0 - std::asinh(std::tan(p.lat * kDegToRad)) / M_PI) / 2.0 * n;
    return {fx, fy};
}

// Amanatides-Woo traversal: visits every tile the segment passes through.
template <typename Visit>
inline void walk_tiles(double x0, double y0, double x1, double y1, Visit&& visit) {
    int64_t cx = static_cast<int64_t>(std::floor(x0));
    int64_t cy = static_cast<int64_t>(std::floor(y0));
    const int64_t ex = static_cast<int64_t>(std::floor(x1));
    const int64_t ey = static_cast<int64_t>(std::floor(y1));
    visit(cx, cy);
    const double dx = x1 - x0;
    const double dy = y1 - y0;
    const int sx = dx > 0 ? 1 : -1;
    const int sy = dy > 0 ? 1 : -1;
    double t_max_x = dx != 0.0 ? ((cx + (sx > 0 ? 1 : 0)) - x0) / dx
                               : std::numeric_limits<double>::infinity();
    double t_max_y = dy != 0.0 ? ((cy + (sy > 0 ? 1 : 0)) - y0) / dy
                               : std::numeric_limits<double>::infinity();
    const double t_dx = dx != 0.0 ? sx / dx : std::numeric_limits<double>::infinity();
    const double t_dy = dy != 0.0 ? sy / dy : std::numeric_limits<double>::infinity();
    // guard against degenerate floating-point stalls
    int64_t steps = std::llabs(ex - cx) + std::llabs(ey - cy) + 4;
    while ((cx != ex || cy != ey) && steps-- > 0) {
        if (t_max_x < t_max_y) {
            cx += sx;
            t_max_x += t_dx;
        } else {
            cy += sy;
            t_max_y += t_dy;
        }
        visit(cx, cy);
    }
}

}  // namespace detail

inline BinaryRoadRaster rasterize_road_network(const RoadNetwork& net, const PatchWindow& w) {
    BinaryRoadRaster out{w, std::vector<uint8_t>(static_cast<size_t>(w.n) * w.n, 0)};
    for (const auto& e : net.edges) {
        auto [x0, y0] = detail::tile_coords(net.nodes[e.a], w.origin.zoom);
        auto [x1, y1] = detail::tile_coords(net.nodes[e.b], w.origin.zoom);
        detail::walk_tiles(x0, y0, x1, y1, [&](int64_t tx, int64_t ty) {
            int64_t col = tx - w.origin.tx;
            int64_t row = ty - w.origin.ty;
            if (row >= 0 && col >= 0 && row < w.n && col < w.n) {
                out.at(static_cast<int>(row), static_cast<int>(col)) = 1;
            }
        });
    }
    return out;
}

// Elementwise ln(1+x). Zero counts stay exactly 0.
inline NormalizedPatch log_normalize(const RasterPatch& p) {
    NormalizedPatch out{p.window, p.interval, p.kind, p.channels,
                        std::vector<double>(p.values.size())};
    for (size_t i = 0; i < p.values.size(); ++i) {
        out.values[i] = std::log1p(static_cast<double>(p.values[i]));
    }
    return out;
}

// Checked scalar form for real-valued inputs (model outputs and the like).
inline double log_normalize_value(double count) {
    if (count < 0.0) throw std::domain_error("log_normalize: negative count");
    return std::log1p(count);
}

// Inverse of log_normalize: round(exp(v) - 1), clamped at zero.
inline RasterPatch denormalize(const NormalizedPatch& p) {
    RasterPatch out{p.window, p.interval, p.kind, p.channels,
                    std::vector<uint32_t>(p.values.size())};
    for (size_t i = 0; i < p.values.size(); ++i) {
        double c = std::round(std::expm1(p.values[i]));
        out.values[i] = c <= 0.0 ? 0u : static_cast<uint32_t>(c);
    }
    return out;
}

}  // namespace trajgen
