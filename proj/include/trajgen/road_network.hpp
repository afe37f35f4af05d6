#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "trajgen/geo.hpp"
#include "trajgen/rng.hpp"
#include "trajgen/tile.hpp"

namespace trajgen {

struct GeoBBox {
    double lat_min = 0.0, lat_max = 0.0;
    double lon_min = 0.0, lon_max = 0.0;
};

struct RoadEdge {
    int a = 0;
    int b = 0;
    double speed_mps = 0.0;
};

struct RoadNetwork {
    std::vector<GeoPoint> nodes;
    std::vector<RoadEdge> edges;
};

enum class NetStyleKind { Grid, PerturbedGrid, Radial };

struct NetStyle {
    NetStyleKind kind = NetStyleKind::Grid;
    int blocks = 2;   // grid blocks per side -> (blocks+1)^2 nodes
    int rings = 2;    // radial style
    int spokes = 6;   // radial style
};

// L-inf jitter bound (degrees, per axis) the perturbed-grid generator honors.
inline constexpr double kGridJitterFraction = 0.25;

namespace detail {

inline void check_region(const GeoBBox& r) {
    if (!(r.lat_min < r.lat_max) || !(r.lon_min < r.lon_max)) {
        throw std::domain_error("gen_road_network: degenerate region");
    }
    // region must span at least 2x2 zoom-24 tiles
    TileIndex nw = lonlat_to_tile(make_geo_point(r.lat_max, r.lon_min), kMaxZoom);
    TileIndex se = lonlat_to_tile(make_geo_point(r.lat_min, r.lon_max), kMaxZoom);
    if (se.tx - nw.tx < 1 || se.ty - nw.ty < 1) {
        throw std::domain_error("gen_road_network: region smaller than 2x2 tiles");
    }
}

inline bool connected(const RoadNetwork& net) {
    if (net.nodes.empty()) return false;
    std::vector<int> parent(net.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : net.edges) parent[find(e.a)] = find(e.b);
    int root = find(0);
    for (int i = 1; i < static_cast<int>(net.nodes.size()); ++i) {
        if (find(i) != root) return false;
    }
    return true;
}

}  // namespace detail

inline double jitter_radius_lat(const GeoBBox& region, const NetStyle& style) {
    return kGridJitterFraction * (region.lat_max - region.lat_min) / (style.blocks + 1);
}

inline double jitter_radius_lon(const GeoBBox& region, const NetStyle& style) {
    return kGridJitterFraction * (region.lon_max - region.lon_min) / (style.blocks + 1);
}

// Deterministic synthetic road network inside `region`.
inline RoadNetwork gen_road_network(const GeoBBox& region, const NetStyle& style,
                                    uint64_t seed) {
    detail::check_region(region);
    RoadNetwork net;
    RngStream speed_rng(seed, "roadnet.speed");
    auto edge_speed = [&] { return speed_rng.uniform(8.0, 20.0); };

    switch (style.kind) {
        case NetStyleKind::Grid:
        case NetStyleKind::PerturbedGrid: {
            const int b = style.blocks;
            if (b < 1) throw std::domain_error("gen_road_network: blocks must be >= 1");
            const int side = b + 1;
            // inset lattice so jittered nodes stay inside the region
            const double mlat = (region.lat_max - region.lat_min) / (side + 1);
            const double mlon = (region.lon_max - region.lon_min) / (side + 1);
            const double jlat = jitter_radius_lat(region, style);
            const double jlon = jitter_radius_lon(region, style);
            RngStream jitter_rng(seed, "roadnet.jitter");
            for (int i = 0; i < side; ++i) {
                for (int j = 0; j < side; ++j) {
                    double lat = region.lat_min + mlat * (i + 1);
                    double lon = region.lon_min + mlon * (j + 1);
                    if (style.kind == NetStyleKind::PerturbedGrid) {
                        lat += jitter_rng.uniform(-jlat, jlat);
                        lon += jitter_rng.uniform(-jlon, jlon);
                    }
                    net.nodes.push_back(make_geo_point(lat, lon));
                }
            }
            for (int i = 0; i < side; ++i) {
                for (int j = 0; j < side; ++j) {
                    int id = i * side + j;
                    if (j + 1 < side) net.edges.push_back({id, id + 1, edge_speed()});
                    if (i + 1 < side) net.edges.push_back({id, id + side, edge_speed()});
                }
            }
            break;
        }
        case NetStyleKind::Radial: {
            if (style.rings < 1 || style.spokes < 3) {
                throw std::domain_error("gen_road_network: radial needs rings >= 1, spokes >= 3");
            }
            const double clat = 0.5 * (region.lat_min + region.lat_max);
            const double clon = 0.5 * (region.lon_min + region.lon_max);
            const double rlat = 0.45 * (region.lat_max - region.lat_min);
            const double rlon = 0.45 * (region.lon_max - region.lon_min);
            net.nodes.push_back(make_geo_point(clat, clon));
            for (int r = 1; r <= style.rings; ++r) {
                double f = static_cast<double>(r) / style.rings;
                for (int s = 0; s < style.spokes; ++s) {
                    double th = 2.0 * M_PI * s / style.spokes;
                    net.nodes.push_back(make_geo_point(clat + f * rlat * std::sin(th),
                                                       clon + f * rlon * std::cos(th)));
                }
            }
            auto ring_node = [&](int r, int s) { return 1 + (r - 1) * style.spokes + s; };
            for (int s = 0; s < style.spokes; ++s) {
                net.edges.push_back({0, ring_node(1, s), edge_speed()});
                for (int r = 1; r < style.rings; ++r) {
                    net.edges.push_back({ring_node(r, s), ring_node(r + 1, s), edge_speed()});
                }
                for (int r = 1; r <= style.rings; ++r) {
                    net.edges.push_back(
                        {ring_node(r, s), ring_node(r, (s + 1) % style.spokes), edge_speed()});
                }
            }
            break;
        }
    }
    return net;
}

// Equirectangular edge length in meters; good at patch scale.
inline double edge_length_m(const GeoPoint& a, const GeoPoint& b) {
    double dy = (b.lat - a.lat) * kMetersPerDegLat;
    double midlat = 0.5 * (a.lat + b.lat) * kDegToRad;
    double dx = (b.lon - a.lon) * kMetersPerDegLat * std::cos(midlat);
    return std::hypot(dx, dy);
}

}  // namespace trajgen
