#pragma once

#include <cmath>
#include <stdexcept>

namespace trajgen {

// Latitude band where the Web-Mercator projection is defined: atan(sinh(pi)).
inline constexpr double kMercatorMaxLat = 85.0511287798;

inline constexpr double kDegToRad = M_PI / 180.0;
inline constexpr double kRadToDeg = 180.0 / M_PI;

// Meters per degree of latitude (spherical earth, WGS84 mean radius).
inline constexpr double kMetersPerDegLat = 111320.0;

struct GeoPoint {
    double lat = 0.0;  // degrees, within [-kMercatorMaxLat, kMercatorMaxLat]
    double lon = 0.0;  // degrees, normalized to [-180, 180)
};

// Normalizes longitude to [-180, 180); +180 maps to -180.
inline double normalize_lon(double lon) {
    double x = std::fmod(lon + 180.0, 360.0);
    if (x < 0.0) x += 360.0;
    return x - 180.0;
}

inline GeoPoint make_geo_point(double lat, double lon) {
    if (!(lat >= -kMercatorMaxLat && lat <= kMercatorMaxLat)) {
        throw std::domain_error("latitude outside Mercator validity band");
    }
    return GeoPoint{lat, normalize_lon(lon)};
}

// Initial great-circle bearing from `from` to `to`, clockwise from north,
// in [0, 360).
inline double heading_of(const GeoPoint& from, const GeoPoint& to) {
    if (from.lat == to.lat && from.lon == to.lon) {
        throw std::domain_error("heading_of: coincident points");
    }
    double phi1 = from.lat * kDegToRad;
    double phi2 = to.lat * kDegToRad;
    double dlambda = (to.lon - from.lon) * kDegToRad;
    double y = std::sin(dlambda) * std::cos(phi2);
    double x = std::cos(phi1) * std::sin(phi2) -
               std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
    double deg = std::atan2(y, x) * kRadToDeg;
    if (deg < 0.0) deg += 360.0;
    if (deg >= 360.0) deg -= 360.0;
    return deg;
}

// Local meter offsets -> degree offsets at the given latitude.
inline double meters_to_deg_lat(double m) { return m / kMetersPerDegLat; }

inline double meters_to_deg_lon(double m, double at_lat) {
    return m / (kMetersPerDegLat * std::cos(at_lat * kDegToRad));
}

}  // namespace trajgen
