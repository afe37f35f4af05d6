#include <catch2/catch_amalgamated.hpp>

#include "trajgen/rng.hpp"
#include "trajgen/tile.hpp"

using namespace trajgen;

TEST_CASE("lonlat_to_tile anchors at zoom 24") {
    // Mercator center
    TileIndex t = lonlat_to_tile(GeoPoint{0.0, 0.0}, 24);
    CHECK(t.tx == 8388608);
    CHECK(t.ty == 8388608);

    // northwest corner of the grid
    TileIndex nw = lonlat_to_tile(GeoPoint{kMercatorMaxLat, -180.0}, 24);
    CHECK(nw.tx == 0);
    CHECK(nw.ty == 0);

    // fixtures computed from the closed-form formula in independent
    // high-precision scalar code
    TileIndex seattle = lonlat_to_tile(GeoPoint{47.6205, -122.3493}, 24);
    CHECK(seattle.tx == 2686717);
    CHECK(seattle.ty == 5858336);

    TileIndex sydney = lonlat_to_tile(GeoPoint{-33.8688, 151.2093}, 24);
    CHECK(sydney.tx == 15435472);
    CHECK(sydney.ty == 10067877);
}

TEST_CASE("lonlat_to_tile rejects out-of-band latitude") {
    CHECK_THROWS_AS(lonlat_to_tile(GeoPoint{86.0, 0.0}, 24), std::domain_error);
    CHECK_THROWS_AS(lonlat_to_tile(GeoPoint{-86.0, 0.0}, 24), std::domain_error);
    CHECK_THROWS_AS(lonlat_to_tile(GeoPoint{0.0, 0.0}, 25), std::domain_error);
}

TEST_CASE("longitude +180 wraps to -180") {
    TileIndex t = lonlat_to_tile(GeoPoint{0.0, 180.0}, 24);
    CHECK(t.tx == 0);
}

TEST_CASE("tile_to_lonlat corners and center") {
    GeoPoint nw = tile_to_lonlat(TileIndex{24, 0, 0});
    CHECK(nw.lon == Catch::Approx(-180.0));
    CHECK(nw.lat == Catch::Approx(kMercatorMaxLat).epsilon(1e-9));

    GeoPoint center = tile_to_lonlat(TileIndex{24, 8388608, 8388608});
    CHECK(center.lat == Catch::Approx(0.0).margin(1e-12));
    CHECK(center.lon == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("tile <-> lonlat round trip is the identity on random tiles") {
    RngStream rng(20240811, "tile.roundtrip");
    for (int i = 0; i < 10000; ++i) {
        TileIndex t{24, static_cast<int64_t>(rng.below(1u << 24)),
                    static_cast<int64_t>(rng.below(1u << 24))};
        TileIndex back = lonlat_to_tile(tile_center(t), 24);
        REQUIRE(back == t);
    }
}

TEST_CASE("forward/inverse consistency: point lies inside its tile bounds") {
    RngStream rng(7, "tile.containment");
    for (int i = 0; i < 2000; ++i) {
        GeoPoint p{rng.uniform(-84.0, 84.0), rng.uniform(-180.0, 180.0)};
        TileIndex t = lonlat_to_tile(p, 24);
        GeoPoint nw = tile_to_lonlat(t);
        GeoPoint se = tile_to_lonlat(TileIndex{24, t.tx + 1, t.ty + 1});
        REQUIRE(p.lon >= nw.lon);
        REQUIRE(p.lon < se.lon + 1e-12);
        REQUIRE(p.lat <= nw.lat + 1e-12);
        REQUIRE(p.lat > se.lat - 1e-12);
    }
}

TEST_CASE("monotonicity of the tile mapping") {
    RngStream rng(11, "tile.monotone");
    for (int i = 0; i < 500; ++i) {
        double lat = rng.uniform(-84.0, 84.0);
        double lon = rng.uniform(-179.0, 179.0);
        TileIndex a = lonlat_to_tile(GeoPoint{lat, lon}, 24);
        TileIndex b = lonlat_to_tile(GeoPoint{lat, lon + 0.001}, 24);
        REQUIRE(b.tx >= a.tx);
        TileIndex c = lonlat_to_tile(GeoPoint{lat + 0.001, lon}, 24);
        REQUIRE(c.ty <= a.ty);
    }
}

TEST_CASE("tile_to_pixel maps window coordinates") {
    PatchWindow w = make_patch_window(TileIndex{24, 1000, 2000}, 8);
    auto origin = tile_to_pixel(TileIndex{24, 1000, 2000}, w);
    REQUIRE(origin.has_value());
    CHECK(origin->first == 0);
    CHECK(origin->second == 0);

    auto east = tile_to_pixel(TileIndex{24, 1001, 2000}, w);
    REQUIRE(east.has_value());
    CHECK(east->first == 0);
    CHECK(east->second == 1);

    CHECK_FALSE(tile_to_pixel(TileIndex{24, 1008, 2000}, w).has_value());
    CHECK_FALSE(tile_to_pixel(TileIndex{24, 999, 2000}, w).has_value());

    CHECK_THROWS_AS(tile_to_pixel(TileIndex{23, 500, 1000}, w), std::domain_error);
}

TEST_CASE("patch window bounds are validated") {
    CHECK_THROWS_AS(make_patch_window(TileIndex{24, (1 << 24) - 4, 0}, 8), std::domain_error);
    CHECK_THROWS_AS(make_patch_window(TileIndex{24, 0, 0}, 0), std::domain_error);
}
