#include <catch2/catch_amalgamated.hpp>

#include "trajgen/traffic_sim.hpp"

using namespace trajgen;

namespace {

const GeoBBox kRegion{40.0, 40.01, -74.01, -74.0};

RoadNetwork test_net(uint64_t seed = 5) {
    return gen_road_network(kRegion, NetStyle{NetStyleKind::PerturbedGrid, 3}, seed);
}

size_t total_points(const std::vector<Trajectory>& trajs) {
    size_t n = 0;
    for (const auto& t : trajs) n += t.points.size();
    return n;
}

}  // namespace

TEST_CASE("heading_of compass anchors") {
    GeoPoint base{10.0, 20.0};
    CHECK(heading_of(base, GeoPoint{10.001, 20.0}) == Catch::Approx(0.0).margin(1e-9));
    CHECK(heading_of(base, GeoPoint{10.0, 20.001}) == Catch::Approx(90.0).margin(1e-6));
    CHECK(heading_of(base, GeoPoint{9.999, 20.0}) == Catch::Approx(180.0).margin(1e-6));
    CHECK(heading_of(base, GeoPoint{10.0, 19.999}) == Catch::Approx(270.0).margin(1e-6));
    // small-step symmetry at the equator
    CHECK(heading_of(GeoPoint{0.0, 0.0}, GeoPoint{1e-5, 1e-5}) ==
          Catch::Approx(45.0).margin(0.01));
    CHECK_THROWS_AS(heading_of(base, base), std::domain_error);
}

TEST_CASE("simulation rejects invalid arguments") {
    RoadNetwork net = test_net();
    ObservationInterval iv = make_interval(0.0, 600.0);
    SimOptions opt;
    opt.agent_rate = 0.0;
    CHECK_THROWS_AS(simulate_traffic(net, iv, opt, 1), std::domain_error);
    SimOptions opt2;
    opt2.sample_period = 0.0;
    CHECK_THROWS_AS(simulate_traffic(net, iv, opt2, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_traffic(RoadNetwork{}, iv, SimOptions{}, 1), std::domain_error);
    CHECK_THROWS_AS(make_interval(0.0, 0.0), std::domain_error);
}

TEST_CASE("simulation is deterministic and stays inside the interval") {
    RoadNetwork net = test_net();
    ObservationInterval iv = make_interval(1000.0, 600.0);
    SimOptions opt;
    auto a = simulate_traffic(net, iv, opt, 77);
    auto b = simulate_traffic(net, iv, opt, 77);
    REQUIRE(a.size() == b.size());
    REQUIRE(!a.empty());
    for (size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].agent_id == b[i].agent_id);
        REQUIRE(a[i].points.size() == b[i].points.size());
        for (size_t j = 0; j < a[i].points.size(); ++j) {
            REQUIRE(a[i].points[j].position.lat == b[i].points[j].position.lat);
            REQUIRE(a[i].points[j].position.lon == b[i].points[j].position.lon);
            REQUIRE(a[i].points[j].timestamp == b[i].points[j].timestamp);
            REQUIRE(a[i].points[j].heading == b[i].points[j].heading);
        }
    }
    for (const auto& traj : a) {
        REQUIRE(traj.points.size() >= 2);
        for (size_t j = 0; j < traj.points.size(); ++j) {
            const auto& pt = traj.points[j];
            REQUIRE(pt.timestamp >= iv.start);
            REQUIRE(pt.timestamp < iv.end());
            REQUIRE(pt.heading >= 0.0);
            REQUIRE(pt.heading < 360.0);
            if (j > 0) REQUIRE(pt.timestamp > traj.points[j - 1].timestamp);
        }
    }
}

TEST_CASE("zero-noise points lie exactly on an edge polyline") {
    RoadNetwork net = test_net(11);
    ObservationInterval iv = make_interval(0.0, 300.0);
    SimOptions opt;
    opt.gps_noise_sigma = 0.0;
    auto trajs = simulate_traffic(net, iv, opt, 3);
    REQUIRE(!trajs.empty());
    auto on_some_edge = [&](const GeoPoint& p) {
        for (const auto& e : net.edges) {
            const GeoPoint& a = net.nodes[e.a];
            const GeoPoint& b = net.nodes[e.b];
            double dlat = b.lat - a.lat, dlon = b.lon - a.lon;
            double t = std::abs(dlat) > std::abs(dlon) ? (p.lat - a.lat) / dlat
                                                       : (p.lon - a.lon) / dlon;
            if (t < -1e-9 || t > 1.0 + 1e-9) continue;
            double elat = a.lat + t * dlat, elon = a.lon + t * dlon;
            if (std::abs(elat - p.lat) < 1e-9 && std::abs(elon - p.lon) < 1e-9) return true;
        }
        return false;
    };
    for (const auto& traj : trajs) {
        for (const auto& pt : traj.points) {
            REQUIRE(on_some_edge(pt.position));
        }
    }
}

TEST_CASE("stored headings match the direction of motion") {
    // one long straight road sampled densely, so consecutive points share edges
    RoadNetwork net;
    net.nodes.push_back(make_geo_point(40.0, -74.0));
    net.nodes.push_back(make_geo_point(40.02, -74.0));
    net.edges.push_back({0, 1, 10.0});
    ObservationInterval iv = make_interval(0.0, 400.0);
    SimOptions opt;
    opt.gps_noise_sigma = 0.0;
    opt.sample_period = 2.0;
    opt.agent_rate = 0.02;
    auto trajs = simulate_traffic(net, iv, opt, 19);
    REQUIRE(!trajs.empty());
    int checked = 0;
    for (const auto& traj : trajs) {
        for (size_t j = 0; j + 1 < traj.points.size(); ++j) {
            const auto& p = traj.points[j];
            const auto& q = traj.points[j + 1];
            if (p.heading != q.heading) continue;  // corner pair, skip
            double h = heading_of(p.position, q.position);
            double diff = std::abs(h - p.heading);
            diff = std::min(diff, 360.0 - diff);
            REQUIRE(diff < 0.5);
            ++checked;
        }
    }
    REQUIRE(checked > 50);
}

TEST_CASE("expected point count scales linearly with the interval duration") {
    RoadNetwork net = test_net(23);
    SimOptions opt;
    opt.agent_rate = 0.08;
    double sum_short = 0.0, sum_long = 0.0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        sum_short += static_cast<double>(
            total_points(simulate_traffic(net, make_interval(0.0, 600.0), opt, seed)));
        sum_long += static_cast<double>(
            total_points(simulate_traffic(net, make_interval(0.0, 1200.0), opt, seed)));
    }
    double ratio = sum_long / sum_short;
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
}
