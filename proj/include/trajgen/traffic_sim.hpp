#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trajgen/geo.hpp"
#include "trajgen/rng.hpp"
#include "trajgen/road_network.hpp"

namespace trajgen {

struct TracePoint {
    GeoPoint position;
    double timestamp = 0.0;  // seconds since epoch
    double heading = 0.0;    // degrees, clockwise from north, [0, 360)
};

struct Trajectory {
    uint64_t agent_id = 0;
    std::vector<TracePoint> points;
};

struct ObservationInterval {
    double start = 0.0;
    double duration = 0.0;  // tau; must be > 0

    double end() const { return start + duration; }
};

inline ObservationInterval make_interval(double start, double duration) {
    if (!(duration > 0.0)) throw std::domain_error("ObservationInterval: duration must be > 0");
    return ObservationInterval{start, duration};
}

struct SimOptions {
    double agent_rate = 0.05;      // agent arrivals per second
    double gps_noise_sigma = 2.0;  // meters
    double sample_period = 5.0;    // seconds between emitted points
    double agent_lifetime = 60.0;  // seconds an agent stays on the road
};

namespace detail {

struct Adjacency {
    // per node: (neighbor node, edge speed)
    std::vector<std::vector<std::pair<int, double>>> nbr;
};

inline Adjacency build_adjacency(const RoadNetwork& net) {
    Adjacency adj;
    adj.nbr.resize(net.nodes.size());
    for (const auto& e : net.edges) {
        adj.nbr[e.a].push_back({e.b, e.speed_mps});
        adj.nbr[e.b].push_back({e.a, e.speed_mps});
    }
    for (auto& v : adj.nbr) std::sort(v.begin(), v.end());
    return adj;
}

}  // namespace detail

// Agents arrive as a Poisson process, walk edges at edge speed without
// immediate U-turns, and emit GPS samples every `sample_period` seconds with
// isotropic Gaussian position noise. Arrivals start `agent_lifetime` before
// the interval so the agent population is stationary; the expected point
// count is then linear in the interval duration. Trajectories with fewer
// than two in-interval points are dropped.
inline std::vector<Trajectory> simulate_traffic(const RoadNetwork& net,
                                                const ObservationInterval& interval,
                                                const SimOptions& opt, uint64_t seed) {
    if (net.nodes.empty() || net.edges.empty()) {
        throw std::domain_error("simulate_traffic: empty network");
    }
    if (!(opt.agent_rate > 0.0)) throw std::domain_error("simulate_traffic: agent_rate must be > 0");
    if (!(opt.sample_period > 0.0)) throw std::domain_error("simulate_traffic: sample_period must be > 0");
    if (!(opt.agent_lifetime > 0.0)) throw std::domain_error("simulate_traffic: agent_lifetime must be > 0");
    if (!(interval.duration > 0.0)) throw std::domain_error("simulate_traffic: empty interval");

    const auto adj = detail::build_adjacency(net);

    // spawn times over [start - lifetime, end)
    std::vector<double> spawns;
    {
        RngStream arrivals(seed, "sim.arrivals");
        double t = interval.start - opt.agent_lifetime;
        while (true) {
            t += arrivals.exponential(opt.agent_rate);
            if (t >= interval.end()) break;
            spawns.push_back(t);
        }
    }

    std::vector<Trajectory> out;
    for (uint64_t agent_id = 0; agent_id < spawns.size(); ++agent_id) {
        RngStream rng(seed, "sim.agent", agent_id);
        const double spawn = spawns[agent_id];
        const double despawn = spawn + opt.agent_lifetime;

        int prev_node = -1;
        int cur_node = static_cast<int>(rng.below(net.nodes.size()));

        Trajectory traj;
        traj.agent_id = agent_id;

        // walk one edge at a time, emitting due samples as we go
        double seg_start_t = spawn;
        double next_sample_t = spawn;
        while (seg_start_t < despawn) {
            const auto& candidates = adj.nbr[cur_node];
            // skip the reverse edge unless it is the only way out
            int pick;
            if (candidates.size() > 1 && prev_node >= 0) {
                std::vector<int> allowed;
                for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
                    if (candidates[i].first != prev_node) allowed.push_back(i);
                }
                pick = allowed[rng.below(allowed.size())];
            } else {
                pick = static_cast<int>(rng.below(candidates.size()));
            }
            const int next_node = candidates[pick].first;
            const double speed = candidates[pick].second;
            const GeoPoint from = net.nodes[cur_node];
            const GeoPoint to = net.nodes[next_node];
            const double seg_len = edge_length_m(from, to);
            const double seg_dur = seg_len / speed;
            const double seg_end_t = seg_start_t + seg_dur;
            const double hdg = heading_of(from, to);

            while (next_sample_t < despawn && next_sample_t < seg_end_t) {
                if (next_sample_t >= interval.start && next_sample_t < interval.end()) {
                    double f = (next_sample_t - seg_start_t) / seg_dur;
                    double lat = from.lat + f * (to.lat - from.lat);
                    double lon = from.lon + f * (to.lon - from.lon);
                    if (opt.gps_noise_sigma > 0.0) {
                        lat += meters_to_deg_lat(rng.normal(0.0, opt.gps_noise_sigma));
                        lon += meters_to_deg_lon(rng.normal(0.0, opt.gps_noise_sigma), lat);
                    }
                    lat = std::clamp(lat, -kMercatorMaxLat, kMercatorMaxLat);
                    traj.points.push_back({GeoPoint{lat, normalize_lon(lon)}, next_sample_t, hdg});
                }
                next_sample_t += opt.sample_period;
            }
            if (next_sample_t >= despawn) break;
            prev_node = cur_node;
            cur_node = next_node;
            seg_start_t = seg_end_t;
        }

        if (traj.points.size() >= 2) out.push_back(std::move(traj));
    }
    return out;
}

}  // namespace trajgen
