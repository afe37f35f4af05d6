#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace trajgen {

// Counter-based random streams. Every consumer derives its own stream from
// (root seed, label, indices), so draws never depend on scheduling order and
// any point in the pipeline can be reproduced from the root seed alone.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class RngStream {
public:
    RngStream(uint64_t root_seed, std::string_view label,
              uint64_t i0 = 0, uint64_t i1 = 0, uint64_t i2 = 0) {
        uint64_t s = root_seed;
        s = mix(s, fnv1a64(label));
        s = mix(s, i0);
        s = mix(s, i1);
        s = mix(s, i2);
        state_ = s;
        // decorrelate streams whose inputs differ in few bits
        splitmix64(state_);
    }

    uint64_t u64() { return splitmix64(state_); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return u64() % n; }

    // standard normal via Box-Muller; second value cached
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // avoid log(0)
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // exponential inter-arrival time with the given rate
    double exponential(double rate) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return -std::log(u) / rate;
    }

private:
    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        return splitmix64(s);
    }

    uint64_t state_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace trajgen
