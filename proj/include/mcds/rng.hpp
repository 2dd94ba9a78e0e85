#pragma once

#include <cstdint>

#include "mcds/graph.hpp"

namespace mcds {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** — seedable, platform-independent stream for benchmarks and
// property tests.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

inline Graph random_gnp(int n, double p, Xoshiro256& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) b.add_edge(u, v);
    return std::move(b).build();
}

// Rejection-samples G(n,p) until connected.
inline Graph random_connected_gnp(int n, double p, Xoshiro256& rng) {
    for (;;) {
        Graph g = random_gnp(n, p, rng);
        if (n == 0 || component_count(g) == 1) return g;
    }
}

// Uniform labeled random tree (random parent among earlier vertices).
inline Graph random_tree(int n, Xoshiro256& rng) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        b.add_edge(v, static_cast<int>(rng.next_below(v)));
    return std::move(b).build();
}

}  // namespace mcds
