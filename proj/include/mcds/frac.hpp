#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcds {

// Exact rational for thresholds of the form "fraction of n". All comparisons
// are cross-multiplied in 128-bit integers; no floating point.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("Frac: denominator must be positive");
    }
};

// count >= f * n
inline bool at_least_fraction(std::int64_t count, const Frac& f, std::int64_t n) {
    return static_cast<__int128>(count) * f.den >= static_cast<__int128>(f.num) * n;
}

// count < f * n
inline bool below_fraction(std::int64_t count, const Frac& f, std::int64_t n) {
    return static_cast<__int128>(count) * f.den < static_cast<__int128>(f.num) * n;
}

// floor(f * n), assumes f >= 0
inline std::int64_t floor_mul(const Frac& f, std::int64_t n) {
    return static_cast<std::int64_t>((static_cast<__int128>(f.num) * n) / f.den);
}

// Parses "p/q" or "p".
inline Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Frac(std::stoll(s), 1);
    return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace mcds
