#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mcds/vertex_set.hpp"

namespace mcds {

constexpr std::uint64_t kBinomCap = std::numeric_limits<std::uint64_t>::max();

// Binomial coefficient, saturating at kBinomCap.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kBinomCap) return kBinomCap;
    }
    return static_cast<std::uint64_t>(r);
}

// k-combinations of index positions 0..n-1 in colexicographic order, with
// random access by rank (combinatorial number system) for work splitting.
class ColexCombinations {
public:
    ColexCombinations(int n, int k) : n_(n), k_(k) {}

    std::uint64_t total() const { return binom(n_, k_); }

    std::vector<int> unrank(std::uint64_t rank) const {
        std::vector<int> c(k_);
        for (int i = k_; i >= 1; --i) {
            int x = i - 1;
            while (x + 1 < n_ && binom(x + 1, i) <= rank) ++x;
            c[i - 1] = x;
            rank -= binom(x, i);
        }
        return c;
    }

    // Advances c to its colex successor; false when exhausted.
    bool advance(std::vector<int>& c) const {
        for (int i = 0; i < k_; ++i) {
            int limit = (i + 1 < k_) ? c[i + 1] : n_;
            if (c[i] + 1 < limit) {
                ++c[i];
                for (int j = 0; j < i; ++j) c[j] = j;
                return true;
            }
        }
        return false;
    }

private:
    int n_;
    int k_;
};

inline VertexSet positions_to_set(int universe, const std::vector<int>& ids,
                                  const std::vector<int>& positions) {
    VertexSet s(universe);
    for (int p : positions) s.insert(ids[p]);
    return s;
}

}  // namespace mcds
