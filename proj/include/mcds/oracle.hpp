#pragma once

#include <stdexcept>
#include <vector>

#include "mcds/graph.hpp"

namespace mcds {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute force over all 2^n subsets; refuses n > 30. Output sorted by
// (size, lexicographic).
std::vector<VertexSet> oracle_enumerate(const Graph& g, int workers = 1);

// Brute force over all subsets of V - (I+O); same guard and ordering.
std::vector<VertexSet> oracle_extensions(const Graph& g, const VertexSet& in,
                                         const VertexSet& out, int workers = 1);

}  // namespace mcds
