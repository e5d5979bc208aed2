#pragma once

#include <cstdint>
#include <string>

#include "conflie/fibre.hpp"
#include "conflie/rng.hpp"

namespace conflie {

struct Instance {
    Panel panel;
    std::uint64_t seed = 0;
    std::string kind;
};

// d labeled points with integer coordinates in general position in P^r:
// every maximal minor of the (1, coords) matrix is nonzero. Panel = span of
// the coordinate functions and the constants.
Instance gen_general(std::size_t d, std::size_t r, std::uint64_t seed);

// Panel spanned by 1 and a single function with d distinct values.
Instance gen_chain(std::size_t d, std::uint64_t seed);

// Panel spanned by the indicator functions of n_blocks classes; the
// filtration stabilizes immediately.
Instance gen_blocks(std::size_t d, std::size_t n_blocks, std::uint64_t seed);

// d = 2m points on the degree m-1 rational normal curve: panel = values of
// 1, s, ..., s^{m-1} at 2m distinct parameters.
Instance gen_rnc(std::size_t m, std::uint64_t seed);

// Disjoint union with block-diagonal panel.
Instance gen_union(const Instance& a, const Instance& b);

Instance generate(const std::string& kind, std::size_t d, std::size_t r, std::size_t m,
                  std::size_t n_blocks, std::uint64_t seed);

}  // namespace conflie
