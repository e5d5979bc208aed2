#pragma once

#include <cstddef>
#include <vector>

namespace conflie {

// Weakly decreasing positive parts; the empty partition is allowed.
using Partition = std::vector<std::size_t>;

std::size_t weight(const Partition& p);
Partition conjugate(const Partition& p);
Partition normalized(std::vector<std::size_t> parts);  // sort decreasing, drop zeros
Partition partition_union(const Partition& a, const Partition& b);

// a dominates b (both of the same weight).
bool dominates(const Partition& a, const Partition& b);

// All partitions of n, deterministic order.
std::vector<Partition> partitions_of(std::size_t n);

// Multiplicity of the part m.
std::size_t part_multiplicity(const Partition& p, std::size_t m);

}  // namespace conflie
