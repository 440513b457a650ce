#ifndef CRANKLAB_CHAINS_HPP
#define CRANKLAB_CHAINS_HPP

#include <cstdint>
#include <vector>

#include "cranklab/lattice.hpp"

namespace cranklab {

struct ChainLimits {
  std::size_t max_chains = 100000;
};

struct ChainLimitExceeded : SizeLimitExceeded {
  using SizeLimitExceeded::SizeLimitExceeded;
};
struct NotMaximalChain : SboolError {
  using SboolError::SboolError;
};

/// Blocks Q_i = down(p_{i-1}) \ down(p_i) along a maximal top-to-bottom
/// chain; they partition L \ {bottom}.
struct ChainPartition {
  std::vector<std::size_t> chain;                // T = p_0 > ... > p_k = B
  std::vector<std::vector<std::size_t>> blocks;  // Q_1..Q_k, ascending inside
};

/// All maximal top-to-bottom chains, DFS descending by element index.
std::vector<std::vector<std::size_t>> maximal_chains(
    const Lattice& l, const ChainLimits& limits = {});

ChainPartition partition_of_chain(const Lattice& l,
                                  const std::vector<std::size_t>& chain);

bool is_partial_cross_section(const ChainPartition& part,
                              const std::vector<std::size_t>& x);

/// Maximum-cardinality cross sections: one element per block.
std::vector<std::vector<std::size_t>> bases(const ChainPartition& part);

/// Every cross section reachable by dropping elements as well (<= 1 per
/// block), i.e. the partial cross sections themselves, as sorted subsets.
std::vector<std::vector<std::size_t>> enumerate_pushes(
    const ChainPartition& part);

/// X independent iff it is a partial cross section of some maximal chain
/// partition.
bool independent_via_partitions(const Lattice& l,
                                const std::vector<std::size_t>& x,
                                const ChainLimits& limits = {});

/// All independent subsets (canonical: sorted subsets, ordered
/// lexicographically) as the union of partial cross sections over all
/// maximal chain partitions.
std::vector<std::vector<std::size_t>> enumerate_independent(
    const Lattice& l, const ChainLimits& limits = {});

}  // namespace cranklab

#endif
