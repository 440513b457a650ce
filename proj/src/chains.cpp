#include "cranklab/chains.hpp"

#include <algorithm>
#include <set>

namespace cranklab {

std::vector<std::vector<std::size_t>> maximal_chains(const Lattice& l,
                                                     const ChainLimits& limits) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur{l.top()};
  // Descend over lower covers, smallest index first.
  auto dfs = [&](auto&& self, std::size_t x) -> void {
    if (x == l.bottom()) {
      if (out.size() >= limits.max_chains)
        throw ChainLimitExceeded("maximal chain count exceeds cap of " +
                                 std::to_string(limits.max_chains));
      out.push_back(cur);
      return;
    }
    for (std::size_t y : l.poset().covered_by(x)) {
      cur.push_back(y);
      self(self, y);
      cur.pop_back();
    }
  };
  dfs(dfs, l.top());
  return out;
}

ChainPartition partition_of_chain(const Lattice& l,
                                  const std::vector<std::size_t>& chain) {
  if (chain.empty() || chain.front() != l.top() || chain.back() != l.bottom())
    throw NotMaximalChain("chain must run from top to bottom");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto lower = l.poset().covered_by(chain[i]);
    if (std::find(lower.begin(), lower.end(), chain[i + 1]) == lower.end())
      throw NotMaximalChain("consecutive elements must be covering pairs");
  }
  ChainPartition part;
  part.chain = chain;
  std::size_t covered = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::vector<std::size_t> block;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (l.le(x, chain[i]) && !l.le(x, chain[i + 1])) block.push_back(x);
    covered += block.size();
    part.blocks.push_back(std::move(block));
  }
  if (covered + 1 != l.size())
    throw NotMaximalChain("blocks failed to partition the lattice");
  return part;
}

bool is_partial_cross_section(const ChainPartition& part,
                              const std::vector<std::size_t>& x) {
  for (const auto& block : part.blocks) {
    std::size_t hits = 0;
    for (std::size_t e : x)
      if (std::find(block.begin(), block.end(), e) != block.end()) ++hits;
    if (hits > 1) return false;
  }
  // Elements outside every block (only the bottom) disqualify the set.
  for (std::size_t e : x) {
    bool found = false;
    for (const auto& block : part.blocks)
      if (std::find(block.begin(), block.end(), e) != block.end()) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

namespace {

// Cartesian product over blocks; picker(i) yields the choices for block i
// (including "skip" when skippable).
void product_over_blocks(const ChainPartition& part, bool allow_skip,
                         std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == part.blocks.size()) {
      std::vector<std::size_t> s = cur;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    if (allow_skip) self(self, i + 1);
    for (std::size_t e : part.blocks[i]) {
      cur.push_back(e);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<std::size_t>> bases(const ChainPartition& part) {
  std::vector<std::vector<std::size_t>> out;
  product_over_blocks(part, false, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_pushes(
    const ChainPartition& part) {
  std::vector<std::vector<std::size_t>> out;
  product_over_blocks(part, true, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool independent_via_partitions(const Lattice& l,
                                const std::vector<std::size_t>& x,
                                const ChainLimits& limits) {
  for (const auto& chain : maximal_chains(l, limits))
    if (is_partial_cross_section(partition_of_chain(l, chain), x)) return true;
  return false;
}

std::vector<std::vector<std::size_t>> enumerate_independent(
    const Lattice& l, const ChainLimits& limits) {
  std::set<std::vector<std::size_t>> acc;
  for (const auto& chain : maximal_chains(l, limits)) {
    ChainPartition part = partition_of_chain(l, chain);
    for (auto& s : enumerate_pushes(part)) acc.insert(std::move(s));
  }
  return {acc.begin(), acc.end()};
}

}  // namespace cranklab
