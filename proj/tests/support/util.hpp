#ifndef CRANKLAB_TESTS_UTIL_HPP
#define CRANKLAB_TESTS_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cranklab/lattice.hpp"

namespace cranklab::testing {

inline Poset make_poset(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  return Poset::validate(
      structured_set_from_pairs(std::move(labels), covers, true));
}

inline Lattice make_lattice(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  return Lattice::validate(make_poset(std::move(labels), covers));
}

inline std::vector<std::size_t> mask_to_vec(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

inline std::uint64_t vec_to_mask(const std::vector<std::size_t>& v) {
  std::uint64_t mask = 0;
  for (std::size_t i : v) mask |= (1ull << i);
  return mask;
}

inline std::vector<std::string> index_labels(std::size_t n,
                                             const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace cranklab::testing

#endif
