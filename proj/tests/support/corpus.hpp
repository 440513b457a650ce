#ifndef CRANKLAB_TESTS_CORPUS_HPP
#define CRANKLAB_TESTS_CORPUS_HPP

#include <random>
#include <vector>

#include "cranklab/completion.hpp"
#include "cranklab/lattice.hpp"

namespace cranklab::testing {

/// Every labeled poset on exactly n elements (n <= 5).
std::vector<Poset> all_posets(std::size_t n);

/// Dedekind-MacNeille completions of every poset on <= 5 elements, kept
/// when their size is <= max_size and deduplicated up to isomorphism
/// (canonical relation matrix over all relabelings). Cached per max_size.
const std::vector<Lattice>& lattice_corpus(std::size_t max_size);

/// Seeded random lattice with 2..max_size elements (random poset followed
/// by completion, rejection-sampled on size).
Lattice random_lattice(std::mt19937& rng, std::size_t max_size);

/// A random surjective sup-map out of l: the closure operator of a random
/// meet-closed subset containing the top. Returns the image lattice and
/// the element map.
struct Quotient {
  Lattice image;
  std::vector<std::size_t> map;  // l element -> image element
};
Quotient random_quotient(std::mt19937& rng, const Lattice& l);

}  // namespace cranklab::testing

#endif
