#ifndef CRANKLAB_COMPLETION_HPP
#define CRANKLAB_COMPLETION_HPP

#include <cstdint>
#include <vector>

#include "cranklab/lattice.hpp"

namespace cranklab {

/// A lattice of subsets of a ground set, ordered by inclusion, together
/// with the canonical embedding p -> down(p) of the source poset.
struct SetFamilyLattice {
  std::vector<std::string> ground;    // labels of the source poset
  std::vector<std::uint64_t> members; // sorted bit masks over the ground set
  std::vector<std::size_t> origin_map;// poset element -> index into members
  Lattice lattice;                    // inclusion order on members
};

/// Dedekind-MacNeille completion: intersection closure of the down-set
/// family, with the full ground set adjoined as top. The empty set appears
/// only when some intersection produces it.
SetFamilyLattice dm_completion(const Poset& p);

/// Union closure of the down-set family, with the empty set as bottom.
SetFamilyLattice union_closure(const Poset& p);

struct RestrictionReport {
  std::size_t rank_poset = 0;      // nk(P)
  std::size_t rank_dm = 0;         // nk(DM(P))
  std::size_t height_dm = 0;       // hgt(DM(P))
  /// Independent subsets of P (canonical sorted subsets) computed directly.
  std::vector<std::vector<std::size_t>> independent_poset;
  /// Independent subsets of DM(P) whose members all lie in the image of the
  /// embedding, pulled back to P.
  std::vector<std::vector<std::size_t>> independent_restricted;
  bool families_equal = false;
};

/// Checks that independence in DM(P), restricted to the embedded copy of P,
/// recovers exactly the independent subsets of P, and that
/// nk(P) = nk(DM(P)) = hgt(DM(P)).
RestrictionReport restrict_independence(const Poset& p,
                                        const SbLimits& limits = {});

}  // namespace cranklab

#endif
