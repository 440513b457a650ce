#ifndef CRANKLAB_HEREDITARY_HPP
#define CRANKLAB_HEREDITARY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cranklab/lattice.hpp"

namespace cranklab {

struct NotDownwardClosed : SboolError {
  NotDownwardClosed(std::string msg, std::uint64_t subset, std::uint64_t member)
      : SboolError(std::move(msg)), subset(subset), member(member) {}
  std::uint64_t subset, member;  // subset missing, member present
};
struct EmptyFamily : SboolError {
  using SboolError::SboolError;
};
struct GhostEntries : SboolError {
  using SboolError::SboolError;
};
struct NotSimple : SboolError {
  using SboolError::SboolError;
};
struct GroundSetTooLarge : SboolError {
  using SboolError::SboolError;
};

/// A nonempty downward-closed family of subsets of the ground set.
struct HeredCollection {
  std::vector<std::string> ground;
  std::vector<std::uint64_t> family;  // sorted bit masks

  bool contains(std::uint64_t mask) const;
  /// Inclusion-maximal members.
  std::vector<std::uint64_t> bases() const;
};

HeredCollection validate_hered(std::vector<std::string> ground,
                               std::vector<std::uint64_t> family);
/// Downward closure of the given bases.
HeredCollection hered_from_bases(std::vector<std::string> ground,
                                 const std::vector<std::uint64_t>& bases);

/// Inclusion-minimal non-members.
std::vector<std::uint64_t> circuits(const HeredCollection& h);
/// Singleton circuits, as element indices.
std::vector<std::size_t> loops(const HeredCollection& h);
/// Two-element circuits, as index pairs.
std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs(
    const HeredCollection& h);
bool is_simple(const HeredCollection& h);

struct PrCheck {
  bool ok = true;
  std::size_t point = 0;       // p with {p} in H
  std::uint64_t violating = 0; // J admitting no replacement
};
/// Point replacement: for every {p} in H and nonempty J in H, some x in J
/// has (J - x) + p in H.
PrCheck satisfies_pr(const HeredCollection& h);

/// H = { column subsets that are independent }.
HeredCollection collection_of_matrix(const SbMatrix& m,
                                     const SbLimits& limits = {});

/// The augmentation of a boolean matrix representing a simple collection:
/// B = rows of A plus every row with exactly one zero; A' = sup-closure of
/// B's rows (coordinatewise max); closed sets are the zero-supports r^(0).
struct AugmentResult {
  SbMatrix a_prime;                       // deduplicated rows, sorted
  std::vector<std::uint64_t> row_vectors; // row bit masks (bit j = One entry)
  std::vector<std::uint64_t> closed_sets; // complements, sorted ascending
  Lattice row_lattice;                    // rows under coordinatewise order
  Lattice closed_lattice;                 // closed sets under inclusion
  /// closed_lattice index -> row_lattice index (the reverse isomorphism).
  std::vector<std::size_t> reverse_iso;
};
AugmentResult augment_construction(const SbMatrix& m,
                                   const SbLimits& limits = {});

/// The partition of the ground set cut out by a maximal chain of closed
/// sets, reused by the representability search.
struct GroundPartition {
  std::vector<std::uint64_t> blocks;  // disjoint masks covering the ground set
};

enum class ReprStatus { Sat, Unsat, SatMatrixFailed };

struct ReprObstruction {
  GroundPartition partition;  // admits an obstructed basis
  std::vector<std::uint64_t> violating_sections;  // full sections not in H
};

struct ReprVerdict {
  ReprStatus status = ReprStatus::Unsat;
  /// SAT: partitions whose partial cross sections union to H.
  std::vector<GroundPartition> partitions;
  /// SAT: a representing boolean matrix built from the partitions, verified
  /// by a collection_of_matrix round trip (absent when that check failed).
  std::optional<SbMatrix> matrix;
  /// UNSAT: the least basis no admissible partition covers, plus every
  /// partition admitting some basis of H together with its full cross
  /// sections that fall outside H.
  std::uint64_t obstructed_basis = 0;
  std::vector<ReprObstruction> obstructions;
};

/// Decides whether H is the union of the partial-cross-section families of
/// some set of partitions of E (ground cap 7).
ReprVerdict partition_representability(const HeredCollection& h,
                                       std::size_t ground_cap = 7);

}  // namespace cranklab

#endif
