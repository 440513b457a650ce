#ifndef CRANKLAB_LATTICE_HPP
#define CRANKLAB_LATTICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cranklab/order.hpp"

namespace cranklab {

struct NotALattice : SboolError {
  using SboolError::SboolError;
};
struct NotSupMap : SboolError {
  NotSupMap(std::string msg, std::vector<std::size_t> subset)
      : SboolError(std::move(msg)), violating_subset(std::move(subset)) {}
  std::vector<std::size_t> violating_subset;
};
struct NotIndependent : SboolError {
  using SboolError::SboolError;
};
struct NotAJoinDecomposition : SboolError {
  using SboolError::SboolError;
};

class Lattice {
 public:
  /// Checks that every pair has a unique least upper bound and greatest
  /// lower bound; throws NotALattice naming the offending pair otherwise.
  static Lattice validate(Poset p);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  bool le(std::size_t i, std::size_t j) const { return poset_.le(i, j); }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  /// join of emptyset = bottom, meet of emptyset = top.
  std::size_t join_set(std::span<const std::size_t> xs) const;
  std::size_t meet_set(std::span<const std::size_t> xs) const;
  std::size_t join_mask(std::uint64_t mask) const;
  std::size_t meet_mask(std::uint64_t mask) const;

 private:
  explicit Lattice(Poset p) : poset_(std::move(p)) {}
  Poset poset_;
  std::vector<std::size_t> join_, meet_;
  std::size_t bottom_ = 0, top_ = 0;
};

struct IrreducibleFlags {
  bool sji = false, ji = false, smi = false, mi = false;
};

struct IrreducibleReport {
  std::vector<IrreducibleFlags> flags;
  std::size_t sji_count = 0, sji_not_bottom = 0, ji_not_bottom = 0;
  std::size_t smi_count = 0, smi_not_top = 0, mi_not_top = 0;

  /// The spectral dimension ss(L): the number of mi's != T.
  std::size_t ss() const { return mi_not_top; }
};

IrreducibleReport classify_irreducibles(const Lattice& l);

struct DistributivityCheck {
  bool distributive = true;
  std::array<std::size_t, 3> counterexample{};  // (s, t, t') when not
};
DistributivityCheck check_distributive(const Lattice& l);

/// The spectral morphism into B^{ss(L)}. Coordinates are indexed by the
/// mi's != T in input order; the bit for coordinate m at x is [x "not<=" m],
/// which makes the map monotone with the usual order on B (the fibers and
/// the image agree with the x <= m convention up to flipping every bit).
struct SpecResult {
  std::vector<std::size_t> coordinates;               // mi != T indices
  std::vector<std::uint64_t> vector_of;               // per lattice element
  std::vector<std::uint64_t> image_vectors;           // distinct, ascending
  std::vector<std::size_t> image_index_of;            // element -> image pos
  std::vector<std::vector<std::size_t>> fibers;       // grouped by image pos
  std::optional<Lattice> image;                       // induced lattice
  bool injective = false;
  bool order_embedding = false;  // spec iso onto its image
};
SpecResult spec_morphism(const Lattice& l);

/// Checks phi(vee X) = vee phi(X) for all X (exhaustively when |dom| <= 12,
/// else on pairs plus the empty set).
struct SupMapCheck {
  bool ok = true;
  std::vector<std::size_t> violating_subset;
};
SupMapCheck verify_sup_map(const Lattice& dom, const Lattice& cod,
                           const std::vector<std::size_t>& map);

/// psi(y) = join of the phi-preimage of y. Throws NotSupMap.
std::vector<std::size_t> adjoint_sup_map(const Lattice& dom, const Lattice& cod,
                                         const std::vector<std::size_t>& map);

/// Independence of W in the lattice, with the witness arranged so that
/// elements[i] is diagonal-paired with witness[i] (triangular order, top
/// row of form (3) first).
struct LatticeWitness {
  std::vector<std::size_t> elements;  // W in triangular order
  std::vector<std::size_t> witness;   // U, positionally paired
};
std::optional<LatticeWitness> lattice_independent(
    const Lattice& l, const std::vector<std::size_t>& w,
    const SbLimits& limits = {});

/// Verifies the triangular conditions directly on the order:
/// elements[i] "not<=" witness[i], and elements[j] <= witness[i] for j > i.
bool lattice_witness_valid(const Lattice& l, const LatticeWitness& w);

/// Replaces w[j] = part1 v part2 by whichever part keeps the same witness
/// (part1 preferred).
std::vector<std::size_t> join_split(const Lattice& l,
                                    const std::vector<std::size_t>& w,
                                    std::size_t j, std::size_t part1,
                                    std::size_t part2,
                                    const SbLimits& limits = {});

/// Same-cardinality independent set of sji-not-bottom elements.
std::vector<std::size_t> refine_to_sji(const Lattice& l,
                                       const std::vector<std::size_t>& w,
                                       const SbLimits& limits = {});

/// Both constructive directions of the rank = height theorem.
struct RankCertificates {
  std::size_t c_rank = 0;
  std::size_t height = 0;
  std::vector<std::size_t> chain;          // longest chain, bottom to top
  LatticeWitness witness_from_chain;       // certifies independence of chain tail
  std::vector<std::size_t> chain_from_witness;  // strict chain from the witness
};
RankCertificates crank_equals_height_certificates(const Lattice& l,
                                                  const SbLimits& limits = {});

/// Certifies independence of a chain c_0 < c_1 < ... < c_k that starts at
/// the bottom: W = {c_1..c_k} with witness U = {c_0..c_{k-1}}.
LatticeWitness witness_from_chain(const Lattice& l,
                                  const std::vector<std::size_t>& chain);

/// The strict chain m_k^ <= ... <= m_1^ recovered from a witness via
/// suffix meets; returned ascending, without the top.
std::vector<std::size_t> chain_from_witness(const Lattice& l,
                                            const LatticeWitness& w);

struct NotAPush : SboolError {
  NotAPush(std::string msg, std::size_t index)
      : SboolError(std::move(msg)), index(index) {}
  std::size_t index;
};

/// Verifies that pushed is a push of base (pushed[i] <= base.elements[i]
/// and pushed[i] "not<=" base.witness[i]); throws NotAPush with the failing
/// index. Returns the pushed set with the same witness.
LatticeWitness verify_push(const Lattice& l, const LatticeWitness& base,
                           const std::vector<std::size_t>& pushed);

}  // namespace cranklab

#endif
