#ifndef CRANKLAB_ORDER_HPP
#define CRANKLAB_ORDER_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cranklab/sbool.hpp"

namespace cranklab {

/// A finite set with a boolean structure matrix: entry (i,j) = 1 iff
/// x_i R x_j.
struct StructuredSet {
  std::vector<std::string> elements;
  SbMatrix relation;
};

/// Every violated poset axiom, with witnessing pairs.
struct PosetDiagnostics {
  std::vector<std::size_t> not_reflexive;
  std::vector<std::pair<std::size_t, std::size_t>> not_antisymmetric;
  std::vector<std::array<std::size_t, 3>> not_transitive;

  bool ok() const {
    return not_reflexive.empty() && not_antisymmetric.empty() &&
           not_transitive.empty();
  }
  std::string describe(const std::vector<std::string>& labels) const;
};

struct NotAPoset : SboolError {
  NotAPoset(std::string msg, PosetDiagnostics d)
      : SboolError(std::move(msg)), diagnostics(std::move(d)) {}
  PosetDiagnostics diagnostics;
};
struct UnknownElement : SboolError {
  using SboolError::SboolError;
};

PosetDiagnostics check_poset_axioms(const StructuredSet& s);

class Poset {
 public:
  /// Throws NotAPoset with the full diagnostic list on failure.
  static Poset validate(StructuredSet s);

  std::size_t size() const { return base_.elements.size(); }
  const std::vector<std::string>& labels() const { return base_.elements; }
  const std::string& label(std::size_t i) const { return base_.elements[i]; }
  const SbMatrix& relation() const { return base_.relation; }
  const StructuredSet& base() const { return base_; }

  bool le(std::size_t i, std::size_t j) const {
    return base_.relation.at(i, j) == Sb::One;
  }
  bool lt(std::size_t i, std::size_t j) const { return i != j && le(i, j); }

  Poset reversed() const;

  std::vector<std::size_t> up_set(std::size_t x) const;
  std::vector<std::size_t> down_set(std::size_t x) const;
  bool is_order_ideal(const std::vector<std::size_t>& ideal) const;

  /// Transitive reduction: pairs (x, y) with x covered by y.
  const std::vector<std::pair<std::size_t, std::size_t>>& covering_relation() const;
  /// Upper covers of x, ascending.
  std::vector<std::size_t> covers_of(std::size_t x) const;
  std::vector<std::size_t> covered_by(std::size_t x) const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  struct Height {
    std::size_t length = 0;               // edge count of the longest chain
    std::vector<std::size_t> chain;       // lexicographically least maximizer
  };
  Height height() const;

 private:
  explicit Poset(StructuredSet s) : base_(std::move(s)) {}
  StructuredSet base_;
  mutable std::vector<std::pair<std::size_t, std::size_t>> covers_;
  mutable bool covers_ready_ = false;
};

/// Builds a reflexive relation matrix from <= pairs given as index pairs.
StructuredSet structured_set_from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::size_t, std::size_t>>& le_pairs,
    bool transitive_closure = false);

/// The matrix whose columns are the element vectors x -> [x "not<=" i],
/// i.e. the transpose of the complement of the structure matrix. The
/// c-independent subsets of the structured set are exactly the independent
/// column subsets of this matrix; its rank equals rnk(complement(A)).
SbMatrix c_matrix(const StructuredSet& s);
inline SbMatrix c_matrix(const Poset& p) { return c_matrix(p.base()); }

struct CrankResult {
  std::size_t rank = 0;
  Witness witness;  // indices into the element list on both sides
};
CrankResult c_rank(const StructuredSet& s, const SbLimits& limits = {});
CrankResult c_rank(const Poset& p, const SbLimits& limits = {});

/// Independence of W as a subset of the structured set, with witness U
/// (elements paired positionally in triangular order).
std::optional<Witness> c_independent(const StructuredSet& s,
                                     const std::vector<std::size_t>& w,
                                     const SbLimits& limits = {});
std::optional<Witness> c_independent(const Poset& p,
                                     const std::vector<std::size_t>& w,
                                     const SbLimits& limits = {});

}  // namespace cranklab

#endif
