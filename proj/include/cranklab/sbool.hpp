#ifndef CRANKLAB_SBOOL_HPP
#define CRANKLAB_SBOOL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cranklab {

/// The three-element superboolean semiring {0, 1, 1v}.
enum class Sb : std::uint8_t { Zero = 0, One = 1, Ghost = 2 };

constexpr Sb sb_add(Sb a, Sb b) {
  if (a == Sb::Ghost || b == Sb::Ghost) return Sb::Ghost;
  if (a == Sb::One && b == Sb::One) return Sb::Ghost;  // 1 + 1 = 1v
  return (a == Sb::One || b == Sb::One) ? Sb::One : Sb::Zero;
}

constexpr Sb sb_mul(Sb a, Sb b) {
  if (a == Sb::Zero || b == Sb::Zero) return Sb::Zero;
  if (a == Sb::Ghost || b == Sb::Ghost) return Sb::Ghost;
  return Sb::One;
}

/// Membership in the ghost ideal G0 = {0, 1v}.
constexpr bool in_ghost_ideal(Sb a) { return a != Sb::One; }

char sb_char(Sb a);
Sb sb_parse(char c);

struct SboolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSquare : SboolError {
  using SboolError::SboolError;
};
struct SizeLimitExceeded : SboolError {
  using SboolError::SboolError;
};
struct EmptySelection : SboolError {
  using SboolError::SboolError;
};
struct UnknownLabel : SboolError {
  using SboolError::SboolError;
};

/// Enumeration caps. Exceeding a cap raises SizeLimitExceeded, never
/// truncates silently.
struct SbLimits {
  std::size_t permanent_max = 9;
  std::size_t rank_max = 20;
};

class SbMatrix {
 public:
  SbMatrix() = default;
  SbMatrix(std::size_t rows, std::size_t cols);
  SbMatrix(std::size_t rows, std::size_t cols,
           std::vector<std::string> row_labels,
           std::vector<std::string> col_labels);

  static SbMatrix from_rows(const std::vector<std::vector<Sb>>& rows);
  static SbMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Sb at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Sb v) { entries_[i * cols_ + j] = v; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_labels(std::vector<std::string> row_labels,
                  std::vector<std::string> col_labels);

  bool is_boolean() const;      // no Ghost entry
  bool is_ghost_matrix() const; // all entries in G0

  SbMatrix complement() const;  // 0 <-> 1, ghosts stay ghost
  SbMatrix transpose() const;
  SbMatrix submatrix(const std::vector<std::size_t>& row_ids,
                     const std::vector<std::size_t>& col_ids) const;

  bool operator==(const SbMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Sb> entries_;
  std::vector<std::string> row_labels_, col_labels_;
};

/// A k x k nonsingular submatrix certificate. row_ids/col_ids are ascending
/// index sets; row_order/col_order are permutations of 0..k-1 such that the
/// reordered submatrix (i,j) -> m(row_ids[row_order[i]], col_ids[col_order[j]])
/// has One on the diagonal and Zero strictly above it.
struct Witness {
  std::vector<std::size_t> row_ids;
  std::vector<std::size_t> col_ids;
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;

  std::size_t size() const { return row_ids.size(); }
  /// Paired (row, col) indices in triangular order, top row first.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
};

/// Checks the form-(3) predicate: One diagonal, Zero strictly above.
bool witness_is_triangular(const SbMatrix& m, const Witness& w);

Sb permanent(const SbMatrix& m, const SbLimits& limits = {});

bool is_nonsingular(const SbMatrix& m, const SbLimits& limits = {});
/// Row/column permutations realizing the triangular form, if any.
std::optional<Witness> nonsingular_witness(const SbMatrix& m,
                                           const SbLimits& limits = {});

struct Marker {
  std::size_t row;
  std::size_t col;      // position of the single 1-entry
  std::size_t length;   // maximal subrow length: the 1 plus every 0 of the row
  bool full_row;
};
/// Maximal markers of every row, row-major order.
std::vector<Marker> find_markers(const SbMatrix& m);

/// Independence of the selected columns, decided by searching for a
/// |cols| x |cols| nonsingular submatrix. Returns its witness, or nullopt
/// when the columns are dependent.
std::optional<Witness> columns_independent(const SbMatrix& m,
                                           const std::vector<std::size_t>& cols,
                                           const SbLimits& limits = {});

struct RankResult {
  std::size_t rank = 0;
  Witness witness;  // lexicographically least by (row_ids, col_ids)
};
RankResult rank(const SbMatrix& m, const SbLimits& limits = {});

}  // namespace cranklab

#endif
