#include "cranklab/sbool.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace cranklab {

char sb_char(Sb a) {
  switch (a) {
    case Sb::Zero: return '0';
    case Sb::One: return '1';
    case Sb::Ghost: return 'g';
  }
  return '?';
}

Sb sb_parse(char c) {
  switch (c) {
    case '0': return Sb::Zero;
    case '1': return Sb::One;
    case 'g': case 'G': case 'v': return Sb::Ghost;
    default:
      throw SboolError(std::string("unknown matrix symbol '") + c + "'");
  }
}

static std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

SbMatrix::SbMatrix(std::size_t rows, std::size_t cols)
    : SbMatrix(rows, cols, index_labels(rows), index_labels(cols)) {}

SbMatrix::SbMatrix(std::size_t rows, std::size_t cols,
                   std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels)
    : rows_(rows),
      cols_(cols),
      entries_(rows * cols, Sb::Zero),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (row_labels_.size() != rows_ || col_labels_.size() != cols_)
    throw SboolError("label count does not match matrix shape");
}

SbMatrix SbMatrix::from_rows(const std::vector<std::vector<Sb>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  SbMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw SboolError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

SbMatrix SbMatrix::identity(std::size_t n) {
  SbMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Sb::One);
  return m;
}

void SbMatrix::set_labels(std::vector<std::string> row_labels,
                          std::vector<std::string> col_labels) {
  if (row_labels.size() != rows_ || col_labels.size() != cols_)
    throw SboolError("label count does not match matrix shape");
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

bool SbMatrix::is_boolean() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](Sb v) { return v == Sb::Ghost; });
}

bool SbMatrix::is_ghost_matrix() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Sb v) { return in_ghost_ideal(v); });
}

SbMatrix SbMatrix::complement() const {
  SbMatrix out(rows_, cols_, row_labels_, col_labels_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Sb v = at(i, j);
      out.set(i, j, v == Sb::Ghost ? Sb::Ghost
                                   : (v == Sb::Zero ? Sb::One : Sb::Zero));
    }
  return out;
}

SbMatrix SbMatrix::transpose() const {
  SbMatrix out(cols_, rows_, col_labels_, row_labels_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

SbMatrix SbMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                             const std::vector<std::size_t>& col_ids) const {
  std::vector<std::string> rl, cl;
  for (std::size_t r : row_ids) {
    if (r >= rows_) throw UnknownLabel("row index out of range");
    rl.push_back(row_labels_[r]);
  }
  for (std::size_t c : col_ids) {
    if (c >= cols_) throw UnknownLabel("column index out of range");
    cl.push_back(col_labels_[c]);
  }
  SbMatrix out(row_ids.size(), col_ids.size(), std::move(rl), std::move(cl));
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      out.set(i, j, at(row_ids[i], col_ids[j]));
  return out;
}

bool SbMatrix::operator==(const SbMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::vector<std::pair<std::size_t, std::size_t>> Witness::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(row_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    out.emplace_back(row_ids[row_order[i]], col_ids[col_order[i]]);
  return out;
}

bool witness_is_triangular(const SbMatrix& m, const Witness& w) {
  std::size_t k = w.row_ids.size();
  if (w.col_ids.size() != k || w.row_order.size() != k ||
      w.col_order.size() != k)
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Sb v = m.at(w.row_ids[w.row_order[i]], w.col_ids[w.col_order[j]]);
      if (i == j && v != Sb::One) return false;
      if (j > i && v != Sb::Zero) return false;
    }
  }
  return true;
}

Sb permanent(const SbMatrix& m, const SbLimits& limits) {
  if (!m.square()) throw NotSquare("permanent requires a square matrix");
  std::size_t n = m.rows();
  if (n == 0) throw NotSquare("permanent requires n >= 1");
  if (n > limits.permanent_max)
    throw SizeLimitExceeded("permanent cap exceeded: n = " + std::to_string(n));

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::size_t tangible_terms = 0;
  bool ghost_term = false;
  do {
    Sb prod = Sb::One;
    for (std::size_t j = 0; j < n && prod != Sb::Zero; ++j)
      prod = sb_mul(prod, m.at(perm[j], j));
    if (prod == Sb::One) ++tangible_terms;
    if (prod == Sb::Ghost) ghost_term = true;
    if (tangible_terms > 1 || (ghost_term && tangible_terms > 0)) return Sb::Ghost;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (ghost_term) return Sb::Ghost;
  if (tangible_terms == 1) return Sb::One;
  return Sb::Zero;
}

namespace {

// Search engine for triangular sequences: pairs (r_1,c_1)..(r_k,c_k) over
// distinct rows/columns with m(r_i,c_i) = 1 and m(r_i,c_j) = 0 for j > i
// (the triangular normal form). Sequences are built from the bottom of the
// triangle upward, so appending a pair only has to check the columns chosen
// so far. Backtracks over candidate picks with memoization keyed on
// (live-row, live-col) bit masks.
class TriSearch {
 public:
  explicit TriSearch(const SbMatrix& m) : m_(&m), n_rows_(m.rows()), n_cols_(m.cols()) {
    if (n_rows_ > 32 || n_cols_ > 32)
      throw SizeLimitExceeded("triangular search supports at most 32x32");
    one_mask_.resize(n_rows_);
    zero_mask_.resize(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
      for (std::size_t c = 0; c < n_cols_; ++c) {
        Sb v = m.at(r, c);
        if (v == Sb::One) one_mask_[r] |= (1u << c);
        if (v == Sb::Zero) zero_mask_[r] |= (1u << c);
      }
    }
  }

  // Longest achievable sequence with rows/cols restricted to the given masks.
  std::size_t max_length(std::uint32_t rows_allowed, std::uint32_t cols_allowed) {
    memo_.clear();
    return best_from(0, 0, rows_allowed, cols_allowed);
  }

  // Is there a length-target sequence with rows in rows_allowed (all of
  // rows_forced used) and cols in cols_allowed (all of cols_forced used)?
  // On success fills seq with the pairs in triangular order (top row first).
  bool find(std::size_t target, std::uint32_t rows_allowed,
            std::uint32_t cols_allowed, std::uint32_t rows_forced,
            std::uint32_t cols_forced,
            std::vector<std::pair<std::size_t, std::size_t>>* seq = nullptr) {
    dead_.clear();
    target_ = target;
    rows_allowed_ = rows_allowed;
    cols_allowed_ = cols_allowed;
    rows_forced_ = rows_forced;
    cols_forced_ = cols_forced;
    stack_.clear();
    if (!dfs(0, 0)) return false;
    if (seq) {
      seq->assign(stack_.rbegin(), stack_.rend());
    }
    return true;
  }

 private:
  std::size_t best_from(std::uint32_t rows_used, std::uint32_t cols_used,
                        std::uint32_t rows_allowed, std::uint32_t cols_allowed) {
    std::uint64_t key = (std::uint64_t(rows_used) << 32) | cols_used;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::size_t best = 0;
    std::uint32_t rows_free = rows_allowed & ~rows_used;
    for (std::uint32_t rm = rows_free; rm; rm &= rm - 1) {
      std::size_t r = std::countr_zero(rm);
      if (cols_used & ~zero_mask_[r]) continue;  // chosen cols must all be 0
      std::uint32_t cands = one_mask_[r] & cols_allowed & ~cols_used;
      for (std::uint32_t cm = cands; cm; cm &= cm - 1) {
        std::size_t c = std::countr_zero(cm);
        std::size_t got = 1 + best_from(rows_used | (1u << r),
                                        cols_used | (1u << c), rows_allowed,
                                        cols_allowed);
        if (got > best) best = got;
      }
    }
    memo_[key] = best;
    return best;
  }

  bool dfs(std::uint32_t rows_used, std::uint32_t cols_used) {
    std::size_t depth = stack_.size();
    if (depth == target_)
      return (rows_forced_ & ~rows_used) == 0 && (cols_forced_ & ~cols_used) == 0;
    std::size_t remaining = target_ - depth;
    if (std::size_t(std::popcount(rows_allowed_ & ~rows_used)) < remaining) return false;
    if (std::size_t(std::popcount(cols_allowed_ & ~cols_used)) < remaining) return false;
    std::uint64_t key = (std::uint64_t(rows_used) << 32) | cols_used;
    if (dead_.count(key)) return false;
    std::uint32_t rows_free = rows_allowed_ & ~rows_used;
    for (std::uint32_t rm = rows_free; rm; rm &= rm - 1) {
      std::size_t r = std::countr_zero(rm);
      if (cols_used & ~zero_mask_[r]) continue;
      std::uint32_t cands = one_mask_[r] & cols_allowed_ & ~cols_used;
      for (std::uint32_t cm = cands; cm; cm &= cm - 1) {
        std::size_t c = std::countr_zero(cm);
        stack_.emplace_back(r, c);
        if (dfs(rows_used | (1u << r), cols_used | (1u << c))) return true;
        stack_.pop_back();
      }
    }
    dead_.insert(key);
    return false;
  }

  const SbMatrix* m_;
  std::size_t n_rows_, n_cols_;
  std::vector<std::uint32_t> one_mask_, zero_mask_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
  std::unordered_set<std::uint64_t> dead_;
  std::size_t target_ = 0;
  std::uint32_t rows_allowed_ = 0, cols_allowed_ = 0;
  std::uint32_t rows_forced_ = 0, cols_forced_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack_;
};

std::uint32_t full_mask(std::size_t n) {
  return n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
}

Witness witness_from_pairs(
    const std::vector<std::pair<std::size_t, std::size_t>>& seq) {
  Witness w;
  std::size_t k = seq.size();
  for (auto& [r, c] : seq) {
    w.row_ids.push_back(r);
    w.col_ids.push_back(c);
  }
  std::sort(w.row_ids.begin(), w.row_ids.end());
  std::sort(w.col_ids.begin(), w.col_ids.end());
  w.row_order.resize(k);
  w.col_order.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto rpos = std::lower_bound(w.row_ids.begin(), w.row_ids.end(), seq[i].first) -
                w.row_ids.begin();
    auto cpos = std::lower_bound(w.col_ids.begin(), w.col_ids.end(), seq[i].second) -
                w.col_ids.begin();
    w.row_order[i] = rpos;
    w.col_order[i] = cpos;
  }
  return w;
}

void check_rank_limit(const SbMatrix& m, const SbLimits& limits) {
  if (m.rows() > limits.rank_max || m.cols() > limits.rank_max)
    throw SizeLimitExceeded("rank cap exceeded: " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + " > " +
                            std::to_string(limits.rank_max));
}

}  // namespace

bool is_nonsingular(const SbMatrix& m, const SbLimits& limits) {
  return nonsingular_witness(m, limits).has_value();
}

std::optional<Witness> nonsingular_witness(const SbMatrix& m,
                                           const SbLimits& limits) {
  if (!m.square()) throw NotSquare("nonsingularity requires a square matrix");
  check_rank_limit(m, limits);
  std::size_t n = m.rows();
  if (n == 0) return std::nullopt;
  TriSearch search(m);
  std::uint32_t all_r = full_mask(n), all_c = full_mask(n);
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  if (!search.find(n, all_r, all_c, all_r, all_c, &seq)) return std::nullopt;
  return witness_from_pairs(seq);
}

std::vector<Marker> find_markers(const SbMatrix& m) {
  std::vector<Marker> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t zeros = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) == Sb::Zero) ++zeros;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != Sb::One) continue;
      // Maximal marker through this 1: the 1 together with every 0 of the row.
      out.push_back(Marker{r, c, zeros + 1, zeros + 1 == m.cols()});
    }
  }
  return out;
}

std::optional<Witness> columns_independent(const SbMatrix& m,
                                           const std::vector<std::size_t>& cols,
                                           const SbLimits& limits) {
  if (cols.empty()) throw EmptySelection("no columns selected");
  check_rank_limit(m, limits);
  std::uint32_t col_mask = 0;
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw UnknownLabel("column index out of range");
    if (col_mask & (1u << c)) throw UnknownLabel("duplicate column selected");
    col_mask |= (1u << c);
  }
  std::size_t k = cols.size();
  if (k > m.rows()) return std::nullopt;
  TriSearch search(m);
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  if (!search.find(k, full_mask(m.rows()), col_mask, 0, col_mask, &seq))
    return std::nullopt;
  return witness_from_pairs(seq);
}

RankResult rank(const SbMatrix& m, const SbLimits& limits) {
  check_rank_limit(m, limits);
  RankResult res;
  if (m.rows() == 0 || m.cols() == 0) return res;
  TriSearch search(m);
  std::uint32_t all_r = full_mask(m.rows()), all_c = full_mask(m.cols());
  std::size_t k = search.max_length(all_r, all_c);
  res.rank = k;
  if (k == 0) return res;

  // Lexicographically least witness by (row_ids, col_ids): grow the row set
  // greedily, each step asking whether a completion with larger indices exists.
  std::uint32_t forced_rows = 0;
  std::size_t last = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    std::size_t start = pos == 0 ? 0 : last + 1;
    for (std::size_t r = start; r < m.rows(); ++r) {
      std::uint32_t forced = forced_rows | (1u << r);
      std::uint32_t allowed = forced | (all_r & ~((1u << (r + 1)) - 1u));
      if (search.find(k, allowed, all_c, forced, 0)) {
        forced_rows = forced;
        last = r;
        break;
      }
    }
  }
  std::uint32_t forced_cols = 0;
  std::size_t last_c = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    std::size_t start = pos == 0 ? 0 : last_c + 1;
    for (std::size_t c = start; c < m.cols(); ++c) {
      std::uint32_t forced = forced_cols | (1u << c);
      std::uint32_t allowed = forced | (all_c & ~((1u << (c + 1)) - 1u));
      if (search.find(k, forced_rows, allowed, forced_rows, forced)) {
        forced_cols = forced;
        last_c = c;
        break;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  bool ok = search.find(k, forced_rows, forced_cols, forced_rows, forced_cols, &seq);
  if (!ok) throw SboolError("internal error: witness reconstruction failed");
  res.witness = witness_from_pairs(seq);
  return res;
}

}  // namespace cranklab
