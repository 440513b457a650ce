#include "cranklab/hereditary.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cranklab {

bool HeredCollection::contains(std::uint64_t mask) const {
  return std::binary_search(family.begin(), family.end(), mask);
}

std::vector<std::uint64_t> HeredCollection::bases() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : family) {
    bool maximal = true;
    for (std::uint64_t b : family)
      if (a != b && (a & b) == a) { maximal = false; break; }
    if (maximal) out.push_back(a);
  }
  return out;
}

HeredCollection validate_hered(std::vector<std::string> ground,
                               std::vector<std::uint64_t> family) {
  if (family.empty()) throw EmptyFamily("the family must be nonempty");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  HeredCollection h{std::move(ground), std::move(family)};
  std::uint64_t full =
      h.ground.size() >= 64 ? ~0ull : ((1ull << h.ground.size()) - 1);
  for (std::uint64_t j : h.family) {
    if ((j & ~full) != 0)
      throw UnknownElement("family member uses elements outside the ground set");
    // Dropping any single element must stay in the family.
    for (std::uint64_t m = j; m; m &= m - 1) {
      std::uint64_t sub = j & ~(m & (0ull - m));
      if (!h.contains(sub))
        throw NotDownwardClosed("family is not downward closed", sub, j);
    }
  }
  return h;
}

HeredCollection hered_from_bases(std::vector<std::string> ground,
                                 const std::vector<std::uint64_t>& bases) {
  std::set<std::uint64_t> acc{0};
  std::vector<std::uint64_t> work(bases.begin(), bases.end());
  while (!work.empty()) {
    std::uint64_t j = work.back();
    work.pop_back();
    if (!acc.insert(j).second) continue;
    for (std::uint64_t m = j; m; m &= m - 1)
      work.push_back(j & ~(m & (0ull - m)));
  }
  return validate_hered(std::move(ground), {acc.begin(), acc.end()});
}

std::vector<std::uint64_t> circuits(const HeredCollection& h) {
  std::vector<std::uint64_t> out;
  std::uint64_t full = (1ull << h.ground.size()) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (h.contains(mask)) continue;
    bool minimal = true;
    for (std::uint64_t m = mask; m && minimal; m &= m - 1)
      if (!h.contains(mask & ~(m & (0ull - m)))) minimal = false;
    if (minimal) out.push_back(mask);
  }
  return out;
}

std::vector<std::size_t> loops(const HeredCollection& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.ground.size(); ++i)
    if (!h.contains(1ull << i)) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs(
    const HeredCollection& h) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < h.ground.size(); ++i)
    for (std::size_t j = i + 1; j < h.ground.size(); ++j) {
      std::uint64_t pair = (1ull << i) | (1ull << j);
      if (!h.contains(pair) && h.contains(1ull << i) && h.contains(1ull << j))
        out.push_back({i, j});
    }
  return out;
}

bool is_simple(const HeredCollection& h) {
  return loops(h).empty() && parallel_pairs(h).empty();
}

PrCheck satisfies_pr(const HeredCollection& h) {
  PrCheck res;
  for (std::size_t p = 0; p < h.ground.size(); ++p) {
    if (!h.contains(1ull << p)) continue;
    for (std::uint64_t j : h.family) {
      if (j == 0 || (j & (1ull << p)) != 0) continue;
      bool replaceable = false;
      for (std::uint64_t m = j; m && !replaceable; m &= m - 1) {
        std::uint64_t swapped = (j & ~(m & (0ull - m))) | (1ull << p);
        if (h.contains(swapped)) replaceable = true;
      }
      if (!replaceable) {
        res.ok = false;
        res.point = p;
        res.violating = j;
        return res;
      }
    }
  }
  return res;
}

HeredCollection collection_of_matrix(const SbMatrix& m,
                                     const SbLimits& limits) {
  if (!m.is_boolean())
    throw GhostEntries("matrix must be boolean");
  std::size_t n = m.cols();
  if (n >= 25)
    throw GroundSetTooLarge("too many columns for exhaustive enumeration");
  std::vector<std::string> ground =
      m.col_labels().empty()
          ? [&] {
              std::vector<std::string> g;
              for (std::size_t i = 0; i < n; ++i)
                g.push_back(std::to_string(i + 1));
              return g;
            }()
          : m.col_labels();
  std::vector<std::uint64_t> family{0};
  // Independence is hereditary, so grow one element at a time.
  std::set<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t base : frontier)
      for (std::size_t e = 0; e < n; ++e) {
        if (base & (1ull << e)) continue;
        std::uint64_t cand = base | (1ull << e);
        if (next.count(cand)) continue;
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < n; ++i)
          if (cand & (1ull << i)) cols.push_back(i);
        if (columns_independent(m, cols, limits)) next.insert(cand);
      }
    family.insert(family.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  return validate_hered(std::move(ground), std::move(family));
}

namespace {

Lattice lattice_of_masks(const std::vector<std::uint64_t>& masks,
                         const std::vector<std::string>& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> le_pairs;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == masks[i]) le_pairs.emplace_back(i, j);
  return Lattice::validate(
      Poset::validate(structured_set_from_pairs(labels, le_pairs)));
}

std::string bits_label(std::uint64_t mask, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (mask >> i) & 1 ? '1' : '0';
  return s;
}

}  // namespace

AugmentResult augment_construction(const SbMatrix& m, const SbLimits& limits) {
  if (!m.is_boolean()) throw GhostEntries("matrix must be boolean");
  HeredCollection h = collection_of_matrix(m, limits);
  if (!is_simple(h))
    throw NotSimple("matrix columns must form a simple collection");
  std::size_t n = m.cols();
  std::uint64_t full = (1ull << n) - 1;

  std::set<std::uint64_t> rows;
  rows.insert(0);  // empty sup
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) == Sb::One) r |= (1ull << j);
    rows.insert(r);
  }
  for (std::size_t j = 0; j < n; ++j) rows.insert(full & ~(1ull << j));
  // Sup closure (coordinatewise max = bitwise or).
  for (;;) {
    std::set<std::uint64_t> next = rows;
    for (std::uint64_t a : rows)
      for (std::uint64_t b : rows) next.insert(a | b);
    if (next.size() == rows.size()) break;
    rows.swap(next);
  }

  AugmentResult res{SbMatrix(rows.size(), n),
                    {rows.begin(), rows.end()},
                    {},
                    [&] {
                      std::vector<std::uint64_t> v(rows.begin(), rows.end());
                      std::vector<std::string> labels;
                      for (std::uint64_t r : v)
                        labels.push_back(bits_label(r, n));
                      return lattice_of_masks(v, labels);
                    }(),
                    [&] {
                      std::vector<std::uint64_t> c;
                      for (std::uint64_t r : rows) c.push_back(full & ~r);
                      std::sort(c.begin(), c.end());
                      std::vector<std::string> labels;
                      for (std::uint64_t x : c)
                        labels.push_back(bits_label(x, n));
                      return lattice_of_masks(c, labels);
                    }(),
                    {}};
  for (std::size_t i = 0; i < res.row_vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (res.row_vectors[i] & (1ull << j)) res.a_prime.set(i, j, Sb::One);
  {
    std::vector<std::string> row_labels;
    for (std::uint64_t r : res.row_vectors)
      row_labels.push_back(bits_label(r, n));
    res.a_prime.set_labels(std::move(row_labels), m.col_labels());
  }
  for (std::uint64_t r : rows) res.closed_sets.push_back(full & ~r);
  std::sort(res.closed_sets.begin(), res.closed_sets.end());
  for (std::uint64_t c : res.closed_sets) {
    std::uint64_t row = full & ~c;
    res.reverse_iso.push_back(
        std::lower_bound(res.row_vectors.begin(), res.row_vectors.end(), row) -
        res.row_vectors.begin());
  }
  return res;
}

namespace {

// All unordered partitions of {0..n-1}; blocks listed with least elements
// ascending, yielding a canonical order.
void enumerate_partitions(std::size_t n,
                          std::vector<std::vector<std::uint64_t>>& out) {
  std::vector<std::uint64_t> blocks;
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= (1ull << e);
      self(self, e + 1);
      blocks[i] &= ~(1ull << e);
    }
    blocks.push_back(1ull << e);
    self(self, e + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

// Full cross sections: one element from each block.
void cross_sections(const std::vector<std::uint64_t>& blocks,
                    std::vector<std::uint64_t>& out) {
  std::uint64_t cur = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == blocks.size()) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t m = blocks[i]; m; m &= m - 1) {
      cur |= (m & (0ull - m));
      self(self, i + 1);
      cur &= ~(m & (0ull - m));
    }
  };
  rec(rec, 0);
}

bool partition_admits(const std::vector<std::uint64_t>& blocks,
                      std::uint64_t x) {
  std::uint64_t seen = 0;
  for (std::uint64_t b : blocks) {
    std::uint64_t hit = b & x;
    if (std::popcount(hit) > 1) return false;
    seen |= hit;
  }
  return seen == x;
}

}  // namespace

ReprVerdict partition_representability(const HeredCollection& h,
                                       std::size_t ground_cap) {
  std::size_t n = h.ground.size();
  if (n > ground_cap)
    throw GroundSetTooLarge("ground set exceeds the representability cap of " +
                            std::to_string(ground_cap));
  if (!is_simple(h))
    throw NotSimple("representability check requires a simple collection");

  std::vector<std::vector<std::uint64_t>> partitions;
  enumerate_partitions(n, partitions);

  std::vector<bool> admissible(partitions.size());
  std::vector<std::vector<std::uint64_t>> violations(partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    std::vector<std::uint64_t> sections;
    cross_sections(partitions[i], sections);
    for (std::uint64_t s : sections)
      if (!h.contains(s)) violations[i].push_back(s);
    std::sort(violations[i].begin(), violations[i].end());
    admissible[i] = violations[i].empty();
  }

  std::vector<std::uint64_t> hb = h.bases();
  std::sort(hb.begin(), hb.end());

  ReprVerdict verdict;
  std::set<std::size_t> chosen;
  std::optional<std::uint64_t> obstructed;
  for (std::uint64_t b : hb) {
    bool covered = false;
    for (std::size_t i = 0; i < partitions.size() && !covered; ++i)
      if (admissible[i] && partition_admits(partitions[i], b)) {
        chosen.insert(i);
        covered = true;
      }
    if (!covered && !obstructed) obstructed = b;
  }

  if (obstructed) {
    verdict.status = ReprStatus::Unsat;
    verdict.obstructed_basis = *obstructed;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      if (admissible[i]) continue;
      bool admits_basis = false;
      for (std::uint64_t b : hb)
        if (partition_admits(partitions[i], b)) { admits_basis = true; break; }
      if (admits_basis)
        verdict.obstructions.push_back(
            ReprObstruction{GroundPartition{partitions[i]}, violations[i]});
    }
    return verdict;
  }

  verdict.status = ReprStatus::Sat;
  for (std::size_t i : chosen)
    verdict.partitions.push_back(GroundPartition{partitions[i]});

  // Constructive check: build a candidate matrix, confirm it reproduces
  // exactly this collection.
  std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
  auto try_rows = [&](const std::vector<std::uint64_t>& rows) {
    std::vector<std::string> row_labels;
    for (std::size_t i = 0; i < rows.size(); ++i)
      row_labels.push_back("r" + std::to_string(i));
    SbMatrix mat(rows.size(), n, std::move(row_labels), h.ground);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rows[i] & (1ull << j)) mat.set(i, j, Sb::One);
    SbLimits wide;
    wide.rank_max = std::max<std::size_t>(rows.size(), SbLimits{}.rank_max);
    if (collection_of_matrix(mat, wide).family != h.family) return false;
    verdict.matrix = std::move(mat);
    return true;
  };

  // First candidate: stack, for each chosen partition, the descending chain
  // of block-union complements as rows. Rows from different partitions can
  // interact and admit sets outside the family, so this may fail.
  std::vector<std::uint64_t> stacked;
  for (const auto& gp : verdict.partitions) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i + 1 <= gp.blocks.size(); ++i) {
      stacked.push_back(full & ~acc);
      acc |= gp.blocks[i];
    }
  }
  if (try_rows(stacked)) return verdict;

  // Fallback: the canonical matrix whose rows are the complements of the
  // flats of the collection. F is a flat when every point outside F extends
  // every member lying inside F.
  std::vector<std::uint64_t> flat_rows;
  for (std::uint64_t f = 0; f <= full; ++f) {
    bool flat = true;
    // Iterate the subsets of f.
    for (std::uint64_t x = f; flat; x = (x - 1) & f) {
      if (h.contains(x))
        for (std::uint64_t rest = full & ~f; rest; rest &= rest - 1)
          if (!h.contains(x | (rest & (0ull - rest)))) {
            flat = false;
            break;
          }
      if (x == 0) break;
    }
    if (flat) flat_rows.push_back(full & ~f);
  }
  if (try_rows(flat_rows)) return verdict;

  verdict.status = ReprStatus::SatMatrixFailed;
  return verdict;
}

}  // namespace cranklab
