#include "cranklab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace cranklab {

namespace {

// Unique minimal member of a nonempty subset, if it is a least element.
std::optional<std::size_t> least_of(const Poset& p,
                                    const std::vector<std::size_t>& xs) {
  for (std::size_t x : xs) {
    bool below_all = true;
    for (std::size_t y : xs)
      if (!p.le(x, y)) { below_all = false; break; }
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> greatest_of(const Poset& p,
                                       const std::vector<std::size_t>& xs) {
  for (std::size_t x : xs) {
    bool above_all = true;
    for (std::size_t y : xs)
      if (!p.le(y, x)) { above_all = false; break; }
    if (above_all) return x;
  }
  return std::nullopt;
}

}  // namespace

Lattice Lattice::validate(Poset p) {
  Lattice l(std::move(p));
  std::size_t n = l.poset_.size();
  if (n == 0) throw NotALattice("a lattice must be nonempty");
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  const Poset& ps = l.poset_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::size_t> ub, lb;
      for (std::size_t z = 0; z < n; ++z) {
        if (ps.le(i, z) && ps.le(j, z)) ub.push_back(z);
        if (ps.le(z, i) && ps.le(z, j)) lb.push_back(z);
      }
      auto lub = ub.empty() ? std::nullopt : least_of(ps, ub);
      if (!lub)
        throw NotALattice("no unique join for (" + ps.label(i) + ", " +
                          ps.label(j) + ")");
      auto glb = lb.empty() ? std::nullopt : greatest_of(ps, lb);
      if (!glb)
        throw NotALattice("no unique meet for (" + ps.label(i) + ", " +
                          ps.label(j) + ")");
      l.join_[i * n + j] = l.join_[j * n + i] = *lub;
      l.meet_[i * n + j] = l.meet_[j * n + i] = *glb;
    }
  auto mins = ps.minimal_elements();
  auto maxs = ps.maximal_elements();
  // Pairwise joins/meets on a finite poset force a single bottom and top.
  if (mins.size() != 1 || maxs.size() != 1)
    throw NotALattice("lattice must have unique bottom and top");
  l.bottom_ = mins.front();
  l.top_ = maxs.front();
  return l;
}

std::size_t Lattice::join_set(std::span<const std::size_t> xs) const {
  std::size_t acc = bottom_;
  for (std::size_t x : xs) acc = join(acc, x);
  return acc;
}

std::size_t Lattice::meet_set(std::span<const std::size_t> xs) const {
  std::size_t acc = top_;
  for (std::size_t x : xs) acc = meet(acc, x);
  return acc;
}

std::size_t Lattice::join_mask(std::uint64_t mask) const {
  std::size_t acc = bottom_;
  while (mask) {
    acc = join(acc, std::countr_zero(mask));
    mask &= mask - 1;
  }
  return acc;
}

std::size_t Lattice::meet_mask(std::uint64_t mask) const {
  std::size_t acc = top_;
  while (mask) {
    acc = meet(acc, std::countr_zero(mask));
    mask &= mask - 1;
  }
  return acc;
}

IrreducibleReport classify_irreducibles(const Lattice& l) {
  std::size_t n = l.size();
  IrreducibleReport rep;
  rep.flags.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    IrreducibleFlags& f = rep.flags[x];
    // sji: x differs from the join of everything strictly below it.
    std::vector<std::size_t> below, above;
    for (std::size_t y = 0; y < n; ++y) {
      if (l.poset().lt(y, x)) below.push_back(y);
      if (l.poset().lt(x, y)) above.push_back(y);
    }
    f.sji = l.join_set(below) != x;
    f.smi = l.meet_set(above) != x;
    // ji (prime): x <= a v b forces x <= a or x <= b; never the bottom,
    // which sits below the empty join.
    f.ji = x != l.bottom();
    for (std::size_t a = 0; a < n && f.ji; ++a)
      for (std::size_t b = a; b < n && f.ji; ++b)
        if (l.le(x, l.join(a, b)) && !l.le(x, a) && !l.le(x, b)) f.ji = false;
    f.mi = x != l.top();
    for (std::size_t a = 0; a < n && f.mi; ++a)
      for (std::size_t b = a; b < n && f.mi; ++b)
        if (l.le(l.meet(a, b), x) && !l.le(a, x) && !l.le(b, x)) f.mi = false;

    if (f.sji) {
      ++rep.sji_count;
      if (x != l.bottom()) ++rep.sji_not_bottom;
    }
    if (f.ji && x != l.bottom()) ++rep.ji_not_bottom;
    if (f.smi) {
      ++rep.smi_count;
      if (x != l.top()) ++rep.smi_not_top;
    }
    if (f.mi && x != l.top()) ++rep.mi_not_top;
  }
  return rep;
}

DistributivityCheck check_distributive(const Lattice& l) {
  DistributivityCheck res;
  std::size_t n = l.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (l.meet(s, l.join(t, u)) != l.join(l.meet(s, t), l.meet(s, u))) {
          res.distributive = false;
          res.counterexample = {s, t, u};
          return res;
        }
  return res;
}

SpecResult spec_morphism(const Lattice& l) {
  SpecResult res;
  std::size_t n = l.size();
  IrreducibleReport rep = classify_irreducibles(l);
  for (std::size_t m = 0; m < n; ++m)
    if (rep.flags[m].mi && m != l.top()) res.coordinates.push_back(m);

  res.vector_of.resize(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < res.coordinates.size(); ++t)
      if (!l.le(x, res.coordinates[t])) res.vector_of[x] |= (1ull << t);

  res.image_vectors = res.vector_of;
  std::sort(res.image_vectors.begin(), res.image_vectors.end());
  res.image_vectors.erase(
      std::unique(res.image_vectors.begin(), res.image_vectors.end()),
      res.image_vectors.end());
  res.image_index_of.resize(n);
  res.fibers.assign(res.image_vectors.size(), {});
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t pos =
        std::lower_bound(res.image_vectors.begin(), res.image_vectors.end(),
                         res.vector_of[x]) -
        res.image_vectors.begin();
    res.image_index_of[x] = pos;
    res.fibers[pos].push_back(x);
  }
  res.injective = res.image_vectors.size() == n;

  // Image lattice under the coordinatewise order.
  std::size_t m = res.image_vectors.size();
  std::vector<std::string> labels;
  for (std::uint64_t v : res.image_vectors) {
    std::string s;
    for (std::size_t t = 0; t < res.coordinates.size(); ++t)
      s += ((v >> t) & 1) ? '1' : '0';
    if (s.empty()) s = "*";
    labels.push_back(s);
  }
  std::vector<std::pair<std::size_t, std::size_t>> le_pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((res.image_vectors[i] & res.image_vectors[j]) == res.image_vectors[i])
        le_pairs.emplace_back(i, j);
  res.image = Lattice::validate(
      Poset::validate(structured_set_from_pairs(labels, le_pairs)));

  res.order_embedding = res.injective;
  for (std::size_t x = 0; x < n && res.order_embedding; ++x)
    for (std::size_t y = 0; y < n && res.order_embedding; ++y) {
      bool vle = (res.vector_of[x] & res.vector_of[y]) == res.vector_of[x];
      if (vle != l.le(x, y)) res.order_embedding = false;
    }
  return res;
}

SupMapCheck verify_sup_map(const Lattice& dom, const Lattice& cod,
                           const std::vector<std::size_t>& map) {
  SupMapCheck res;
  std::size_t n = dom.size();
  if (map.size() != n) throw SboolError("map size does not match domain");
  for (std::size_t v : map)
    if (v >= cod.size()) throw SboolError("map value out of codomain range");

  auto check_mask = [&](std::uint64_t mask) {
    std::size_t lhs = map[dom.join_mask(mask)];
    std::size_t rhs = cod.bottom();
    for (std::uint64_t mm = mask; mm; mm &= mm - 1)
      rhs = cod.join(rhs, map[std::countr_zero(mm)]);
    return lhs == rhs;
  };
  auto fail = [&](std::uint64_t mask) {
    res.ok = false;
    for (std::uint64_t mm = mask; mm; mm &= mm - 1)
      res.violating_subset.push_back(std::countr_zero(mm));
  };

  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
      if (!check_mask(mask)) { fail(mask); return res; }
  } else {
    if (!check_mask(0)) { fail(0); return res; }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::uint64_t mask = (1ull << i) | (1ull << j);
        if (!check_mask(mask)) { fail(mask); return res; }
      }
  }
  return res;
}

std::vector<std::size_t> adjoint_sup_map(const Lattice& dom, const Lattice& cod,
                                         const std::vector<std::size_t>& map) {
  SupMapCheck chk = verify_sup_map(dom, cod, map);
  if (!chk.ok) throw NotSupMap("not a sup-map", chk.violating_subset);
  std::vector<std::size_t> psi(cod.size());
  for (std::size_t y = 0; y < cod.size(); ++y) {
    std::size_t acc = dom.bottom();
    for (std::size_t x = 0; x < dom.size(); ++x)
      if (map[x] == y) acc = dom.join(acc, x);
    psi[y] = acc;
  }
  return psi;
}

std::optional<LatticeWitness> lattice_independent(
    const Lattice& l, const std::vector<std::size_t>& w,
    const SbLimits& limits) {
  auto wit = c_independent(l.poset(), w, limits);
  if (!wit) return std::nullopt;
  LatticeWitness out;
  for (std::size_t i = 0; i < wit->size(); ++i) {
    out.elements.push_back(wit->col_ids[wit->col_order[i]]);
    out.witness.push_back(wit->row_ids[wit->row_order[i]]);
  }
  return out;
}

bool lattice_witness_valid(const Lattice& l, const LatticeWitness& w) {
  std::size_t k = w.elements.size();
  if (w.witness.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (l.le(w.elements[i], w.witness[i])) return false;
    for (std::size_t j = i + 1; j < k; ++j)
      if (!l.le(w.elements[j], w.witness[i])) return false;
  }
  return true;
}

std::vector<std::size_t> join_split(const Lattice& l,
                                    const std::vector<std::size_t>& w,
                                    std::size_t j, std::size_t part1,
                                    std::size_t part2, const SbLimits& limits) {
  if (j >= w.size()) throw UnknownElement("split index out of range");
  if (l.join(part1, part2) != w[j])
    throw NotAJoinDecomposition("parts do not join to the split element");
  auto arranged = lattice_independent(l, w, limits);
  if (!arranged) throw NotIndependent("input set is not independent");
  auto pos = std::find(arranged->elements.begin(), arranged->elements.end(),
                       w[j]) -
             arranged->elements.begin();
  for (std::size_t part : {part1, part2}) {
    LatticeWitness trial = *arranged;
    trial.elements[pos] = part;
    if (lattice_witness_valid(l, trial)) {
      std::vector<std::size_t> out = w;
      out[j] = part;
      return out;
    }
  }
  throw NotIndependent("neither joinand preserves the witness");
}

std::vector<std::size_t> refine_to_sji(const Lattice& l,
                                       const std::vector<std::size_t>& w,
                                       const SbLimits& limits) {
  auto arranged = lattice_independent(l, w, limits);
  if (!arranged) throw NotIndependent("input set is not independent");
  IrreducibleReport rep = classify_irreducibles(l);
  auto is_target = [&](std::size_t x) {
    return rep.flags[x].sji && x != l.bottom();
  };

  LatticeWitness cur = *arranged;
  for (;;) {
    std::size_t pos = cur.elements.size();
    for (std::size_t i = 0; i < cur.elements.size(); ++i)
      if (!is_target(cur.elements[i])) { pos = i; break; }
    if (pos == cur.elements.size()) break;

    bool replaced = false;
    for (std::size_t x = 0; x < l.size() && !replaced; ++x) {
      if (!is_target(x) || !l.poset().lt(x, cur.elements[pos])) continue;
      LatticeWitness trial = cur;
      trial.elements[pos] = x;
      if (lattice_witness_valid(l, trial)) {
        cur = trial;
        replaced = true;
      }
    }
    if (!replaced) {
      // Same-witness replacement blocked (e.g. by a duplicate); fall back to
      // a fresh witness search for each candidate set.
      for (std::size_t x = 0; x < l.size() && !replaced; ++x) {
        if (!is_target(x) || !l.poset().lt(x, cur.elements[pos])) continue;
        std::vector<std::size_t> cand = cur.elements;
        cand[pos] = x;
        std::sort(cand.begin(), cand.end());
        if (std::adjacent_find(cand.begin(), cand.end()) != cand.end())
          continue;
        auto fresh = lattice_independent(l, cand, limits);
        if (fresh) {
          cur = *fresh;
          replaced = true;
        }
      }
    }
    if (!replaced)
      throw NotIndependent("refinement to sji elements failed");
  }
  std::vector<std::size_t> out = cur.elements;
  std::sort(out.begin(), out.end());
  return out;
}

LatticeWitness witness_from_chain(const Lattice& l,
                                  const std::vector<std::size_t>& chain) {
  if (chain.size() < 2) throw SboolError("chain must have at least two elements");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!l.poset().lt(chain[i], chain[i + 1]))
      throw SboolError("sequence is not a strict ascending chain");
  LatticeWitness w;
  std::size_t k = chain.size() - 1;
  // Descending: element c_{k-i} is separated from its predecessor c_{k-i-1}.
  for (std::size_t i = 0; i < k; ++i) {
    w.elements.push_back(chain[k - i]);
    w.witness.push_back(chain[k - i - 1]);
  }
  return w;
}

std::vector<std::size_t> chain_from_witness(const Lattice& l,
                                            const LatticeWitness& w) {
  std::size_t k = w.elements.size();
  std::vector<std::size_t> prefix_meets(k);
  std::size_t acc = l.top();
  for (std::size_t i = 0; i < k; ++i) {
    acc = l.meet(acc, w.witness[i]);
    prefix_meets[i] = acc;
  }
  std::vector<std::size_t> chain(prefix_meets.rbegin(), prefix_meets.rend());
  chain.push_back(l.top());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!l.poset().lt(chain[i], chain[i + 1]))
      throw SboolError("witness did not induce a strict chain");
  return chain;
}

RankCertificates crank_equals_height_certificates(const Lattice& l,
                                                  const SbLimits& limits) {
  RankCertificates res;
  CrankResult cr = c_rank(l.poset(), limits);
  res.c_rank = cr.rank;
  Poset::Height h = l.poset().height();
  res.height = h.length;
  res.chain = h.chain;
  if (h.chain.size() >= 2) {
    res.witness_from_chain = witness_from_chain(l, h.chain);
    if (!lattice_witness_valid(l, res.witness_from_chain))
      throw SboolError("chain witness failed validation");
  }
  if (cr.rank > 0) {
    LatticeWitness lw;
    for (std::size_t i = 0; i < cr.witness.size(); ++i) {
      lw.elements.push_back(cr.witness.col_ids[cr.witness.col_order[i]]);
      lw.witness.push_back(cr.witness.row_ids[cr.witness.row_order[i]]);
    }
    res.chain_from_witness = chain_from_witness(l, lw);
  }
  return res;
}

LatticeWitness verify_push(const Lattice& l, const LatticeWitness& base,
                           const std::vector<std::size_t>& pushed) {
  if (pushed.size() != base.elements.size())
    throw SboolError("push must have the same size as the base set");
  for (std::size_t i = 0; i < pushed.size(); ++i) {
    if (!l.le(pushed[i], base.elements[i]))
      throw NotAPush("pushed element is not below the original", i);
    if (l.le(pushed[i], base.witness[i]))
      throw NotAPush("pushed element fell below its witness row", i);
  }
  LatticeWitness out{pushed, base.witness};
  if (!lattice_witness_valid(l, out))
    throw NotAPush("push does not keep the triangular form", 0);
  return out;
}

}  // namespace cranklab
