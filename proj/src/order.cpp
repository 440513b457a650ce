#include "cranklab/order.hpp"

#include <algorithm>
#include <sstream>

namespace cranklab {

std::string PosetDiagnostics::describe(
    const std::vector<std::string>& labels) const {
  std::ostringstream os;
  for (std::size_t i : not_reflexive)
    os << "NotReflexive(" << labels[i] << ") ";
  for (auto& [i, j] : not_antisymmetric)
    os << "NotAntisymmetric(" << labels[i] << "," << labels[j] << ") ";
  for (auto& [i, j, k] : not_transitive)
    os << "NotTransitive(" << labels[i] << "<=" << labels[j] << "<="
       << labels[k] << ") ";
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

PosetDiagnostics check_poset_axioms(const StructuredSet& s) {
  PosetDiagnostics d;
  const SbMatrix& a = s.relation;
  std::size_t n = s.elements.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a.at(i, i) != Sb::One) d.not_reflexive.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.at(i, j) == Sb::One && a.at(j, i) == Sb::One)
        d.not_antisymmetric.emplace_back(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j) != Sb::One) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (a.at(j, k) == Sb::One && a.at(i, k) != Sb::One)
          d.not_transitive.push_back({i, j, k});
    }
  return d;
}

Poset Poset::validate(StructuredSet s) {
  if (s.relation.rows() != s.elements.size() ||
      s.relation.cols() != s.elements.size())
    throw SboolError("structure matrix shape does not match element count");
  if (!s.relation.is_boolean())
    throw SboolError("structure matrix must be boolean");
  PosetDiagnostics d = check_poset_axioms(s);
  if (!d.ok())
    throw NotAPoset("not a poset: " + d.describe(s.elements), d);
  return Poset(std::move(s));
}

Poset Poset::reversed() const {
  StructuredSet s{base_.elements, base_.relation.transpose()};
  return Poset(std::move(s));
}

std::vector<std::size_t> Poset::up_set(std::size_t x) const {
  if (x >= size()) throw UnknownElement("element index out of range");
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (le(x, y)) out.push_back(y);
  return out;
}

std::vector<std::size_t> Poset::down_set(std::size_t x) const {
  if (x >= size()) throw UnknownElement("element index out of range");
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (le(y, x)) out.push_back(y);
  return out;
}

bool Poset::is_order_ideal(const std::vector<std::size_t>& ideal) const {
  std::vector<bool> in(size(), false);
  for (std::size_t x : ideal) {
    if (x >= size()) throw UnknownElement("element index out of range");
    in[x] = true;
  }
  for (std::size_t p = 0; p < size(); ++p)
    if (in[p])
      for (std::size_t q = 0; q < size(); ++q)
        if (le(q, p) && !in[q]) return false;
  return true;
}

const std::vector<std::pair<std::size_t, std::size_t>>&
Poset::covering_relation() const {
  if (!covers_ready_) {
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) {
        if (!lt(x, y)) continue;
        bool direct = true;
        for (std::size_t z = 0; z < size() && direct; ++z)
          if (lt(x, z) && lt(z, y)) direct = false;
        if (direct) covers_.emplace_back(x, y);
      }
    covers_ready_ = true;
  }
  return covers_;
}

std::vector<std::size_t> Poset::covers_of(std::size_t x) const {
  std::vector<std::size_t> out;
  for (auto& [a, b] : covering_relation())
    if (a == x) out.push_back(b);
  return out;
}

std::vector<std::size_t> Poset::covered_by(std::size_t x) const {
  std::vector<std::size_t> out;
  for (auto& [a, b] : covering_relation())
    if (b == x) out.push_back(a);
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < size() && minimal; ++y)
      if (lt(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool maximal = true;
    for (std::size_t y = 0; y < size() && maximal; ++y)
      if (lt(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

Poset::Height Poset::height() const {
  Height h;
  std::size_t n = size();
  if (n == 0) return h;
  // up[x]: edge count of the longest chain rising from x over cover edges.
  std::vector<std::size_t> up(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto& [a, b] : covering_relation()) succ[a].push_back(b);
  // Process in decreasing order of up-set size (a linear extension reversed).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return up_set(a).size() < up_set(b).size();
  });
  for (std::size_t x : order)
    for (std::size_t y : succ[x])
      up[x] = std::max(up[x], up[y] + 1);
  h.length = 0;
  for (std::size_t x = 0; x < n; ++x) h.length = std::max(h.length, up[x]);
  // Lexicographically least maximizing chain.
  std::size_t cur = n;
  for (std::size_t x = 0; x < n; ++x)
    if (up[x] == h.length) { cur = x; break; }
  h.chain.push_back(cur);
  std::size_t left = h.length;
  while (left > 0) {
    for (std::size_t y : succ[cur])
      if (up[y] == left - 1) { cur = y; break; }
    h.chain.push_back(cur);
    --left;
  }
  return h;
}

StructuredSet structured_set_from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::size_t, std::size_t>>& le_pairs,
    bool transitive_closure) {
  std::size_t n = elements.size();
  SbMatrix rel(n, n, elements, elements);
  for (std::size_t i = 0; i < n; ++i) rel.set(i, i, Sb::One);
  for (auto& [i, j] : le_pairs) {
    if (i >= n || j >= n) throw UnknownElement("relation pair out of range");
    rel.set(i, j, Sb::One);
  }
  if (transitive_closure) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rel.at(i, k) == Sb::One)
          for (std::size_t j = 0; j < n; ++j)
            if (rel.at(k, j) == Sb::One) rel.set(i, j, Sb::One);
  }
  return StructuredSet{std::move(elements), std::move(rel)};
}

SbMatrix c_matrix(const StructuredSet& s) {
  return s.relation.complement().transpose();
}

CrankResult c_rank(const StructuredSet& s, const SbLimits& limits) {
  RankResult r = rank(c_matrix(s), limits);
  return CrankResult{r.rank, std::move(r.witness)};
}

CrankResult c_rank(const Poset& p, const SbLimits& limits) {
  return c_rank(p.base(), limits);
}

std::optional<Witness> c_independent(const StructuredSet& s,
                                     const std::vector<std::size_t>& w,
                                     const SbLimits& limits) {
  return columns_independent(c_matrix(s), w, limits);
}

std::optional<Witness> c_independent(const Poset& p,
                                     const std::vector<std::size_t>& w,
                                     const SbLimits& limits) {
  return c_independent(p.base(), w, limits);
}

}  // namespace cranklab
