#include "cranklab/completion.hpp"

#include <algorithm>
#include <set>

namespace cranklab {

namespace {

std::uint64_t down_mask(const Poset& p, std::size_t x) {
  std::uint64_t m = 0;
  for (std::size_t y : p.down_set(x)) m |= (1ull << y);
  return m;
}

std::string mask_label(const std::vector<std::string>& ground,
                       std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask & (1ull << i)) {
      if (!first) s += ",";
      s += ground[i];
      first = false;
    }
  return s + "}";
}

SetFamilyLattice build(const Poset& p, std::set<std::uint64_t> family,
                       bool unions) {
  // Worklist fixpoint over the pairwise operation.
  for (;;) {
    std::set<std::uint64_t> next = family;
    for (std::uint64_t a : family)
      for (std::uint64_t b : family)
        next.insert(unions ? (a | b) : (a & b));
    if (next.size() == family.size()) break;
    family.swap(next);
  }

  SetFamilyLattice out{p.labels(), {family.begin(), family.end()}, {}, [&] {
    std::vector<std::uint64_t> members(family.begin(), family.end());
    std::vector<std::string> labels;
    for (std::uint64_t m : members) labels.push_back(mask_label(p.labels(), m));
    std::vector<std::pair<std::size_t, std::size_t>> le_pairs;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if ((members[i] & members[j]) == members[i]) le_pairs.emplace_back(i, j);
    return Lattice::validate(
        Poset::validate(structured_set_from_pairs(labels, le_pairs)));
  }()};

  for (std::size_t x = 0; x < p.size(); ++x) {
    std::uint64_t d = down_mask(p, x);
    out.origin_map.push_back(
        std::lower_bound(out.members.begin(), out.members.end(), d) -
        out.members.begin());
  }
  return out;
}

}  // namespace

SetFamilyLattice dm_completion(const Poset& p) {
  std::set<std::uint64_t> family;
  for (std::size_t x = 0; x < p.size(); ++x) family.insert(down_mask(p, x));
  std::uint64_t full =
      p.size() == 64 ? ~0ull : ((1ull << p.size()) - 1);
  family.insert(full);
  return build(p, std::move(family), /*unions=*/false);
}

SetFamilyLattice union_closure(const Poset& p) {
  std::set<std::uint64_t> family;
  for (std::size_t x = 0; x < p.size(); ++x) family.insert(down_mask(p, x));
  family.insert(0);
  return build(p, std::move(family), /*unions=*/true);
}

RestrictionReport restrict_independence(const Poset& p,
                                        const SbLimits& limits) {
  RestrictionReport rep;
  SetFamilyLattice dm = dm_completion(p);
  rep.rank_poset = c_rank(p, limits).rank;
  rep.rank_dm = c_rank(dm.lattice.poset(), limits).rank;
  rep.height_dm = dm.lattice.poset().height().length;

  std::size_t n = p.size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::size_t> sub, sub_dm;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) {
        sub.push_back(i);
        sub_dm.push_back(dm.origin_map[i]);
      }
    if (sub.empty() || c_independent(p, sub, limits))
      rep.independent_poset.push_back(sub);
    if (sub.empty() || c_independent(dm.lattice.poset(), sub_dm, limits))
      rep.independent_restricted.push_back(sub);
  }
  std::sort(rep.independent_poset.begin(), rep.independent_poset.end());
  std::sort(rep.independent_restricted.begin(),
            rep.independent_restricted.end());
  rep.families_equal = rep.independent_poset == rep.independent_restricted;
  return rep;
}

}  // namespace cranklab
