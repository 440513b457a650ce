#include <doctest.h>

#include <random>
#include <set>

#include "cranklab/completion.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace cranklab;
using namespace cranklab::testing;

namespace {

// Six elements, two tops: e over {a,b,c} and f over {b,c,d}.
Poset six_poset() {
  return make_poset({"a", "b", "c", "d", "e", "f"},
                    {{0, 4}, {1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 5}});
}

}  // namespace

TEST_CASE("dm completion of the six-element example") {
  SetFamilyLattice dm = dm_completion(six_poset());
  CHECK(dm.members.size() == 9);
  std::set<std::uint64_t> expected{
      0,                 // empty intersection of the two principal tops
      0b000001,          // {a}
      0b000010,          // {b}
      0b000100,          // {c}
      0b001000,          // {d}
      0b000110,          // {b,c}
      0b010111,          // {a,b,c,e}
      0b101110,          // {b,c,d,f}
      0b111111};         // everything
  CHECK(std::set<std::uint64_t>(dm.members.begin(), dm.members.end()) ==
        expected);
  CHECK(dm.lattice.poset().height().length == 4);
  CHECK(c_rank(six_poset()).rank == 4);
}

TEST_CASE("dm of a lattice is isomorphic to it") {
  for (const Lattice& l : lattice_corpus(6)) {
    SetFamilyLattice dm = dm_completion(l.poset());
    REQUIRE(dm.members.size() == l.size());
    // origin_map is then a bijection preserving both directions.
    std::set<std::size_t> image(dm.origin_map.begin(), dm.origin_map.end());
    CHECK(image.size() == l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = 0; y < l.size(); ++y)
        CHECK(l.le(x, y) ==
              dm.lattice.le(dm.origin_map[x], dm.origin_map[y]));
  }
}

TEST_CASE("dm of a two-element antichain") {
  SetFamilyLattice dm = dm_completion(make_poset({"x", "y"}, {}));
  CHECK(std::set<std::uint64_t>(dm.members.begin(), dm.members.end()) ==
        std::set<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("uc closure basics") {
  // Chain: UC adds only the empty set.
  SetFamilyLattice uc = union_closure(make_poset({"a", "b"}, {{0, 1}}));
  CHECK(uc.members.size() == 3);
  // Antichain of n: full powerset.
  SetFamilyLattice anti = union_closure(make_poset({"x", "y", "z"}, {}));
  CHECK(anti.members.size() == 8);
}

TEST_CASE("closure invariants and embeddings") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> edge(0, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 5;
    std::vector<std::pair<std::size_t, std::size_t>> le;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge(rng) < 3) le.emplace_back(i, j);
    Poset p = Poset::validate(
        structured_set_from_pairs(index_labels(n), le, true));

    SetFamilyLattice dm = dm_completion(p);
    SetFamilyLattice uc = union_closure(p);
    // Intersection / union closedness, checked on all pairs.
    std::set<std::uint64_t> dset(dm.members.begin(), dm.members.end());
    std::set<std::uint64_t> uset(uc.members.begin(), uc.members.end());
    for (std::uint64_t a : dset)
      for (std::uint64_t b : dset) CHECK(dset.count(a & b) == 1);
    for (std::uint64_t a : uset)
      for (std::uint64_t b : uset) CHECK(uset.count(a | b) == 1);
    CHECK(uset.count(0) == 1);
    CHECK(dset.count((1ull << n) - 1) == 1);
    // Smallest completion is never larger than the largest one.
    CHECK(dm.members.size() <= uc.members.size());
    // Both origin maps are order embeddings.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(p.le(x, y) == dm.lattice.le(dm.origin_map[x], dm.origin_map[y]));
        CHECK(p.le(x, y) == uc.lattice.le(uc.origin_map[x], uc.origin_map[y]));
      }
  }
}

TEST_CASE("restriction of independence to the original poset") {
  // The worked six-element example: 4 = 4 = 4.
  RestrictionReport rep = restrict_independence(six_poset());
  CHECK(rep.rank_poset == 4);
  CHECK(rep.rank_dm == 4);
  CHECK(rep.height_dm == 4);
  CHECK(rep.families_equal);

  // All posets on <= 4 elements.
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) {
      RestrictionReport r = restrict_independence(p);
      CHECK(r.rank_poset == r.rank_dm);
      CHECK(r.rank_dm == r.height_dm);
      CHECK(r.families_equal);
      // Cross-check the direct family against the raw matrix oracle.
      for (const auto& sub : r.independent_poset)
        if (!sub.empty())
          CHECK(oracle_independent(c_matrix(p), sub));
    }
}
