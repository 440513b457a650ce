#include <doctest.h>

#include "cranklab/order.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace cranklab;
using namespace cranklab::testing;

TEST_CASE("poset axiom diagnostics list every violation") {
  // Not reflexive at 0, symmetric pair (1,2), broken transitivity via 0<1<2.
  std::vector<std::string> els{"x", "y", "z"};
  SbMatrix rel(3, 3, els, els);
  rel.set(1, 1, Sb::One);
  rel.set(2, 2, Sb::One);
  rel.set(1, 2, Sb::One);
  rel.set(2, 1, Sb::One);
  StructuredSet s{els, rel};
  PosetDiagnostics d = check_poset_axioms(s);
  CHECK(!d.ok());
  CHECK(d.not_reflexive == std::vector<std::size_t>{0});
  REQUIRE(d.not_antisymmetric.size() == 1);
  CHECK(d.not_antisymmetric[0] == std::make_pair(std::size_t{1}, std::size_t{2}));
  CHECK_THROWS_AS(Poset::validate(s), NotAPoset);

  StructuredSet t = structured_set_from_pairs({"a", "b", "c"}, {{0, 1}, {1, 2}});
  PosetDiagnostics dt = check_poset_axioms(t);
  REQUIRE(dt.not_transitive.size() == 1);
  CHECK(dt.not_transitive[0] == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("cover relation, up and down sets, ideals") {
  Poset p = make_poset({"B", "1", "2", "3", "T"},
                       {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  CHECK(p.le(0, 4));
  CHECK(!p.le(1, 3));
  CHECK(p.down_set(2) == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.up_set(3) == std::vector<std::size_t>{3, 4});
  CHECK(p.covers_of(0) == std::vector<std::size_t>{1, 3});
  CHECK(p.covered_by(4) == std::vector<std::size_t>{2, 3});
  CHECK(p.is_order_ideal({0, 1}));
  CHECK(!p.is_order_ideal({1}));
  CHECK(p.minimal_elements() == std::vector<std::size_t>{0});
  CHECK(p.maximal_elements() == std::vector<std::size_t>{4});
  // Every down-set is an order ideal.
  for (std::size_t x = 0; x < p.size(); ++x)
    CHECK(p.is_order_ideal(p.down_set(x)));
}

TEST_CASE("reversed poset swaps the order") {
  Poset p = make_poset({"a", "b", "c"}, {{0, 1}, {1, 2}});
  Poset r = p.reversed();
  CHECK(r.le(2, 0));
  CHECK(!r.le(0, 2));
  CHECK(r.minimal_elements() == std::vector<std::size_t>{2});
}

TEST_CASE("height finds the longest chain, lexicographically least") {
  Poset p = make_poset({"B", "1", "2", "3", "T"},
                       {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  Poset::Height h = p.height();
  CHECK(h.length == 3);
  CHECK(h.chain == std::vector<std::size_t>{0, 1, 2, 4});
  // An antichain has height 0.
  CHECK(make_poset({"u", "v"}, {}).height().length == 0);
}

TEST_CASE("height agrees with chain enumeration on all small posets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) {
      // Longest chain by brute force over subsets.
      std::size_t best = 0;
      for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        auto v = mask_to_vec(mask);
        bool chain = true;
        for (std::size_t i = 0; i < v.size() && chain; ++i)
          for (std::size_t j = i + 1; j < v.size() && chain; ++j)
            if (!p.lt(v[i], v[j]) && !p.lt(v[j], v[i])) chain = false;
        if (chain) best = std::max(best, v.size() - 1);
      }
      Poset::Height h = p.height();
      CHECK(h.length == best);
      CHECK(h.chain.size() == best + 1);
      for (std::size_t i = 0; i + 1 < h.chain.size(); ++i)
        CHECK(p.lt(h.chain[i], h.chain[i + 1]));
    }
}

TEST_CASE("c-matrix columns are the element vectors") {
  Poset p = make_poset({"a", "b", "c"}, {{0, 2}, {1, 2}});
  SbMatrix c = c_matrix(p);
  // Column x holds [x not<= y] over y.
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      CHECK((c.at(y, x) == Sb::One) == !p.le(x, y));
}

TEST_CASE("c-rank matches the brute-force oracle on all small posets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) {
      CrankResult r = c_rank(p);
      CHECK(r.rank == oracle_rank(c_matrix(p)));
      for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        auto w = mask_to_vec(mask);
        CHECK(c_independent(p, w).has_value() ==
              oracle_independent(c_matrix(p), w));
      }
    }
}

TEST_CASE("c-rank of a chain is its height") {
  Poset p = make_poset({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(c_rank(p).rank == 3);
  Poset anti = make_poset({"u", "v", "w"}, {});
  CHECK(c_rank(anti).rank == oracle_rank(c_matrix(anti)));
}

TEST_CASE("unknown elements rejected") {
  Poset p = make_poset({"a"}, {});
  CHECK_THROWS_AS(p.up_set(1), UnknownElement);
  CHECK_THROWS_AS((void)c_independent(p, {3}), SboolError);
}
