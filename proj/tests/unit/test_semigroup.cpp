#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "coesg/oracle.hpp"
#include "coesg/semigroup.hpp"
#include "helpers.hpp"

using namespace coesg;
using test_helpers::sg;
using test_helpers::tail;

TEST_CASE("from_generators canonical forms") {
  CHECK(sg({1}).is_naturals());
  CHECK(sg({1}).conductor() == 0);
  CHECK(sg({1, 3}).is_naturals());

  // ⟨4,6,7⟩ = {0,4,6,7,8,10,→}
  NumericalSemigroup s = sg({4, 6, 7});
  CHECK(s.conductor() == 10);
  CHECK(s.small_elements() == std::vector<Int>{0, 4, 6, 7, 8});

  // ⟨6,8,13,14,15,17⟩ = {0,6,8,12,→}
  NumericalSemigroup t = sg({6, 8, 13, 14, 15, 17});
  CHECK(t.conductor() == 12);
  CHECK(t.small_elements() == std::vector<Int>{0, 6, 8});

  CHECK_THROWS_WITH_AS(sg({4, 6}), "gcd_not_one: generators have gcd 2", domain_error);
  try {
    sg({4, 6});
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::gcd_not_one);
  }

  // Generator order and duplicates do not matter.
  CHECK(sg({7, 4, 6, 4}) == s);
}

TEST_CASE("from_small_elements validates its input") {
  CHECK(tail({0, 6, 8}, 12) == sg({6, 8, 13, 14, 15, 17}));
  CHECK(NumericalSemigroup::from_small_elements({}, 0).is_naturals());
  // {0,6,9,10,→} is a valid numerical semigroup (9+9 is past the conductor).
  NumericalSemigroup s = tail({0, 6}, 9);
  CHECK(s.frobenius() == 8);
  CHECK(s.contains(9));
  CHECK_FALSE(s.contains(7));
  // 4+4 = 8 would be missing: not additively closed.
  CHECK_THROWS_AS(tail({0, 4}, 9), domain_error);
  // 0 must be present.
  CHECK_THROWS_AS(tail({4}, 6), domain_error);
}

TEST_CASE("membership") {
  NumericalSemigroup s = sg({4, 6, 7});
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(0));
  CHECK(s.contains(10));
  CHECK(s.contains(123456));
  CHECK_FALSE(s.contains(-4));
  CHECK_FALSE(sg({2, 5}).contains(3));
}

TEST_CASE("frobenius, genus, multiplicity") {
  NumericalSemigroup s = sg({5, 7, 9});
  CHECK(s.frobenius() == 13);
  CHECK(s.genus() == 8);
  CHECK(s.multiplicity() == 5);

  NumericalSemigroup n = NumericalSemigroup::naturals();
  CHECK(n.frobenius() == -1);
  CHECK(n.genus() == 0);
  CHECK(n.multiplicity() == 1);

  CHECK(sg({2, 5}).frobenius() == 3);
  CHECK(sg({2, 5}).genus() == 2);
}

TEST_CASE("minimal generators") {
  // {0,6,8,12,→} is generated by {6,8,13,14,15,17}, but 14 = 6+8 is
  // redundant, so the minimal system drops it.
  CHECK(tail({0, 6, 8}, 12).minimal_generators() == std::vector<Int>{6, 8, 13, 15, 17});
  CHECK(sg({6, 8, 13, 14, 15, 17}) == tail({0, 6, 8}, 12));
  CHECK(NumericalSemigroup::naturals().minimal_generators() == std::vector<Int>{1});
  CHECK(sg({4, 6, 7}).minimal_generators() == std::vector<Int>{4, 6, 7});
  // Redundant generators are dropped.
  CHECK(sg({4, 6, 7, 8, 10, 11}).minimal_generators() == std::vector<Int>{4, 6, 7});
  CHECK(sg({4, 6, 7}).embedding_dimension() == 3);
}

TEST_CASE("apery sets") {
  CHECK(sg({4, 6, 7}).apery_set(6) == std::vector<Int>{0, 4, 7, 8, 11, 15});
  CHECK(NumericalSemigroup::naturals().apery_set(1) == std::vector<Int>{0});
  CHECK(sg({2, 5}).apery_set(2) == std::vector<Int>{0, 5});
  CHECK_THROWS_AS(sg({4, 6, 7}).apery_set(5), domain_error);
  CHECK_THROWS_AS(sg({4, 6, 7}).apery_set(0), domain_error);
}

TEST_CASE("apery set structure") {
  // |Ap(S,n)| = n, one least element per residue class, w - n is a gap.
  for (const NumericalSemigroup& s : {sg({4, 6, 7}), sg({5, 7, 9}), sg({2, 9})}) {
    for (Int n : s.minimal_generators()) {
      std::vector<Int> ap = s.apery_set(n);
      REQUIRE(static_cast<Int>(ap.size()) == n);
      std::set<Int> residues;
      for (Int w : ap) {
        residues.insert(w % n);
        CHECK(s.contains(w));
        CHECK_FALSE(s.contains(w - n));
      }
      CHECK(static_cast<Int>(residues.size()) == n);
    }
  }
}

TEST_CASE("remove_element") {
  CHECK(NumericalSemigroup::naturals().remove_element(1) == sg({2, 3}));
  CHECK(sg({2, 3}).remove_element(3) == sg({2, 5}));
  CHECK_THROWS_AS(sg({2, 3}).remove_element(4), domain_error);
  try {
    sg({2, 3}).remove_element(4);
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::not_minimal_generator);
  }
}

TEST_CASE("remove_pair") {
  CHECK(sg({2, 3}).remove_pair(2) == sg({4, 5, 6, 7}));
  CHECK(sg({4, 5, 6, 7}).remove_pair(4) == sg({6, 7, 8, 9, 10, 11}));
  CHECK_THROWS_AS(sg({2, 5}).remove_pair(2), domain_error);
  try {
    sg({2, 5}).remove_pair(2);
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::pair_not_minimal);
  }
}

TEST_CASE("fill_frobenius") {
  // {0,6,10,→}: F = 9, adds {8,9}, giving {0,6,8,→}.
  NumericalSemigroup a = tail({0, 6}, 10);
  NumericalSemigroup filled = a.fill_frobenius();
  CHECK(filled == tail({0, 6}, 8));
  CHECK(filled.contains(8));
  CHECK(filled.contains(9));

  // {0,6,8,10,→}: F = 9 but 8 is already present, so only 9 is added.
  NumericalSemigroup b = tail({0, 6, 8}, 10);
  CHECK(b.fill_frobenius() == tail({0, 6}, 8));
  CHECK(b.fill_frobenius().genus() == b.genus() - 1);
  CHECK(a.fill_frobenius().genus() == a.genus() - 2);

  CHECK(sg({2, 3}).fill_frobenius().is_naturals());
  CHECK_THROWS_AS(NumericalSemigroup::naturals().fill_frobenius(), domain_error);
}

TEST_CASE("sylvester two-generator formulas") {
  CHECK(sylvester(2, 5).frobenius == 3);
  CHECK(sylvester(2, 5).genus == 2);
  CHECK(sylvester(2, 3).frobenius == 1);
  CHECK(sylvester(2, 3).genus == 1);
  CHECK(sylvester(4, 7).frobenius == 17);
  CHECK(sylvester(4, 7).genus == 9);
  CHECK_THROWS_AS(sylvester(4, 6), domain_error);
  CHECK_THROWS_AS(sylvester(5, 3), domain_error);
  CHECK_THROWS_AS(sylvester(1, 3), domain_error);
}

TEST_CASE("sylvester agrees with generated semigroups") {
  for (Int a = 2; a <= 50; ++a) {
    for (Int b = a + 1; b <= 50; ++b) {
      if (std::gcd(a, b) != 1) continue;
      NumericalSemigroup s = sg({a, b});
      SylvesterValues v = sylvester(a, b);
      CHECK(s.frobenius() == v.frobenius);
      CHECK(s.genus() == v.genus);
    }
  }
}

TEST_CASE("symmetry, small elements, Wilf") {
  CHECK(sg({2, 5}).is_symmetric());
  CHECK(sg({5, 7, 9}).small_count() == 6);
  CHECK(sg({5, 7, 9}).small_elements() == std::vector<Int>{0, 5, 7, 9, 10, 12});
  CHECK_FALSE(sg({3, 4, 5}).is_symmetric());
  CHECK(NumericalSemigroup::naturals().small_count() == 0);
  CHECK(sg({5, 7, 9}).wilf_holds());
  CHECK(NumericalSemigroup::naturals().wilf_holds());
}

TEST_CASE("gaps") {
  CHECK(sg({2, 5}).gaps() == std::vector<Int>{1, 3});
  CHECK(sg({4, 6, 7}).gaps() == std::vector<Int>{1, 2, 3, 5, 9});
  CHECK(NumericalSemigroup::naturals().gaps().empty());
}

TEST_CASE("equality, ordering, hashing") {
  CHECK(sg({4, 6, 7}) == tail({0, 4, 6, 7, 8}, 10));
  CHECK(sg({2, 3}) != sg({2, 5}));
  std::set<NumericalSemigroup> pool{sg({2, 3}), sg({2, 5}), sg({2, 3})};
  CHECK(pool.size() == 2);
  std::hash<NumericalSemigroup> h;
  CHECK(h(sg({4, 6, 7})) == h(tail({0, 4, 6, 7, 8}, 10)));
}

TEST_CASE("intersection") {
  NumericalSemigroup s = intersection(sg({4, 6, 7}), sg({2, 5}));
  CHECK(s == sg({4, 6, 7}));  // ⟨4,6,7⟩ ⊆ ⟨2,5⟩
  NumericalSemigroup t = intersection(sg({2, 5}), sg({3, 4}));
  for (Int n = 0; n <= 2 * t.conductor() + 4; ++n) {
    CHECK(t.contains(n) == (sg({2, 5}).contains(n) && sg({3, 4}).contains(n)));
  }
  CHECK(intersection(NumericalSemigroup::naturals(), sg({2, 5})) == sg({2, 5}));
}

TEST_CASE("generator list parsing") {
  CHECK(parse_generator_list("4,6,7").values() == std::vector<Int>{4, 6, 7});
  CHECK(parse_generator_list("7").values() == std::vector<Int>{7});
  for (const char* bad : {"", "4, 6", "4,,6", "a", "4 ,6", "-4", "+4", "0", "4,"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_generator_list(bad), domain_error);
  }
  try {
    parse_generator_list("4, 6");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("generator set validation") {
  CHECK(GeneratorSet({4, 4, 6, 7}).values() == std::vector<Int>{4, 6, 7});
  CHECK_THROWS_AS(GeneratorSet(std::vector<Int>{}), domain_error);
  CHECK_THROWS_AS(GeneratorSet({0, 2}), domain_error);
  CHECK_THROWS_AS(GeneratorSet({-3}), domain_error);
  CHECK(GeneratorSet({4, 6}).all_even());
  CHECK_FALSE(GeneratorSet({4, 7}).all_even());
  CHECK(GeneratorSet({6, 10}).gcd() == 2);
}

TEST_CASE("structural invariants across an exhaustive sample") {
  // Every semigroup of genus ≤ 7, via the independent generator.
  for (const NumericalSemigroup& s : oracle::all_semigroups_up_to_genus(7)) {
    CAPTURE(test_helpers::show(s.minimal_generators()));
    Int c = s.conductor();

    // Additive closure on [0, 2·conductor].
    for (Int a = 0; a <= c; ++a) {
      if (!s.contains(a)) continue;
      for (Int b = a; b + a <= 2 * c; ++b) {
        if (s.contains(b)) CHECK(s.contains(a + b));
      }
    }

    std::vector<Int> msg = s.minimal_generators();
    CHECK(std::reduce(msg.begin(), msg.end(), Int{0},
                      [](Int a, Int b) { return std::gcd(a, b); }) == 1);
    if (!s.is_naturals()) {
      CHECK(s.embedding_dimension() <= s.multiplicity());
      CHECK(s.frobenius() <= 2 * s.genus() - 1);
      // msg ∖ {m} lands in the Apéry set of the multiplicity.
      std::vector<Int> ap = s.apery_set(s.multiplicity());
      for (Int x : msg) {
        if (x == s.multiplicity()) continue;
        CHECK(std::binary_search(ap.begin(), ap.end(), x));
      }
    }
    CHECK(s.small_count() == s.frobenius() + 1 - s.genus());
    CHECK(s.genus() == static_cast<Int>(s.gaps().size()));

    // Round trip through the minimal generating set.
    CHECK(NumericalSemigroup::from_generators(GeneratorSet(msg)) == s);

    // fill_frobenius adds exactly {F−1, F} ∖ S.
    if (!s.is_naturals()) {
      NumericalSemigroup up = s.fill_frobenius();
      Int added = s.genus() - up.genus();
      CHECK(added == (s.contains(s.frobenius() - 1) ? 1 : 2));
      for (Int n = 0; n <= c; ++n) {
        bool expect = s.contains(n) || n == s.frobenius() || n == s.frobenius() - 1;
        CHECK(up.contains(n) == expect);
      }
    }
  }
}
