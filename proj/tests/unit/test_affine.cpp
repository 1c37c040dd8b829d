#include <doctest.h>

#include <vector>

#include "weyltab/affine.hpp"
#include "weyltab/errors.hpp"

using namespace weyltab;

namespace {

AffineElement word_product(const AffineGroup& G, const std::vector<int>& word) {
  AffineElement w = G.identity();
  for (int g : word) w = w.right_mul_gen(g);
  return w;
}

}  // namespace

TEST_CASE("generators are involutions and multiply on the correct side") {
  const AffineGroup G{RankConfig(3)};
  for (int i = 0; i <= 3; ++i) {
    const AffineElement s = G.generator(i);
    CHECK(G.length(s) == 1);
    CHECK(compose(s, s) == G.identity());
    CHECK(s.inverse() == s);
  }
  const AffineElement a = word_product(G, {1, 2, 0, 3});
  for (int i = 0; i <= 3; ++i) {
    CHECK(a.right_mul_gen(i) == compose(a, G.generator(i)));
    CHECK(a.left_mul_gen(i) == compose(G.generator(i), a));
  }
}

TEST_CASE("length is a word metric") {
  const AffineGroup G{RankConfig(3)};
  CHECK(G.length(G.identity()) == 0);
  CHECK(G.length(G.longest_finite()) == 6);
  const AffineElement w = word_product(G, {0, 1, 2, 3, 0, 1});
  CHECK(G.length(w) <= 6);
  CHECK(G.length(w.inverse()) == G.length(w));
  // one generator changes the length by exactly one
  for (int i = 0; i <= 3; ++i) {
    const int diff = G.length(w.right_mul_gen(i)) - G.length(w);
    CHECK((diff == 1 || diff == -1));
  }
}

TEST_CASE("reduced words multiply back and have the right length") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement w = word_product(G, {0, 2, 1, 3, 0, 2, 1, 0});
  const std::vector<int> word = G.reduced_word(w);
  CHECK(static_cast<int>(word.size()) == G.length(w));
  CHECK(word_product(G, word) == w);
  CHECK(G.reduced_word(G.identity()).empty());
}

TEST_CASE("descent sets match length drops") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement w0 = G.longest_finite();
  const RightSet rs = G.right_set(w0);
  CHECK(rs.count() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(rs.contains(i));
  CHECK_FALSE(rs.contains(0));
  CHECK(G.right_set(G.identity()).empty());
  CHECK(G.smallest_right_descent(G.identity()) == -1);
  CHECK(G.smallest_right_descent(w0) == 1);
  for (int i = 0; i <= 3; ++i) {
    CHECK(G.right_descends(w0, i) == (i != 0));
    CHECK(G.left_descends(w0, i) == (i != 0));
  }
}

TEST_CASE("the dot action starts at -2 rho") {
  const AffineGroup G{RankConfig(3)};
  CHECK(G.weight_of(G.identity()) == minus_two_rho(3));
  CHECK(G.weight_of(G.longest_finite()) == zero_weight(3));
  // one reflection steps by a single root
  for (int i = 1; i <= 3; ++i)
    CHECK(G.weight_of(G.generator(i)) ==
          weight_add(minus_two_rho(3), simple_root_weight(3, i)));
  CHECK(G.weight_of(G.generator(0)) ==
        Weight::from_epsilon(std::vector<int>{-4, -1, 1, 4}));
}

TEST_CASE("weights label group elements uniquely on the orbit") {
  const AffineGroup G{RankConfig(3)};
  AffineElement w = G.identity();
  for (int g : {0, 1, 2, 3, 0, 1, 2, 0, 3, 1}) {
    w = w.right_mul_gen(g);
    CHECK(G.element_from_weight(G.weight_of(w)) == w);
  }
}

TEST_CASE("weights off the orbit are rejected") {
  const AffineGroup G{RankConfig(3)};
  // (2, 0, 2) + rho lies on a wall for p = 4
  CHECK_THROWS_AS(G.element_from_weight(Weight(std::vector<int>{2, 0, 2})),
                  OrbitError);
  CHECK_THROWS_AS(G.element_from_weight(Weight(std::vector<int>{1, 0, 0})),
                  OrbitError);
}

TEST_CASE("dominant weight marks the coset-maximal element") {
  const AffineGroup G{RankConfig(3)};
  CHECK_FALSE(G.in_Wplus(G.identity()));
  CHECK(G.in_Wplus(G.longest_finite()));
  const AffineElement w = compose(G.longest_finite(), G.generator(0));
  CHECK(G.length(w) == 7);
  CHECK(G.in_Wplus(w));
  CHECK(G.weight_of(w) == Weight(std::vector<int>{1, 0, 1}));
  CHECK_FALSE(G.in_Wplus(G.generator(1)));
}

TEST_CASE("coset factorization splits lengths additively") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement w = compose(G.longest_finite(), G.generator(0));
  const auto [w0, y] = G.coset_factorize(w);
  CHECK(w0 == G.longest_finite());
  CHECK(compose(w0, y) == w);
  CHECK(G.length(w) == G.length(w0) + G.length(y));
  CHECK_THROWS_AS(G.coset_factorize(G.generator(1)), NotInWplusError);
}

TEST_CASE("the maximal element exists exactly at p = h") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement wmax = G.wmax();
  CHECK(G.length(wmax) == 10);
  CHECK(G.weight_of(wmax) == Weight(std::vector<int>{2, 2, 2}));
  CHECK(G.in_Wplus(wmax));
  const AffineGroup G5{RankConfig(3, 5)};
  CHECK_THROWS_AS(G5.wmax(), RankError);
}

TEST_CASE("configurations below the Coxeter number are rejected") {
  CHECK_THROWS_AS(RankConfig(3, 3), RankError);
  CHECK_THROWS_AS(RankConfig(0), RankError);
  CHECK(RankConfig(3).p == 4);
  CHECK(RankConfig(3, 7).p == 7);
}

TEST_CASE("rank 1 generators never satisfy a braid relation") {
  const AffineGroup G{RankConfig(1)};
  const AffineElement st = compose(G.generator(0), G.generator(1));
  AffineElement power = st;
  for (int k = 1; k <= 8; ++k) {
    CHECK_FALSE(power.is_identity());
    CHECK(G.length(power) == 2 * k);
    power = compose(power, st);
  }
}

TEST_CASE("braid relations distinguish adjacent from commuting pairs") {
  for (int n : {2, 3, 4}) {
    const AffineGroup G{RankConfig(n)};
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const bool adjacent = (j - i == 1) || (i == 0 && j == n);
        const AffineElement st = compose(G.generator(i), G.generator(j));
        AffineElement power = st;
        const int order = adjacent ? 3 : 2;
        for (int k = 1; k < order; ++k) power = compose(power, st);
        CHECK(power == G.identity());
      }
    }
  }
}
