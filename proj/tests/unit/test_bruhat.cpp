#include <doctest.h>

#include <unordered_set>
#include <vector>

#include "weyltab/bruhat.hpp"
#include "weyltab/errors.hpp"

using namespace weyltab;

namespace {

AffineElement word_product(const AffineGroup& G, const std::vector<int>& word) {
  AffineElement w = G.identity();
  for (int g : word) w = w.right_mul_gen(g);
  return w;
}

}  // namespace

TEST_CASE("the order has the expected poset shape near the identity") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement e = G.identity();
  const AffineElement w0 = G.longest_finite();
  const AffineElement wmax = G.wmax();
  CHECK(bruhat_leq(G, e, e));
  CHECK(bruhat_leq(G, e, wmax));
  CHECK(bruhat_leq(G, G.generator(1), w0));
  CHECK(bruhat_leq(G, w0, wmax));
  CHECK_FALSE(bruhat_leq(G, wmax, w0));
  CHECK_FALSE(bruhat_leq(G, G.generator(0), w0));  // s0 is no subword of w0
  CHECK(bruhat_leq(G, word_product(G, {1, 2}), word_product(G, {1, 2, 1})));
  CHECK_FALSE(bruhat_leq(G, word_product(G, {1, 2}), word_product(G, {2, 1})));
}

TEST_CASE("a cache answers only for the element it was built against") {
  const AffineGroup G{RankConfig(3)};
  BruhatCache cache(G, G.wmax());
  CHECK(cache.top() == G.wmax());
  CHECK(cache.top_length() == 10);
  CHECK(bruhat_leq(G.longest_finite(), G.wmax(), cache));
  CHECK_THROWS_AS(bruhat_leq(G.identity(), G.longest_finite(), cache), RankError);
}

TEST_CASE("lifting recursion agrees with subword enumeration at rank 2") {
  const AffineGroup G{RankConfig(2)};
  const std::vector<AffineElement> ball = length_ball(G, 5);
  for (const AffineElement& w : ball) {
    const std::unordered_set<std::string> oracle = subword_interval_keys(G, w, 5);
    BruhatCache cache(G, w);
    for (const AffineElement& v : ball)
      CHECK(cache.leq(v) == (oracle.count(v.packed_key()) > 0));
  }
}

TEST_CASE("the subword oracle refuses unreasonably long words") {
  const AffineGroup G{RankConfig(3)};
  CHECK(subword_oracle(G, G.identity(), G.longest_finite(), 6));
  CHECK_THROWS_AS(subword_oracle(G, G.identity(), G.wmax(), 6), BoundError);
  CHECK_THROWS_AS(subword_interval_keys(G, G.wmax(), 6), BoundError);
}

TEST_CASE("interval growth matches subword enumeration on the maximal element") {
  const AffineGroup G{RankConfig(3)};
  const AffineElement wmax = G.wmax();
  const std::vector<AffineElement> interval = interval_below(G, wmax);
  const std::unordered_set<std::string> oracle = subword_interval_keys(G, wmax, 10);
  CHECK(interval.size() == oracle.size());
  for (const AffineElement& v : interval) CHECK(oracle.count(v.packed_key()) == 1);
}

TEST_CASE("packed interval count agrees with the element-level interval") {
  for (int n : {2, 3}) {
    const AffineGroup G{RankConfig(n)};
    const AffineElement wmax = G.wmax();
    long long dominant = 0;
    for (const AffineElement& v : interval_below(G, wmax))
      dominant += G.in_Wplus(v) ? 1 : 0;
    CHECK(interval_Wplus_count(G, wmax) == dominant);
  }
  // and with the candidate enumeration, which shares nothing with either
  const AffineGroup G4{RankConfig(4)};
  CHECK(interval_Wplus_count(G4, G4.wmax()) ==
        static_cast<long long>(enumerate_Wplus_ideal(G4, G4.wmax()).entries.size()));
}

TEST_CASE("length balls grow breadth-first") {
  const AffineGroup G{RankConfig(2)};
  const std::vector<AffineElement> ball = length_ball(G, 4);
  int prev = 0;
  for (const AffineElement& w : ball) {
    CHECK(G.length(w) >= prev);
    prev = G.length(w);
  }
  CHECK(prev == 4);
  CHECK(ball.front().is_identity());
  // rank 1: the ball is a path, two new elements per length
  const AffineGroup G1{RankConfig(1)};
  CHECK(length_ball(G1, 7).size() == 15);
}

TEST_CASE("the dominant ideal below the maximal element has the published size") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  CHECK(ideal.entries.size() == 8);
  CHECK(ideal.root == G.wmax());

  // entries carry consistent data
  for (const IdealEntry& e : ideal.entries) {
    CHECK(G.weight_of(e.element) == e.weight);
    CHECK(G.length(e.element) == e.length);
    CHECK(e.weight.dominant());
    const auto [w0, y] = G.coset_factorize(e.element);
    CHECK(G.reduced_word(y) == e.y_word);
    CHECK(G.right_set(e.element) == e.right_set);
  }

  // ordering: length descending, word ascending within a length
  for (size_t k = 1; k < ideal.entries.size(); ++k) {
    const IdealEntry& a = ideal.entries[k - 1];
    const IdealEntry& b = ideal.entries[k];
    CHECK((a.length > b.length || (a.length == b.length && a.y_word < b.y_word)));
  }

  CHECK(ideal.entries.front().element == G.wmax());
  CHECK(ideal.entries.back().element == G.longest_finite());
}

TEST_CASE("only dominant roots can anchor an ideal") {
  const AffineGroup G{RankConfig(3)};
  CHECK_THROWS_AS(enumerate_Wplus_ideal(G, G.generator(1)), NotInWplusError);
  // w0 itself is fine and is its own ideal
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.longest_finite());
  CHECK(ideal.entries.size() == 1);
}

TEST_CASE("membership in the ideal is genuine Bruhat comparison") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  const std::unordered_set<std::string> oracle =
      subword_interval_keys(G, G.wmax(), 10);
  for (const IdealEntry& e : ideal.entries)
    CHECK(oracle.count(e.element.packed_key()) == 1);
}
