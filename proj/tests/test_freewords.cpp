#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <numeric>
#include <random>

#include "kbg/freewords.hpp"

using namespace kbg;

namespace {

FreeWord make(int arity, std::initializer_list<Letter> letters) {
  return FreeWord(arity, std::vector<Letter>(letters));
}

// Independent gcd of exponent sums via std::gcd.
i64 sums_gcd(const FreeWord& w) {
  i64 g = 0;
  for (i64 s : w.exponent_sums()) g = std::gcd(g, s < 0 ? -s : s);
  return g;
}

FreeWord random_reduced_word(std::mt19937_64& rng, int arity, i64 len) {
  std::vector<Letter> letters;
  int prev = -1;
  for (i64 n = 0; n < len; ++n) {
    int symbol;
    do {
      symbol = static_cast<int>(rng() % (2 * static_cast<unsigned>(arity)));
    } while (prev >= 0 && (symbol ^ 1) == prev);
    letters.push_back({symbol / 2, symbol % 2 == 0 ? 1 : -1});
    prev = symbol;
  }
  return FreeWord(arity, letters);
}

}  // namespace

TEST_CASE("reduce cancels, merges and preserves reduced input") {
  CHECK(make(1, {{0, 1}, {0, -1}}).is_identity());
  CHECK(make(2, {{0, 2}, {1, 1}, {1, -1}, {0, 1}}) == make(2, {{0, 3}}));
  const FreeWord w = make(2, {{0, 1}, {1, 2}});
  CHECK(w.letters() == std::vector<Letter>{{0, 1}, {1, 2}});
  CHECK(w.length() == 3);
}

TEST_CASE("reduce rejects out-of-range variables") {
  CHECK_THROWS_AS(make(1, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(make(2, {{-1, 1}}), DomainError);
}

TEST_CASE("reduce drops zero exponents and is idempotent") {
  const FreeWord w = make(2, {{0, 0}, {1, 3}, {1, -3}, {0, 2}});
  CHECK(w == make(2, {{0, 2}}));
  CHECK(reduce(2, w.letters()) == w);
}

TEST_CASE("exponent sums and commutator membership") {
  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  CHECK(commutator(x, y).exponent_sums() == std::vector<i64>{0, 0});
  CHECK(commutator(x, y).in_commutator_subgroup());

  const FreeWord w = make(2, {{0, 2}, {1, -3}});
  CHECK(w.exponent_sums() == std::vector<i64>{2, -3});
  CHECK_FALSE(w.in_commutator_subgroup());

  CHECK(make(2, {{0, 1}, {1, 1}, {0, 1}}).exponent_sums() == std::vector<i64>{2, 1});
  CHECK(FreeWord(3).in_commutator_subgroup());
  CHECK_FALSE((x.pow(2) * commutator(x, y)).in_commutator_subgroup());
}

TEST_CASE("word algebra basics") {
  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * y).inverse() == y.inverse() * x.inverse());
  CHECK(x.pow(3) == make(2, {{0, 3}}));
  CHECK((x * y).pow(2) == make(2, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  CHECK((x * y).pow(-1) == y.inverse() * x.inverse());
  CHECK(x.pow(0).is_identity());
}

TEST_CASE("nielsen_normalize on x^2 y^2 produces the commutator witness") {
  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  const FreeWord w = x.pow(2) * y.pow(2);
  const NielsenNormalForm nf = nielsen_normalize(w);
  CHECK(nf.m == 2);
  CHECK(nf.u.in_commutator_subgroup());
  // Postconditions, verified by evaluation.
  CHECK(nf.alpha.apply(w) == FreeWord::generator(2, 0, nf.m) * nf.u);
  // The deterministic strategy lands on alpha: x -> x y^-1, y -> y.
  CHECK(nf.alpha.generator_image(0) == x * y.inverse());
  CHECK(nf.alpha.generator_image(1) == y);
  CHECK(nf.u == commutator(x, y));
}

TEST_CASE("nielsen_normalize trivial shapes") {
  const FreeWord x1 = FreeWord::generator(1, 0);
  const NielsenNormalForm cubed = nielsen_normalize(x1.pow(3));
  CHECK(cubed.m == 3);
  CHECK(cubed.u.is_identity());
  CHECK(cubed.alpha.is_identity_composition());

  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  const NielsenNormalForm comm = nielsen_normalize(commutator(x, y));
  CHECK(comm.m == 0);
  CHECK(comm.u == commutator(x, y));
  CHECK(comm.alpha.is_identity_composition());

  CHECK(nielsen_normalize(x.pow(2) * y.pow(4)).m == 2);
  CHECK(nielsen_normalize(FreeWord(2)).m == 0);
}

TEST_CASE("nielsen_normalize yields nonnegative m for negative sums") {
  const FreeWord x = FreeWord::generator(1, 0);
  const NielsenNormalForm nf = nielsen_normalize(x.pow(-5));
  CHECK(nf.m == 5);
  CHECK(nf.alpha.apply(x.pow(-5)) == x.pow(5));
}

TEST_CASE("aut_apply matches substitution") {
  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  const FreeWord w = x.pow(2) * y.pow(2);

  FreeAut identity_aut(2);
  CHECK(identity_aut.apply(w) == w);

  FreeAut alpha(2);
  alpha.append(NielsenMove::right_mult(0, 1, -1));  // x -> x y^-1
  CHECK(alpha.apply(w) == x * y.inverse() * x * y);
  CHECK(alpha.inverse().apply(alpha.apply(w)) == w);

  FreeAut swapper(2);
  swapper.append(NielsenMove::swap(0, 1));
  CHECK(swapper.generator_image(0) == y);
  CHECK(swapper.generator_image(1) == x);
  CHECK(alpha.generator_image(0) == x * y.inverse());
  CHECK(identity_aut.generator_image(0) == x);
}

TEST_CASE("aut arity is validated") {
  FreeAut alpha(2);
  CHECK_THROWS_AS(alpha.apply(FreeWord::generator(3, 2)), DomainError);
  CHECK_THROWS_AS(alpha.append(NielsenMove::right_mult(0, 0, 1)), DomainError);
  CHECK_THROWS_AS(alpha.append(NielsenMove::invert(5)), DomainError);
}

TEST_CASE("random words: normalize postconditions, gcd invariance, roundtrip") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 2000; ++iter) {
    const int arity = 1 + static_cast<int>(rng() % 4);
    const FreeWord w = random_reduced_word(rng, arity, static_cast<i64>(rng() % 13));

    const NielsenNormalForm nf = nielsen_normalize(w);
    REQUIRE(nf.alpha.apply(w) == FreeWord::generator(arity, 0, nf.m) * nf.u);
    REQUIRE(nf.u.in_commutator_subgroup());
    REQUIRE(nf.m == sums_gcd(w));

    FreeAut alpha(arity);
    for (int m = 0; m < 4; ++m) {
      const int i = static_cast<int>(rng() % static_cast<unsigned>(arity));
      const int j = (i + 1 + static_cast<int>(rng() % std::max(1u, static_cast<unsigned>(arity - 1)))) % arity;
      switch (rng() % 3) {
        case 0:
          if (i != j) alpha.append(NielsenMove::swap(i, j));
          break;
        case 1:
          alpha.append(NielsenMove::invert(i));
          break;
        default:
          if (i != j) alpha.append(NielsenMove::right_mult(i, j, rng() % 2 == 0 ? 1 : -1));
          break;
      }
    }
    REQUIRE(sums_gcd(alpha.apply(w)) == sums_gcd(w));
    REQUIRE(alpha.inverse().apply(alpha.apply(w)) == w);
  }
}

TEST_CASE("overflow in exponent merging fails loudly") {
  const i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(make(1, {{0, big}, {0, 1}}), OverflowError);
  CHECK_THROWS_AS(FreeWord::generator(1, 0, big).pow(2), OverflowError);
  CHECK_THROWS_AS(make(1, {{0, std::numeric_limits<i64>::min()}}).inverse(), OverflowError);
}

TEST_CASE("reduced word enumeration is exhaustive and ordered") {
  const std::vector<FreeWord> words = reduced_words_up_to(2, 4);
  CHECK(words.size() == 1 + 4 + 12 + 36 + 108);
  CHECK(words[0].is_identity());
  CHECK(words[1] == FreeWord::generator(2, 0));       // x
  CHECK(words[2] == FreeWord::generator(2, 0, -1));   // x^-1
  CHECK(words[3] == FreeWord::generator(2, 1));       // y
  CHECK(words[5] == FreeWord::generator(2, 0, 2));    // x^2 opens length two
  for (const FreeWord& w : words) CHECK(w.length() <= 4);
  CHECK(reduced_words_up_to(2, -1).empty());
  CHECK(reduced_words_up_to(1, 2).size() == 5);  // 1, x, x^-1, x^2, x^-2
}
