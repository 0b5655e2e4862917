#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kbg/parse.hpp"

using namespace kbg;

TEST_CASE("word grammar basics") {
  CHECK(parse_word("x^2") == FreeWord::generator(1, 0, 2));
  CHECK(parse_word("x1^2") == FreeWord::generator(1, 0, 2));
  CHECK(parse_word("x * y") == parse_word("xy"));
  CHECK(parse_word("x*y^-1*x*y") ==
        FreeWord(2, std::vector<Letter>{{0, 1}, {1, -1}, {0, 1}, {1, 1}}));
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("x x^-1").is_identity());
  CHECK(parse_word("  x ^ 3  ") == FreeWord::generator(1, 0, 3));
  CHECK(parse_word("x2^5") == FreeWord::generator(2, 1, 5));
  CHECK(parse_word("z*t") == FreeWord(4, std::vector<Letter>{{2, 1}, {3, 1}}));
  CHECK(parse_word("x9").arity() == 9);
}

TEST_CASE("word grammar commutators and grouping") {
  const FreeWord x = FreeWord::generator(2, 0);
  const FreeWord y = FreeWord::generator(2, 1);
  CHECK(parse_word("[x,y]") == commutator(x, y));
  CHECK(parse_word("[x, y]^-1") == commutator(x, y).inverse());
  CHECK(parse_word("(xy)^2") == (x * y).pow(2));
  CHECK(parse_word("(x*y^-1)^3") == (x * y.inverse()).pow(3));
  CHECK(parse_word("[x^2, [x,y]]") == commutator(x.pow(2), commutator(x, y)));
  CHECK(parse_word("x^2[x,y]") == x.pow(2) * commutator(x, y));
}

TEST_CASE("word grammar errors carry positions") {
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("q"), ParseError);
  CHECK_THROWS_AS(parse_word("x^"), ParseError);
  CHECK_THROWS_AS(parse_word("x0"), ParseError);
  CHECK_THROWS_AS(parse_word("[x"), ParseError);
  CHECK_THROWS_AS(parse_word("(x"), ParseError);
  CHECK_THROWS_AS(parse_word("x)"), ParseError);
  CHECK_THROWS_AS(parse_word("x*"), ParseError);
  CHECK_THROWS_AS(parse_word("x^99999999999999999999"), ParseError);
  bool caught = false;
  try {
    parse_word("xy^('");
  } catch (const ParseError& e) {
    caught = true;
    CHECK(e.position() == 3);
    CHECK(e.kind() == "ParseError");
  }
  CHECK(caught);
}

TEST_CASE("element grammar: K") {
  CHECK(parse_klein("a^2*b") == KleinElt{1, -2});  // a^2 b = b a^-2
  CHECK(parse_klein("b*a^2") == KleinElt{1, 2});
  CHECK(parse_klein("1") == KleinElt{0, 0});
  CHECK(parse_klein("b^-3 a") == KleinElt{-3, 1});
  CHECK(parse_klein("(b*a)^2") == KleinElt{2, 0});
  CHECK(parse_klein("a b a b") == KleinElt{2, 0});
  CHECK_THROWS_AS(parse_klein("d1"), ParseError);
  CHECK_THROWS_AS(parse_klein(""), ParseError);
  CHECK_THROWS_AS(parse_klein("a^"), ParseError);
}

TEST_CASE("element grammar: D") {
  CHECK(parse_dihedral("b*a^5") == DihedralElt{1, 5});
  CHECK(parse_dihedral("b^2") == Dihedral::identity());
  CHECK(parse_dihedral("a^-1*b") == DihedralElt{1, 1});
  CHECK(parse_dihedral("1") == Dihedral::identity());
}

TEST_CASE("element grammar: G") {
  CHECK(parse_g("d1*b*a1^2") == GElt{VFour::D1, 1, {2, 0, 0}});
  CHECK(parse_g("d2*d3") == GElt{VFour::D1, 0, {0, 0, 0}});
  CHECK(parse_g("a1*a2*a3") == GElt{VFour::E, 0, {1, 1, 1}});
  CHECK(parse_g("b^-1*a1*b") == GElt{VFour::E, 0, {-1, 0, 0}});
  CHECK(parse_g("a2^3 * d2 * b^2") == GElt{VFour::D2, 2, {0, 3, 0}});  // d2 fixes a2
  CHECK_THROWS_AS(parse_g("a"), ParseError);   // bare a is not a G generator
  CHECK_THROWS_AS(parse_g("d4"), ParseError);
}

TEST_CASE("element grammar: ZD") {
  CHECK(parse_zxd("(3; b*a^5)") == ZxDElt{3, {1, 5}});
  CHECK(parse_zxd("(0; 1)") == ZxDElt{0, {0, 0}});
  CHECK(parse_zxd("( -2 ; a^4 )") == ZxDElt{-2, {0, 4}});
  CHECK_THROWS_AS(parse_zxd("3; b"), ParseError);
  CHECK_THROWS_AS(parse_zxd("(3 b)"), ParseError);
  CHECK_THROWS_AS(parse_zxd("(3; b) junk"), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(print_klein({2, 0}) == "b^2");
  CHECK(print_klein({1, 2}) == "b*a^2");
  CHECK(print_klein({0, 0}) == "1");
  CHECK(print_klein({1, -2}) == "b*a^-2");
  CHECK(print_klein({0, 1}) == "a");
  CHECK(print_dihedral({1, 0}) == "b");
  CHECK(print_dihedral({0, -3}) == "a^-3");
  CHECK(print_g({VFour::D2, 1, {2, 0, 1}}) == "d2*b*a1^2*a3");
  CHECK(print_g(GElt{}) == "1");
  CHECK(print_zxd({1, {1, 1}}) == "(1; b*a)");
  CHECK(print_zxd({0, {0, 0}}) == "(0; 1)");
  CHECK(print_word(FreeWord::generator(1, 0, 2)) == "x^2");
  CHECK(print_word(FreeWord(3)) == "1");
  CHECK(print_word(FreeWord(9, std::vector<Letter>{{8, -2}, {0, 1}})) == "x9^-2*x");
}

TEST_CASE("parse/print round trips on balls") {
  for (const KleinElt& e : ball_elements<Klein>({3, 3})) {
    CHECK(parse_klein(print_klein(e)) == e);
  }
  for (const DihedralElt& e : ball_elements<Dihedral>({0, 5})) {
    CHECK(parse_dihedral(print_dihedral(e)) == e);
  }
  for (const GElt& g : ball_elements<Ambient>({1, 1})) {
    CHECK(parse_g(print_g(g)) == g);
  }
  for (const ZxDElt& z : ball_elements<ZxD>({2, 3})) {
    CHECK(parse_zxd(print_zxd(z)) == z);
  }
}

TEST_CASE("random word round trips") {
  std::mt19937_64 rng(13579);
  for (int iter = 0; iter < 3000; ++iter) {
    const int arity = 1 + static_cast<int>(rng() % 4);
    std::vector<Letter> letters;
    int prev = -1;
    const int len = static_cast<int>(rng() % 13);
    for (int n = 0; n < len; ++n) {
      int symbol;
      do {
        symbol = static_cast<int>(rng() % (2 * static_cast<unsigned>(arity)));
      } while (prev >= 0 && (symbol ^ 1) == prev);
      letters.push_back({symbol / 2, symbol % 2 == 0 ? 1 : -1});
      prev = symbol;
    }
    const FreeWord w(arity, letters);
    REQUIRE(parse_word(print_word(w)) == w);
  }
}

TEST_CASE("group ids") {
  CHECK(parse_group_id("K") == GroupId::K);
  CHECK(parse_group_id("ZD") == GroupId::ZD);
  CHECK(group_id_name(GroupId::D) == "D");
  CHECK_THROWS_AS(parse_group_id("Q"), ParseError);
}
