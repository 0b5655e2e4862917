#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kbg/maps.hpp"

using namespace kbg;

namespace {

std::mt19937_64 rng(24680);
i64 rnd(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }
GElt rnd_g() {
  return {static_cast<VFour>(rnd(0, 3)), rnd(-6, 6), {rnd(-6, 6), rnd(-6, 6), rnd(-6, 6)}};
}

}  // namespace

TEST_CASE("f_hom generator images and examples") {
  CHECK(f_hom({VFour::E, 0, {1, 0, 0}}) == DihedralElt{0, 1});   // a1 -> a
  CHECK(f_hom({VFour::E, 0, {0, 1, 0}}) == Dihedral::identity()); // a2 -> 1
  CHECK(f_hom({VFour::E, 0, {0, 0, 1}}) == Dihedral::identity()); // a3 -> 1
  CHECK(f_hom({VFour::D1, 0, {0, 0, 0}}) == Dihedral::identity()); // d1 -> 1
  CHECK(f_hom({VFour::E, 1, {0, 0, 0}}) == DihedralElt{1, 0});   // b -> b
  CHECK(f_hom({VFour::D2, 0, {0, 0, 0}}) == DihedralElt{1, 0});  // d2 -> b
  CHECK(f_hom({VFour::D3, 0, {0, 0, 0}}) == DihedralElt{1, 0});  // d3 -> b
  CHECK(f_hom({VFour::D1, 0, {0, 5, 7}}) == DihedralElt{0, 0});
  CHECK(f_hom({VFour::D2, 1, {2, 0, 1}}) == DihedralElt{0, 2});
  CHECK(f_hom({VFour::E, -3, {4, 0, 0}}) == DihedralElt{1, 4});  // negative degree
}

TEST_CASE("deg_hom") {
  CHECK(deg_hom({VFour::E, 1, {0, 0, 0}}) == 1);
  CHECK(deg_hom({VFour::D3, -2, {9, 9, 9}}) == -2);
  CHECK(deg_hom(GElt{}) == 0);
}

TEST_CASE("f and deg are homomorphisms (exhaustive on the ball)") {
  const auto ball = ball_elements<Ambient>({1, 1});
  for (const GElt& g : ball) {
    for (const GElt& h : ball) {
      const GElt gh = Ambient::mul(g, h);
      REQUIRE(f_hom(gh) == Dihedral::mul(f_hom(g), f_hom(h)));
      REQUIRE(deg_hom(gh) == deg_hom(g) + deg_hom(h));
    }
  }
}

TEST_CASE("embed and decompose") {
  CHECK(embed_K({0, 1}) == GElt{VFour::E, 0, {1, 1, 1}});
  CHECK(embed_K({0, 0}) == GElt{});
  CHECK(embed_K({2, 3}) == GElt{VFour::E, 2, {3, 3, 3}});
  CHECK(decompose_K({VFour::E, 2, {3, 3, 3}}) == KleinElt{2, 3});
  CHECK(decompose_K(GElt{}) == KleinElt{0, 0});
  CHECK_FALSE(decompose_K({VFour::D1, 0, {0, 0, 0}}).has_value());
  CHECK_FALSE(decompose_K({VFour::E, 0, {1, 1, 2}}).has_value());
  for (const KleinElt& e : ball_elements<Klein>({4, 4})) {
    for (const KleinElt& e2 : ball_elements<Klein>({2, 2})) {
      REQUIRE(embed_K(Klein::mul(e, e2)) == Ambient::mul(embed_K(e), embed_K(e2)));
    }
    REQUIRE(decompose_K(embed_K(e)) == e);
  }
}

TEST_CASE("hat substitution") {
  CHECK(hat_subst({VFour::D1, 2, {3, 1, -1}}) == KleinElt{2, 3});
  CHECK(hat_subst({VFour::D2, 0, {0, 4, 0}}) == KleinElt{1, 0});  // d2 -> b
  for (const KleinElt& e : ball_elements<Klein>({3, 3})) {
    REQUIRE(hat_subst(embed_K(e)) == e);  // fixes the embedded copy pointwise
  }
  // Not a homomorphism: a witness pair.
  const GElt g{VFour::D2, 0, {0, 0, 0}};
  CHECK(Klein::mul(hat_subst(g), hat_subst(g)) != hat_subst(Ambient::mul(g, g)));
  // But it preserves the first coordinate everywhere.
  for (const GElt& g2 : ball_elements<Ambient>({2, 2})) {
    REQUIRE(f_hom(embed_K(hat_subst(g2))) == f_hom(g2));
  }
}

TEST_CASE("perm_aut relabels axes and fixes K") {
  const IndexPerm swap12 = IndexPerm::transposition(0, 1);
  CHECK(perm_aut(swap12, {VFour::D2, 1, {2, 0, 1}}) == GElt{VFour::D1, 1, {0, 2, 1}});
  CHECK(perm_aut(IndexPerm::identity(), {VFour::D3, 5, {1, 2, 3}}) ==
        GElt{VFour::D3, 5, {1, 2, 3}});
  for (const KleinElt& e : ball_elements<Klein>({2, 2})) {
    CHECK(perm_aut(swap12, embed_K(e)) == embed_K(e));
  }
  const IndexPerm cycle({1, 2, 0});
  CHECK(cycle.inverse() == IndexPerm({2, 0, 1}));
  for (int iter = 0; iter < 3000; ++iter) {
    const GElt g = rnd_g(), h = rnd_g();
    for (const IndexPerm& p : {swap12, cycle, IndexPerm::transposition(0, 2)}) {
      REQUIRE(perm_aut(p, Ambient::mul(g, h)) == Ambient::mul(perm_aut(p, g), perm_aut(p, h)));
      REQUIRE(perm_aut(p.inverse(), perm_aut(p, g)) == g);
    }
  }
  CHECK_THROWS_AS(IndexPerm({0, 0, 1}), DomainError);
}

TEST_CASE("pi quotient") {
  CHECK(pi_quotient({3, 5}) == DihedralElt{1, 5});
  CHECK(pi_quotient({2, 0}) == Dihedral::identity());
  CHECK(pi_quotient({0, 1}) == DihedralElt{0, 1});
  CHECK(pi_quotient({-3, 2}) == DihedralElt{1, 2});  // negative degrees normalize
  const auto ball = ball_elements<Klein>({3, 3});
  for (const KleinElt& e : ball) {
    for (const KleinElt& e2 : ball) {
      REQUIRE(pi_quotient(Klein::mul(e, e2)) ==
              Dihedral::mul(pi_quotient(e), pi_quotient(e2)));
    }
    // Kernel is exactly <b^2>.
    REQUIRE((pi_quotient(e) == Dihedral::identity()) == (e.k == 0 && !is_odd(e.l)));
  }
}

TEST_CASE("phi examples and injectivity on K") {
  CHECK(phi(embed_K({1, 1})) == ZxDElt{1, {1, 1}});
  CHECK(phi(GElt{}) == ZxDElt{0, {0, 0}});
  CHECK(phi({VFour::D2, 0, {0, 0, 0}}) == ZxDElt{0, {1, 0}});
  const auto ball = ball_elements<Ambient>({1, 1});
  for (const GElt& g : ball) {
    for (const GElt& h : ball) {
      REQUIRE(phi(Ambient::mul(g, h)) == ZxD::mul(phi(g), phi(h)));
    }
  }
  std::set<ZxDElt> images;
  const auto kball = ball_elements<Klein>({5, 5});
  for (const KleinElt& e : kball) images.insert(phi(embed_K(e)));
  CHECK(images.size() == kball.size());
}

TEST_CASE("fibred product membership") {
  CHECK(in_fibred_product({1, {1, 1}}));
  CHECK(in_fibred_product({0, {0, 0}}));
  CHECK_FALSE(in_fibred_product({0, {1, 0}}));
  CHECK(in_fibred_product({-3, {1, 4}}));
  // Index two in Z x Dinf: shifting by (1, identity) flips membership.
  for (const ZxDElt& z : ball_elements<ZxD>({3, 3})) {
    CHECK(in_fibred_product(z) != in_fibred_product(ZxD::mul({1, {0, 0}}, z)));
  }
}

TEST_CASE("phi_inv_on_K") {
  CHECK(phi_inv_on_K({3, {1, 5}}) == KleinElt{3, 5});
  CHECK(phi_inv_on_K({0, {0, 0}}) == KleinElt{0, 0});
  CHECK_THROWS_AS(phi_inv_on_K({2, {1, 4}}), DomainError);
  for (const KleinElt& e : ball_elements<Klein>({4, 4})) {
    REQUIRE(phi_inv_on_K(phi(embed_K(e))) == e);
  }
}

TEST_CASE("index-two subgroup H") {
  CHECK(in_H({VFour::D1, 5, {1, 2, 3}}));
  CHECK_FALSE(in_H({VFour::D2, 0, {0, 0, 0}}));
  for (const KleinElt& e : ball_elements<Klein>({2, 2})) CHECK(in_H(embed_K(e)));
  const GElt d2{VFour::D2, 0, {0, 0, 0}};
  for (const GElt& g : ball_elements<Ambient>({1, 1})) {
    REQUIRE(in_H(g) != in_H(Ambient::mul(d2, g)));
    REQUIRE(in_H(g) == in_fibred_product(phi(g)));
  }
}

TEST_CASE("rho retraction") {
  CHECK(rho_retract({VFour::D1, 3, {5, -2, 7}}) == KleinElt{3, 5});
  CHECK_THROWS_AS(rho_retract({VFour::D2, 1, {0, 0, 0}}), DomainError);
  for (const KleinElt& e : ball_elements<Klein>({5, 5})) {
    REQUIRE(rho_retract(embed_K(e)) == e);
  }
  std::vector<GElt> hball;
  for (const GElt& g : ball_elements<Ambient>({2, 2})) {
    if (in_H(g)) hball.push_back(g);
  }
  for (int iter = 0; iter < 10000; ++iter) {
    const GElt& g = hball[static_cast<std::size_t>(rnd(0, static_cast<i64>(hball.size()) - 1))];
    const GElt& h = hball[static_cast<std::size_t>(rnd(0, static_cast<i64>(hball.size()) - 1))];
    REQUIRE(rho_retract(Ambient::mul(g, h)) ==
            Klein::mul(rho_retract(g), rho_retract(h)));
  }
  for (const GElt& g : hball) {
    REQUIRE(rho_retract(embed_K(rho_retract(g))) == rho_retract(g));
  }
}
