#include "kbg/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kbg/closure.hpp"
#include "kbg/parse.hpp"

namespace kbg {

namespace {

struct Bounds {
  i64 random_words = 10000;
  i64 random_triples = 10000;
  i64 random_pairs = 10000;
  i64 sqrt_range = 20;
  i64 probe_maxlen = 4;
  i64 word_roundtrips = 10000;
};

Bounds bounds_for(Profile profile) {
  if (profile == Profile::Quick) {
    return {2000, 2000, 2000, 8, 3, 2000};
  }
  return {};
}

struct SuiteCtx {
  SuiteResult result;

  explicit SuiteCtx(std::string name) { result.name = std::move(name); result.pass = true; }

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok && result.pass) {
      result.pass = false;
      result.detail = what;
    }
  }
};

using Rng = std::mt19937_64;

i64 rand_int(Rng& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

FreeWord random_word(Rng& rng, int max_arity, i64 max_len) {
  const int arity = static_cast<int>(rand_int(rng, 1, max_arity));
  const i64 len = rand_int(rng, 0, max_len);
  std::vector<Letter> letters;
  int prev_symbol = -1;
  for (i64 n = 0; n < len; ++n) {
    int symbol;
    do {
      symbol = static_cast<int>(rand_int(rng, 0, 2 * arity - 1));
    } while (prev_symbol >= 0 && (symbol ^ 1) == prev_symbol);
    letters.push_back({symbol / 2, symbol % 2 == 0 ? 1 : -1});
    prev_symbol = symbol;
  }
  return FreeWord(arity, letters);
}

FreeAut random_aut(Rng& rng, int arity, i64 max_moves) {
  FreeAut alpha(arity);
  const i64 count = rand_int(rng, 0, max_moves);
  for (i64 n = 0; n < count; ++n) {
    const int i = static_cast<int>(rand_int(rng, 0, arity - 1));
    int j = static_cast<int>(rand_int(rng, 0, arity - 1));
    switch (arity > 1 ? rand_int(rng, 0, 2) : 1) {
      case 0:
        alpha.append(NielsenMove::swap(i, j == i ? (i + 1) % arity : j));
        break;
      case 1:
        alpha.append(NielsenMove::invert(i));
        break;
      default:
        if (j == i) j = (i + 1) % arity;
        alpha.append(NielsenMove::right_mult(i, j, rand_int(rng, 0, 1) == 0 ? 1 : -1));
        break;
    }
  }
  return alpha;
}

KleinElt random_klein(Rng& rng, i64 bound) {
  return {rand_int(rng, -bound, bound), rand_int(rng, -bound, bound)};
}

DihedralElt random_dihedral(Rng& rng, i64 bound) {
  return {rand_int(rng, 0, 1), rand_int(rng, -bound, bound)};
}

GElt random_g(Rng& rng, i64 bound) {
  return {static_cast<VFour>(rand_int(rng, 0, 3)),
          rand_int(rng, -bound, bound),
          {rand_int(rng, -bound, bound), rand_int(rng, -bound, bound),
           rand_int(rng, -bound, bound)}};
}

ZxDElt random_zxd(Rng& rng, i64 bound) {
  return {rand_int(rng, -bound, bound), random_dihedral(rng, bound)};
}

i64 sums_gcd(const FreeWord& w) {
  i64 g = 0;
  for (i64 s : w.exponent_sums()) g = std::gcd(g, checked_abs(s));
  return g;
}

template <class G>
typename G::Elt pow_by_repeated_mul(const typename G::Elt& g, i64 n) {
  if (n < 0) return pow_by_repeated_mul<G>(G::inv(g), -n);
  typename G::Elt acc = G::identity();
  for (i64 i = 0; i < n; ++i) acc = G::mul(acc, g);
  return acc;
}

// ---- freewords ----------------------------------------------------------

SuiteResult suite_reduce_idempotent(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("freewords/reduce-idempotent");
  for (i64 n = 0; n < b.random_words; ++n) {
    const int arity = static_cast<int>(rand_int(rng, 1, 4));
    std::vector<Letter> raw;
    const i64 len = rand_int(rng, 0, 12);
    for (i64 i = 0; i < len; ++i) {
      raw.push_back({static_cast<int>(rand_int(rng, 0, arity - 1)), rand_int(rng, -3, 3)});
    }
    const FreeWord once = reduce(arity, raw);
    const FreeWord twice = reduce(arity, once.letters());
    ctx.check(once == twice, "reduce not idempotent on " + print_word(once));
  }
  return ctx.result;
}

SuiteResult suite_nielsen_normalize(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("freewords/nielsen-normalize");
  for (i64 n = 0; n < b.random_words; ++n) {
    const FreeWord w = random_word(rng, 4, 12);
    const NielsenNormalForm nf = nielsen_normalize(w);
    const FreeWord lhs = nf.alpha.apply(w);
    const FreeWord rhs = FreeWord::generator(w.arity(), 0, nf.m) * nf.u;
    ctx.check(lhs == rhs, "alpha(w) != x1^m*u for " + print_word(w));
    ctx.check(nf.u.in_commutator_subgroup(), "u has nonzero sums for " + print_word(w));
    ctx.check(nf.m == sums_gcd(w), "m != gcd of sums for " + print_word(w));
    ctx.check(nf.m >= 0, "negative m");
  }
  return ctx.result;
}

SuiteResult suite_gcd_invariance(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("freewords/gcd-invariance");
  for (i64 n = 0; n < b.random_words; ++n) {
    const FreeWord w = random_word(rng, 4, 10);
    const FreeAut alpha = random_aut(rng, w.arity(), 6);
    ctx.check(sums_gcd(alpha.apply(w)) == sums_gcd(w),
              "gcd changed under " + print_word(w));
  }
  return ctx.result;
}

SuiteResult suite_aut_roundtrip(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("freewords/aut-roundtrip");
  for (i64 n = 0; n < b.random_words; ++n) {
    const FreeWord w = random_word(rng, 4, 10);
    const FreeAut alpha = random_aut(rng, w.arity(), 6);
    ctx.check(alpha.inverse().apply(alpha.apply(w)) == w,
              "inverse does not undo " + print_word(w));
    for (int i = 0; i < alpha.arity(); ++i) {
      ctx.check(alpha.inverse().apply(alpha.generator_image(i)) ==
                    FreeWord::generator(alpha.arity(), i),
                "generator roundtrip failed");
    }
  }
  return ctx.result;
}

// ---- groups -------------------------------------------------------------

template <class G>
void axioms_on(SuiteCtx& ctx, const std::vector<typename G::Elt>& ball, Rng& rng,
               i64 random_triples, i64 random_bound) {
  const auto id = G::identity();
  for (const auto& g : ball) {
    ctx.check(G::mul(id, g) == g && G::mul(g, id) == g, "identity law failed");
    ctx.check(G::mul(g, G::inv(g)) == id && G::mul(G::inv(g), g) == id, "inverse law failed");
  }
  for (i64 n = 0; n < random_triples; ++n) {
    typename G::Elt x, y, z;
    if constexpr (std::is_same_v<G, Klein>) {
      x = random_klein(rng, random_bound); y = random_klein(rng, random_bound);
      z = random_klein(rng, random_bound);
    } else if constexpr (std::is_same_v<G, Dihedral>) {
      x = random_dihedral(rng, random_bound); y = random_dihedral(rng, random_bound);
      z = random_dihedral(rng, random_bound);
    } else if constexpr (std::is_same_v<G, Ambient>) {
      x = random_g(rng, random_bound); y = random_g(rng, random_bound);
      z = random_g(rng, random_bound);
    } else {
      x = random_zxd(rng, random_bound); y = random_zxd(rng, random_bound);
      z = random_zxd(rng, random_bound);
    }
    ctx.check(G::mul(G::mul(x, y), z) == G::mul(x, G::mul(y, z)), "associativity failed");
  }
}

SuiteResult suite_group_axioms(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("groups/axioms");
  const i64 per_carrier = b.random_triples / 4;
  axioms_on<Klein>(ctx, ball_elements<Klein>({2, 2}), rng, per_carrier, 50);
  axioms_on<Dihedral>(ctx, ball_elements<Dihedral>({0, 3}), rng, per_carrier, 50);
  axioms_on<Ambient>(ctx, ball_elements<Ambient>({1, 1}), rng, per_carrier, 20);
  axioms_on<ZxD>(ctx, ball_elements<ZxD>({1, 2}), rng, per_carrier, 50);
  return ctx.result;
}

SuiteResult suite_pow_matches_mul(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("groups/pow-matches-mul");
  for (i64 n = 0; n < b.random_triples; ++n) {
    const i64 e = rand_int(rng, -8, 8);
    const KleinElt gk = random_klein(rng, 20);
    ctx.check(Klein::pow(gk, e) == pow_by_repeated_mul<Klein>(gk, e), "K pow mismatch");
    const DihedralElt gd = random_dihedral(rng, 20);
    ctx.check(Dihedral::pow(gd, e) == pow_by_repeated_mul<Dihedral>(gd, e), "D pow mismatch");
    const GElt gg = random_g(rng, 8);
    ctx.check(Ambient::pow(gg, e) == pow_by_repeated_mul<Ambient>(gg, e), "G pow mismatch");
    const ZxDElt gz = random_zxd(rng, 8);
    ctx.check(ZxD::pow(gz, e) == pow_by_repeated_mul<ZxD>(gz, e), "ZD pow mismatch");
  }
  return ctx.result;
}

SuiteResult suite_square_law(const Bounds&, Rng&) {
  SuiteCtx ctx("groups/square-law");
  ctx.check(check_square_law<Ambient>({1, 1}), "square law failed on the G ball");
  ctx.check(check_square_law<Klein>({3, 3}), "square law failed on the K ball");
  ctx.check(check_square_law<Dihedral>({0, 5}), "square law failed on the D ball");
  return ctx.result;
}

SuiteResult suite_b2_closure(const Bounds&, Rng&) {
  SuiteCtx ctx("groups/b2-closure");
  const B2ClosureReport rep = b2_closure_check({2, 1});
  ctx.check(rep.b2_central, "b^2 is not central on the ball");
  ctx.check(rep.cap_is_even_b_powers, "closure cap K is not the even b-powers");
  ctx.check(!rep.closure_cap_K.empty(), "empty closure intersection on a nonempty ball");
  ctx.result.checks += rep.centrality_checks;
  return ctx.result;
}

SuiteResult suite_squares_characterization(const Bounds&, Rng&) {
  SuiteCtx ctx("groups/squares-characterization");
  for (const KleinElt& s : ball_elements<Klein>({6, 6})) {
    bool has_root = false;
    for (const KleinElt& r : ball_elements<Klein>({3, 6})) {
      if (Klein::mul(r, r) == s) {
        has_root = true;
        break;
      }
    }
    ctx.check(is_square_K(s) == has_root, "square membership mismatch at " + print_klein(s));
  }
  return ctx.result;
}

SuiteResult suite_unique_sqrt(const Bounds& b, Rng&) {
  SuiteCtx ctx("groups/unique-sqrt");
  for (i64 m = -b.sqrt_range; m <= b.sqrt_range; ++m) {
    for (i64 k = -b.sqrt_range; k <= b.sqrt_range; ++k) {
      const KleinElt g{4 * m, 2 * k};
      const KleinElt root = unique_sqrt_K(g);
      ctx.check(Klein::pow(root, 2) == g, "root does not square back at " + print_klein(g));
      i64 roots_found = 0;
      for (i64 l2 = -(2 * checked_abs(m) + 1); l2 <= 2 * checked_abs(m) + 1; ++l2) {
        for (i64 k2 = -checked_abs(k); k2 <= checked_abs(k); ++k2) {
          if (Klein::mul({l2, k2}, {l2, k2}) == g) ++roots_found;
        }
      }
      ctx.check(roots_found == 1, "non-unique root at " + print_klein(g));
    }
  }
  for (const KleinElt& bad : {KleinElt{2, 0}, KleinElt{0, 1}, KleinElt{4, 3}, KleinElt{6, 2}}) {
    bool threw = false;
    try {
      unique_sqrt_K(bad);
    } catch (const DomainError& e) {
      threw = std::string(e.kind()) == "NotInDomain";
    }
    ctx.check(threw, "expected NotInDomain at " + print_klein(bad));
  }
  return ctx.result;
}

SuiteResult suite_centralizer(const Bounds&, Rng&) {
  SuiteCtx ctx("groups/squares-centralizer");
  std::vector<KleinElt> squares;
  for (const KleinElt& g : ball_elements<Klein>({3, 3})) squares.push_back(Klein::mul(g, g));
  for (const KleinElt& g : ball_elements<Klein>({4, 4})) {
    bool commutes = true;
    for (const KleinElt& s : squares) {
      if (commutator<Klein>(g, s) != Klein::identity()) {
        commutes = false;
        break;
      }
    }
    ctx.check(centralizes_squares_K(g) == commutes,
              "centralizer test mismatch at " + print_klein(g));
    ctx.check(centralizes_squares_K(g) == !is_odd(g.l), "parity form mismatch");
  }
  return ctx.result;
}

SuiteResult suite_defining_relations(const Bounds&, Rng&) {
  SuiteCtx ctx("groups/defining-relations");
  const GElt b_gen{VFour::E, 1, {0, 0, 0}};
  const GElt a_embedded{VFour::E, 0, {1, 1, 1}};
  ctx.check(conjugate<Ambient>(a_embedded, b_gen) == GElt{VFour::E, 0, {-1, -1, -1}},
            "a^b != a^-1 in G");
  for (int i = 0; i < 3; ++i) {
    GElt ai{};
    ai.k[static_cast<std::size_t>(i)] = 1;
    ctx.check(conjugate<Ambient>(ai, b_gen) == Ambient::inv(ai), "a_i^b != a_i^-1");
    for (int j = 1; j <= 3; ++j) {
      const GElt dj{static_cast<VFour>(j), 0, {0, 0, 0}};
      const GElt expected = (j == i + 1) ? ai : Ambient::inv(ai);
      ctx.check(conjugate<Ambient>(ai, dj) == expected, "V4 action relation failed");
    }
  }
  ctx.check(conjugate<Klein>({0, 1}, {1, 0}) == KleinElt{0, -1}, "a^b != a^-1 in K");
  return ctx.result;
}

// ---- maps ---------------------------------------------------------------

SuiteResult suite_hom_laws(const Bounds&, Rng&) {
  SuiteCtx ctx("maps/hom-laws");
  const auto gball = ball_elements<Ambient>({1, 1});
  for (const GElt& g : gball) {
    for (const GElt& h : gball) {
      const GElt gh = Ambient::mul(g, h);
      ctx.check(f_hom(gh) == Dihedral::mul(f_hom(g), f_hom(h)), "f is not a homomorphism");
      ctx.check(deg_hom(gh) == deg_hom(g) + deg_hom(h), "deg is not additive");
      ctx.check(phi(gh) == ZxD::mul(phi(g), phi(h)), "phi is not a homomorphism");
    }
  }
  const auto kball = ball_elements<Klein>({3, 3});
  for (const KleinElt& e : kball) {
    for (const KleinElt& e2 : kball) {
      ctx.check(pi_quotient(Klein::mul(e, e2)) == Dihedral::mul(pi_quotient(e), pi_quotient(e2)),
                "pi is not a homomorphism");
      ctx.check(embed_K(Klein::mul(e, e2)) == Ambient::mul(embed_K(e), embed_K(e2)),
                "embed is not a homomorphism");
    }
  }
  return ctx.result;
}

SuiteResult suite_generator_images(const Bounds&, Rng&) {
  SuiteCtx ctx("maps/generator-images");
  const DihedralElt a_prime{0, 1};
  const DihedralElt b_prime{1, 0};
  const KleinElt a_k{0, 1};
  const KleinElt b_k{1, 0};
  for (const GElt& g : ball_elements<Ambient>({2, 2})) {
    // Fold the generator images along the normal form d * b^l * a1 a2 a3.
    const DihedralElt f_d = maps_to_b(g.d) ? b_prime : Dihedral::identity();
    DihedralElt f_folded = Dihedral::mul(f_d, Dihedral::pow(b_prime, g.l));
    f_folded = Dihedral::mul(f_folded, Dihedral::pow(a_prime, g.k[0]));
    ctx.check(f_hom(g) == f_folded, "f closed form disagrees with generator images");

    const KleinElt hat_d = maps_to_b(g.d) ? b_k : Klein::identity();
    KleinElt hat_folded = Klein::mul(hat_d, Klein::pow(b_k, g.l));
    hat_folded = Klein::mul(hat_folded, Klein::pow(a_k, g.k[0]));
    ctx.check(hat_subst(g) == hat_folded, "hat closed form disagrees with the substitution");
  }
  for (const KleinElt& e : ball_elements<Klein>({3, 3})) {
    const GElt folded = Ambient::mul(Ambient::pow({VFour::E, 1, {0, 0, 0}}, e.l),
                                     Ambient::pow({VFour::E, 0, {1, 1, 1}}, e.k));
    ctx.check(embed_K(e) == folded, "embed closed form disagrees with generator images");
    ctx.check(pi_quotient(e) ==
                  Dihedral::mul(Dihedral::pow(b_prime, e.l), Dihedral::pow(a_prime, e.k)),
              "pi closed form disagrees with generator images");
    ctx.check(decompose_K(embed_K(e)) == e, "decompose does not invert embed");
  }
  return ctx.result;
}

SuiteResult suite_hat_first_coordinate(const Bounds&, Rng&) {
  SuiteCtx ctx("maps/hat-first-coordinate");
  for (const GElt& g : ball_elements<Ambient>({2, 2})) {
    ctx.check(f_hom(embed_K(hat_subst(g))) == f_hom(g),
              "hat does not preserve the first coordinate at " + print_g(g));
  }
  for (const KleinElt& e : ball_elements<Klein>({3, 3})) {
    ctx.check(hat_subst(embed_K(e)) == e, "hat moves an embedded element");
  }
  return ctx.result;
}

SuiteResult suite_phi_injective(const Bounds&, Rng&) {
  SuiteCtx ctx("maps/phi-injective-on-K");
  std::set<std::pair<i64, std::pair<i64, i64>>> images;
  const auto kball = ball_elements<Klein>({5, 5});
  for (const KleinElt& e : kball) {
    const ZxDElt z = phi(embed_K(e));
    ctx.check(in_fibred_product(z), "phi image leaves the fibred product");
    ctx.check(phi_inv_on_K(z) == e, "phi_inv does not invert phi on K");
    images.insert({z.i, {z.d.eps, z.d.k}});
  }
  ctx.check(images.size() == kball.size(), "phi is not injective on the K ball");
  return ctx.result;
}

SuiteResult suite_index_two(const Bounds&, Rng&) {
  SuiteCtx ctx("maps/index-two");
  const GElt d2{VFour::D2, 0, {0, 0, 0}};
  ctx.check(!in_H(d2), "d2 must lie outside H");
  for (const GElt& g : ball_elements<Ambient>({1, 1})) {
    ctx.check(in_H(g) != in_H(Ambient::mul(d2, g)), "coset cover fails at " + print_g(g));
    ctx.check(in_H(g) == in_fibred_product(phi(g)), "closed form of in_H disagrees with phi");
  }
  return ctx.result;
}

SuiteResult suite_retraction_laws(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("maps/retraction-laws");
  std::vector<GElt> hball;
  for (const GElt& g : ball_elements<Ambient>({2, 2})) {
    if (in_H(g)) hball.push_back(g);
  }
  for (i64 n = 0; n < b.random_pairs; ++n) {
    const GElt& g = hball[static_cast<std::size_t>(rand_int(rng, 0, static_cast<i64>(hball.size()) - 1))];
    const GElt& h = hball[static_cast<std::size_t>(rand_int(rng, 0, static_cast<i64>(hball.size()) - 1))];
    ctx.check(rho_retract(Ambient::mul(g, h)) == Klein::mul(rho_retract(g), rho_retract(h)),
              "rho is not a homomorphism on H");
  }
  for (const KleinElt& e : ball_elements<Klein>({5, 5})) {
    ctx.check(rho_retract(embed_K(e)) == e, "rho does not fix K at " + print_klein(e));
  }
  for (const GElt& g : hball) {
    ctx.check(rho_retract(embed_K(rho_retract(g))) == rho_retract(g),
              "rho is not idempotent at " + print_g(g));
  }
  return ctx.result;
}

SuiteResult suite_perm_automorphism(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("maps/perm-automorphism");
  std::vector<IndexPerm> perms;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i < j) perms.push_back(IndexPerm::transposition(i, j));
    }
  }
  perms.push_back(IndexPerm({1, 2, 0}));
  perms.push_back(IndexPerm({2, 0, 1}));
  perms.push_back(IndexPerm::identity());
  for (i64 n = 0; n < b.random_pairs; ++n) {
    const GElt g = random_g(rng, 10);
    const GElt h = random_g(rng, 10);
    for (const IndexPerm& p : perms) {
      ctx.check(perm_aut(p, Ambient::mul(g, h)) == Ambient::mul(perm_aut(p, g), perm_aut(p, h)),
                "perm_aut is not a homomorphism");
      ctx.check(perm_aut(p.inverse(), perm_aut(p, g)) == g, "perm_aut inverse fails");
    }
  }
  for (const KleinElt& e : ball_elements<Klein>({2, 2})) {
    for (const IndexPerm& p : perms) {
      ctx.check(perm_aut(p, embed_K(e)) == embed_K(e), "perm_aut moves an embedded element");
    }
  }
  return ctx.result;
}

// ---- closure ------------------------------------------------------------

SuiteResult suite_dihedral_vs_brute(const Bounds&, Rng&) {
  SuiteCtx ctx("closure/dihedral-vs-brute");
  const BallBounds ball{0, 4};
  const std::vector<DihedralElt> targets = {{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                            {0, -1}, {0, 2}, {0, -2}};
  for (const FreeWord& w : reduced_words_up_to(2, 4)) {
    for (const DihedralElt& target : targets) {
      const Equation<Dihedral> eq{w, target};
      const DihedralSolution sol = dihedral_solve(eq, ball, 2);
      const auto brute = brute_force_solve<Dihedral>(eq, ball, 2);
      if (sol.tuple) {
        ctx.check(evaluate_word<Dihedral>(w, *sol.tuple) == target,
                  "dihedral_solve returned a non-solution for " + print_word(w));
      }
      if (brute) {
        ctx.check(sol.tuple.has_value(),
                  "dihedral_solve missed a ball solution for " + print_word(w));
      }
      if (target == Dihedral::identity()) {
        ctx.check(sol.method == DihedralMethod::TrivialTarget, "identity target searched");
      } else if (target.eps != 0) {
        bool odd_sum = false;
        for (i64 s : w.exponent_sums()) odd_sum = odd_sum || is_odd(s);
        if (odd_sum) {
          ctx.check(sol.method == DihedralMethod::OddSumInvolution,
                    "involution case searched for " + print_word(w));
        }
      }
    }
  }
  return ctx.result;
}

SuiteResult suite_squares_even_degree(const Bounds&, Rng&) {
  SuiteCtx ctx("closure/squares-even-degree");
  for (const KleinElt& g : ball_elements<Klein>({5, 5})) {
    ctx.check(!is_odd(Klein::mul(g, g).l), "a square has odd degree");
  }
  ctx.check(is_odd(KleinElt{1, 0}.l), "deg(b) must be odd");
  ctx.check(!is_square_K({1, 0}), "b must not be a square");
  return ctx.result;
}

SuiteResult suite_no_retraction(const Bounds&, Rng&) {
  SuiteCtx ctx("closure/no-retraction-certificate");
  const Certificate cert = no_retraction_certificate();
  ctx.check(cert.verify(), "certificate failed to verify");
  ctx.check(cert.steps().size() == 4, "unexpected certificate shape");
  for (const KleinElt& g : ball_elements<Klein>({10, 10})) {
    const bool is_involution = Klein::mul(g, g) == Klein::identity();
    ctx.check(is_involution == (g == Klein::identity()),
              "unexpected involution at " + print_klein(g));
  }
  return ctx.result;
}

// ---- cli grammars -------------------------------------------------------

SuiteResult suite_roundtrip_elements(const Bounds&, Rng&) {
  SuiteCtx ctx("cli/roundtrip-elements");
  for (const KleinElt& e : ball_elements<Klein>({3, 3})) {
    ctx.check(parse_klein(print_klein(e)) == e, "K roundtrip failed at " + print_klein(e));
  }
  for (const DihedralElt& e : ball_elements<Dihedral>({0, 5})) {
    ctx.check(parse_dihedral(print_dihedral(e)) == e,
              "D roundtrip failed at " + print_dihedral(e));
  }
  for (const GElt& g : ball_elements<Ambient>({1, 1})) {
    ctx.check(parse_g(print_g(g)) == g, "G roundtrip failed at " + print_g(g));
  }
  for (const ZxDElt& z : ball_elements<ZxD>({2, 3})) {
    ctx.check(parse_zxd(print_zxd(z)) == z, "ZD roundtrip failed at " + print_zxd(z));
  }
  return ctx.result;
}

SuiteResult suite_roundtrip_words(const Bounds& b, Rng& rng) {
  SuiteCtx ctx("cli/roundtrip-words");
  for (i64 n = 0; n < b.word_roundtrips; ++n) {
    const FreeWord w = random_word(rng, 4, 12);
    ctx.check(parse_word(print_word(w)) == w, "word roundtrip failed at " + print_word(w));
  }
  return ctx.result;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(Profile profile) {
  const Bounds b = bounds_for(profile);
  Rng rng(0x6b62672d31ULL);

  std::vector<SuiteResult> results;
  const auto run = [&results](SuiteResult r) { results.push_back(std::move(r)); };

  run(suite_reduce_idempotent(b, rng));
  run(suite_nielsen_normalize(b, rng));
  run(suite_gcd_invariance(b, rng));
  run(suite_aut_roundtrip(b, rng));

  run(suite_group_axioms(b, rng));
  run(suite_pow_matches_mul(b, rng));
  run(suite_square_law(b, rng));
  run(suite_b2_closure(b, rng));
  run(suite_squares_characterization(b, rng));
  run(suite_unique_sqrt(b, rng));
  run(suite_centralizer(b, rng));
  run(suite_defining_relations(b, rng));

  run(suite_hom_laws(b, rng));
  run(suite_generator_images(b, rng));
  run(suite_hat_first_coordinate(b, rng));
  run(suite_phi_injective(b, rng));
  run(suite_index_two(b, rng));
  run(suite_retraction_laws(b, rng));
  run(suite_perm_automorphism(b, rng));

  {
    ProbeConfig cfg;
    cfg.max_word_len = b.probe_maxlen;
    const ProbeReport probe = probe_verbal_closedness(cfg);
    SuiteResult transfer{"closure/transfer-soundness",
                         probe.transfer_failures == 0 && probe.transfers_run > 0,
                         probe.transfers_run,
                         probe.transfer_failures == 0
                             ? ""
                             : std::to_string(probe.transfer_failures) + " transfer failures"};
    SuiteResult oracle{"closure/oracle-agreement", probe.oracle_misses == 0,
                       probe.oracle_queries,
                       probe.oracle_misses == 0
                           ? ""
                           : std::to_string(probe.oracle_misses) + " oracle misses"};
    SuiteResult book{"closure/deg-f-bookkeeping", probe.bookkeeping_failures == 0,
                     probe.bookkeeping_checks,
                     probe.bookkeeping_failures == 0
                         ? ""
                         : std::to_string(probe.bookkeeping_failures) + " bookkeeping failures"};
    run(std::move(transfer));
    run(std::move(oracle));
    run(std::move(book));
  }

  run(suite_dihedral_vs_brute(b, rng));
  run(suite_squares_even_degree(b, rng));
  run(suite_no_retraction(b, rng));

  run(suite_roundtrip_elements(b, rng));
  run(suite_roundtrip_words(b, rng));

  return results;
}

std::string conventions_note() {
  return "conventions: x^y = y^-1 x y, [x,y] = x^-1 y^-1 x y; ambient action "
         "a_i^b = a_i^-1, a_i^{d_i} = a_i, a_i^{d_j} = a_i^-1 for j != i; "
         "normal forms d*b^l*a1^k1*a2^k2*a3^k3 (G), b^l*a^k (K), b^eps*a^k (D)";
}

}  // namespace kbg
