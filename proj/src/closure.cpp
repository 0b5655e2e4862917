#include "kbg/closure.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace kbg {

TransferReport transfer_solution(const FreeWord& w, std::span<const GElt> tuple) {
  TransferReport rep;
  rep.word = w;
  rep.input_tuple.assign(tuple.begin(), tuple.end());

  rep.value_in_G = evaluate_word<Ambient>(w, tuple);
  const std::optional<KleinElt> target = decompose_K(rep.value_in_G);
  if (!target) {
    throw DomainError("TargetNotInK", "the word value lies outside the embedded copy of K");
  }
  rep.target = *target;

  NielsenNormalForm nf = nielsen_normalize(w);
  rep.m = nf.m;
  rep.u = nf.u;
  rep.alpha = nf.alpha;

  // Re-express the solution for the transformed equation alpha(w) = h.
  const int n = w.arity();
  const FreeAut alpha_inv = nf.alpha.inverse();
  rep.pulled_tuple.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    rep.pulled_tuple.push_back(evaluate_word<Ambient>(alpha_inv.generator_image(j), tuple));
  }

  // When the leading entry carries one of the involutions that map to b,
  // relabel the axes so it carries the one that maps to 1 instead; the
  // relabelling fixes h.
  rep.renamed_tuple = rep.pulled_tuple;
  if (nf.m > 0 && maps_to_b(rep.pulled_tuple[0].d)) {
    const int axis = static_cast<int>(rep.pulled_tuple[0].d) - 1;
    const IndexPerm p = IndexPerm::transposition(0, axis);
    rep.renaming = p;
    for (GElt& g : rep.renamed_tuple) g = perm_aut(p, g);
  }

  rep.hat_tuple.reserve(static_cast<std::size_t>(n));
  for (const GElt& g : rep.renamed_tuple) rep.hat_tuple.push_back(hat_subst(g));

  // Pull the K-solution of alpha(w) = h back through alpha.
  rep.k_solution.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    rep.k_solution.push_back(evaluate_word<Klein>(nf.alpha.generator_image(j), rep.hat_tuple));
  }

  rep.verified = evaluate_word<Klein>(w, rep.k_solution) == rep.target;
  if (!rep.verified) {
    throw VerificationError("transferred tuple does not evaluate to the target");
  }
  return rep;
}

DihedralSolution dihedral_solve(const Equation<Dihedral>& eq, const BallBounds& ball,
                                int nvars) {
  if (nvars < eq.word.arity()) {
    throw DomainError("ArityMismatch", "fewer unknowns than word variables");
  }
  const DihedralElt id = Dihedral::identity();
  if (eq.target == id) {
    return {DihedralMethod::TrivialTarget,
            std::vector<DihedralElt>(static_cast<std::size_t>(nvars), id)};
  }
  if (eq.target.eps != 0) {
    const std::vector<i64> sums = eq.word.exponent_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (is_odd(sums[j])) {
        // The target is an involution, so the word collapses to an odd
        // power of it; every other variable is sent to 1.
        std::vector<DihedralElt> tuple(static_cast<std::size_t>(nvars), id);
        tuple[j] = eq.target;
        return {DihedralMethod::OddSumInvolution, std::move(tuple)};
      }
    }
    // All sums even: no parity-compatible assignment exists; fall through.
  }
  return {DihedralMethod::BallSearch, brute_force_solve<Dihedral>(eq, ball, nvars)};
}

namespace {

// Degree/first-coordinate bookkeeping of a transfer run: the target's
// degree is m times the degree of the renamed leading entry, and its first
// coordinate is the dihedral evaluation of x1^m * u at the f-images.
bool transfer_bookkeeping_holds(const TransferReport& rep) {
  const i64 expected_deg =
      rep.m == 0 ? 0 : checked_mul(rep.m, deg_hom(rep.renamed_tuple[0]));
  if (deg_hom(rep.value_in_G) != expected_deg) return false;

  const int n = rep.word.arity();
  FreeWord normalized =
      n > 0 ? FreeWord::generator(n, 0, rep.m) * rep.u : rep.u;
  std::vector<DihedralElt> f_images;
  f_images.reserve(rep.renamed_tuple.size());
  for (const GElt& g : rep.renamed_tuple) f_images.push_back(f_hom(g));
  return evaluate_word<Dihedral>(normalized, f_images) == f_hom(rep.value_in_G);
}

}  // namespace

ProbeReport probe_verbal_closedness(const ProbeConfig& config) {
  ProbeReport rep;
  const std::vector<FreeWord> words = reduced_words_up_to(config.nvars, config.max_word_len);
  rep.words_enumerated = static_cast<i64>(words.size());
  const std::vector<GElt> ball = ball_elements<Ambient>(config.g_ball);

  i64 tuples = ball.empty() ? 0 : 1;
  for (int v = 0; v < config.nvars && !ball.empty(); ++v) {
    tuples = checked_mul(tuples, static_cast<i64>(ball.size()));
  }
  rep.tuples_per_word = tuples;

  // First witness per word, upgraded to the first non-identity target when
  // one appears; only the first max_witnesses words keep a slot.
  std::vector<std::optional<ProbeWitness>> witness_slots(
      std::min(words.size(), config.max_witnesses));
  std::map<std::pair<std::size_t, KleinElt>, bool> oracle_memo;

  const std::size_t nvars = static_cast<std::size_t>(config.nvars);
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    const FreeWord& w = words[wi];
    if (ball.empty() && config.nvars > 0) break;
    std::vector<std::size_t> index(nvars, 0);
    std::vector<GElt> tuple(nvars, ball.empty() ? GElt{} : ball[0]);
    while (true) {
      ++rep.evaluations;
      const GElt h = evaluate_word<Ambient>(w, tuple);
      if (const std::optional<KleinElt> hk = decompose_K(h)) {
        ++rep.targets_in_K;
        ++rep.transfers_run;
        try {
          const TransferReport t = transfer_solution(w, tuple);
          ++rep.bookkeeping_checks;
          if (!transfer_bookkeeping_holds(t)) ++rep.bookkeeping_failures;
          if (wi < witness_slots.size()) {
            auto& slot = witness_slots[wi];
            const bool nontrivial = !(*hk == KleinElt{});
            if (!slot || (slot->target == KleinElt{} && nontrivial)) {
              slot = ProbeWitness{w, tuple, *hk, t.k_solution};
            }
          }
        } catch (const Error&) {
          ++rep.transfer_failures;
        }
        if (config.run_oracle) {
          auto [it, fresh] = oracle_memo.try_emplace({wi, *hk}, false);
          if (fresh) {
            ++rep.oracle_queries;
            it->second =
                brute_force_solve<Klein>({w, *hk}, config.k_ball, config.nvars).has_value();
            if (it->second) {
              ++rep.oracle_hits;
            } else {
              ++rep.oracle_misses;
            }
          }
        }
      }
      // Advance the tuple odometer (last position fastest).
      bool advanced = false;
      std::size_t pos = nvars;
      while (pos > 0) {
        --pos;
        if (++index[pos] < ball.size()) {
          tuple[pos] = ball[index[pos]];
          advanced = true;
          break;
        }
        index[pos] = 0;
        tuple[pos] = ball[0];
      }
      if (!advanced) break;
    }
  }

  for (auto& slot : witness_slots) {
    if (slot) rep.sample_witnesses.push_back(std::move(*slot));
  }
  return rep;
}

std::vector<KleinElt> involutions_in_K_closed_form() {
  // (l,k)^2 = (2l, k*((-1)^l + 1)). 2l = 0 has the unique integer solution
  // l = 0; with l = 0 the second component is 2k, and 2k = 0 forces k = 0.
  return {KleinElt{}};
}

Certificate no_retraction_certificate() {
  Certificate cert;

  const std::vector<KleinElt> involutions = involutions_in_K_closed_form();
  bool torsion_free = involutions.size() == 1 && involutions[0] == KleinElt{};
  i64 scanned = 0;
  for (i64 l = -10; l <= 10 && torsion_free; ++l) {
    for (i64 k = -10; k <= 10; ++k) {
      const KleinElt g{l, k};
      ++scanned;
      const bool is_involution = Klein::mul(g, g) == Klein::identity();
      if (is_involution != (g == KleinElt{})) {
        torsion_free = false;
        break;
      }
    }
  }
  const std::size_t s_torsion = cert.add_step(
      "K is torsion-free: the only solution of g^2 = 1 in K is the identity",
      "klein-no-involutions", torsion_free,
      "closed form (l,k)^2 = (2l, k((-1)^l + 1)): 2l = 0 forces l = 0, then 2k = 0 "
      "forces k = 0; scan of |l|,|k| <= 10 (" +
          std::to_string(scanned) + " elements) found only (0,0)");

  bool orders_ok = true;
  for (int i = 1; i <= 3; ++i) {
    const GElt di{static_cast<VFour>(i), 0, {0, 0, 0}};
    orders_ok = orders_ok && order_of<Ambient>(di) == std::optional<i64>(2);
  }
  const std::size_t s_orders = cert.add_step(
      "each d_i has order 2 in G, so any homomorphism G -> K maps it to 1",
      "involutions-order-two", orders_ok, "order(d_1) = order(d_2) = order(d_3) = 2",
      {s_torsion});

  bool relations_ok = true;
  for (int i = 0; i < 3 && relations_ok; ++i) {
    GElt ai{};
    ai.k[static_cast<std::size_t>(i)] = 1;
    for (int j = 1; j <= 3; ++j) {
      const GElt dj{static_cast<VFour>(j), 0, {0, 0, 0}};
      const GElt conj = conjugate<Ambient>(ai, dj);
      const GElt expected = (j == i + 1) ? ai : Ambient::inv(ai);
      if (conj != expected) {
        relations_ok = false;
        break;
      }
    }
  }
  const std::size_t s_relations = cert.add_step(
      "a_i^{d_j} = a_i^{-1} for i != j holds in G, so the image of each a_i under a "
      "homomorphism killing the d_j squares to 1 and is therefore 1",
      "axis-conjugation-relations", relations_ok,
      "all nine conjugates a_i^{d_j} verified against the normal form",
      {s_torsion, s_orders});

  const GElt a_product = Ambient::mul(
      Ambient::mul(GElt{VFour::E, 0, {1, 0, 0}}, GElt{VFour::E, 0, {0, 1, 0}}),
      GElt{VFour::E, 0, {0, 0, 1}});
  const bool contradiction_ok =
      a_product == embed_K(KleinElt{0, 1}) && !(KleinElt{0, 1} == KleinElt{});
  cert.add_step(
      "a retraction G -> K fixes a = a1 a2 a3, yet the previous steps force its image "
      "to the identity; since a != 1 no retraction exists",
      "contradiction-a-fixed", contradiction_ok, "a = (0,1) != (0,0) = identity",
      {s_orders, s_relations});

  return cert;
}

B2ClosureReport b2_closure_check(const BallBounds& ball) {
  B2ClosureReport rep;
  const GElt b_squared{VFour::E, 2, {0, 0, 0}};
  for (const GElt& g : ball_elements<Ambient>(ball)) {
    ++rep.centrality_checks;
    if (Ambient::mul(b_squared, g) != Ambient::mul(g, b_squared)) rep.b2_central = false;
    const bool in_b2_subgroup =
        g.d == VFour::E && !is_odd(g.l) && g.k == std::array<i64, 3>{0, 0, 0};
    if (in_b2_subgroup) {
      const std::optional<KleinElt> e = decompose_K(g);
      if (!e || e->k != 0 || is_odd(e->l)) {
        rep.cap_is_even_b_powers = false;
        continue;
      }
      rep.closure_cap_K.push_back(*e);
    }
  }
  return rep;
}

}  // namespace kbg
