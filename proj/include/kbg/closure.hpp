#ifndef KBG_CLOSURE_HPP_
#define KBG_CLOSURE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "kbg/certificate.hpp"
#include "kbg/freewords.hpp"
#include "kbg/groups.hpp"
#include "kbg/maps.hpp"

namespace kbg {

// A one-sided equation w(x, y, ...) = target over a fixed carrier.
template <class G>
struct Equation {
  FreeWord word;
  typename G::Elt target;
};

// Full trace of one run of the solution-transfer pipeline: the input
// equation and its G-solution, the derived target, the change-of-variables
// data, the axis renaming (if any), and the K-solution. verified == true
// guarantees evaluate_word(word, k_solution) equals the target exactly.
struct TransferReport {
  FreeWord word;
  std::vector<GElt> input_tuple;
  GElt value_in_G{};
  KleinElt target{};

  i64 m = 0;
  FreeWord u;
  FreeAut alpha;

  std::vector<GElt> pulled_tuple;    // solution of alpha(word) = value
  std::optional<IndexPerm> renaming; // applied when m > 0 and needed
  std::vector<GElt> renamed_tuple;
  std::vector<KleinElt> hat_tuple;
  std::vector<KleinElt> k_solution;  // pulled back through alpha

  bool verified = false;
};

// Carries any G-solution of w = h with h in the embedded K to a K-solution:
// normalize the word to x1^m * u, re-express the solution, rename axes so
// the leading entry avoids the two involutions that map to b, apply the hat
// substitution entrywise, pull back through the change of variables, and
// verify. Throws DomainError("TargetNotInK") when the word value leaves K
// and VerificationError if the final re-check fails.
TransferReport transfer_solution(const FreeWord& w, std::span<const GElt> tuple);

// First nvars-tuple over the ball, in lexicographic ball-product order,
// whose word value equals the target; nullopt when the ball holds none
// (which never proves global unsolvability).
template <class G>
std::optional<std::vector<typename G::Elt>> brute_force_solve(const Equation<G>& eq,
                                                              const BallBounds& ball,
                                                              int nvars) {
  if (nvars < eq.word.arity()) {
    throw DomainError("ArityMismatch", "fewer unknowns than word variables");
  }
  const std::vector<typename G::Elt> elements = ball_elements<G>(ball);
  if (elements.empty()) return std::nullopt;
  std::vector<std::size_t> index(static_cast<std::size_t>(nvars), 0);
  std::vector<typename G::Elt> tuple(static_cast<std::size_t>(nvars), elements[0]);
  while (true) {
    if (evaluate_word<G>(eq.word, tuple) == eq.target) return tuple;
    // Advance the odometer; the first position is most significant.
    int pos = nvars - 1;
    while (pos >= 0) {
      std::size_t p = static_cast<std::size_t>(pos);
      if (++index[p] < elements.size()) {
        tuple[p] = elements[index[p]];
        break;
      }
      index[p] = 0;
      tuple[p] = elements[0];
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

enum class DihedralMethod { TrivialTarget, OddSumInvolution, BallSearch };

struct DihedralSolution {
  DihedralMethod method = DihedralMethod::BallSearch;
  std::optional<std::vector<DihedralElt>> tuple;
};

// Case analysis for equations over Dinf: the identity target has the
// all-identity solution; an involution target (eps = 1) with some variable
// of odd exponent sum is solved by sending that variable to the target and
// the rest to 1; everything else falls through to ball search.
DihedralSolution dihedral_solve(const Equation<Dihedral>& eq, const BallBounds& ball,
                                int nvars);

struct ProbeConfig {
  i64 max_word_len = 4;
  int nvars = 2;
  BallBounds g_ball{1, 1};
  BallBounds k_ball{4, 8};  // oracle search domain
  bool run_oracle = true;
  std::size_t max_witnesses = 16;
};

struct ProbeWitness {
  FreeWord word;
  std::vector<GElt> tuple;
  KleinElt target{};
  std::vector<KleinElt> k_solution;
};

struct ProbeReport {
  i64 words_enumerated = 0;
  i64 tuples_per_word = 0;
  i64 evaluations = 0;
  i64 targets_in_K = 0;
  i64 transfers_run = 0;
  i64 transfer_failures = 0;
  i64 bookkeeping_checks = 0;
  i64 bookkeeping_failures = 0;
  i64 oracle_queries = 0;     // distinct (word, target) pairs searched
  i64 oracle_hits = 0;
  i64 oracle_misses = 0;
  std::vector<ProbeWitness> sample_witnesses;

  bool all_passed() const {
    return transfer_failures == 0 && bookkeeping_failures == 0 && oracle_misses == 0;
  }
};

// Enumerates every reduced word up to the length bound and every tuple over
// the G-ball; whenever the word value lands in the embedded K, runs the
// transfer, checks the degree/first-coordinate bookkeeping, and (optionally)
// cross-checks an independent brute-force search over the K-ball.
ProbeReport probe_verbal_closedness(const ProbeConfig& config);

// Solutions of g^2 = 1 in K by integer reasoning on the power closed form
// (2l = 0 forces l = 0; then 2k = 0 forces k = 0).
std::vector<KleinElt> involutions_in_K_closed_form();

// Machine-checked chain: K is torsion-free, so a retraction G -> K kills
// the order-two involutions d_i; the defining relations then force every
// a_i to the identity, contradicting fixedness of a = a1 a2 a3.
Certificate no_retraction_certificate();

// commutator(g^2, h^2) == 1 for all ball pairs.
template <class G>
bool check_square_law(const BallBounds& ball) {
  const auto elements = ball_elements<G>(ball);
  for (const auto& g : elements) {
    const auto g2 = G::mul(g, g);
    for (const auto& h : elements) {
      if (commutator<G>(g2, G::mul(h, h)) != G::identity()) return false;
    }
  }
  return true;
}

struct B2ClosureReport {
  i64 centrality_checks = 0;
  bool b2_central = true;
  std::vector<KleinElt> closure_cap_K;  // decompositions of ball elements of <b^2>
  bool cap_is_even_b_powers = true;

  bool all_passed() const { return b2_central && cap_is_even_b_powers; }
};

// In the concrete ambient group the square of b is central (so its normal
// closure is just <b^2>), and the ball elements of <b^2> decompose in K as
// exactly the even powers of b.
B2ClosureReport b2_closure_check(const BallBounds& ball);

}  // namespace kbg

#endif  // KBG_CLOSURE_HPP_
