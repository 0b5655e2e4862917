#ifndef KBG_GROUPS_HPP_
#define KBG_GROUPS_HPP_

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kbg/checked.hpp"
#include "kbg/freewords.hpp"

namespace kbg {

enum class GroupId { K, D, G, ZD };

// Klein four-group {E, D1, D2, D3}, with Di^2 = E and D1*D2 = D3 cyclically.
enum class VFour : unsigned char { E = 0, D1 = 1, D2 = 2, D3 = 3 };

constexpr VFour mul(VFour a, VFour b) {
  return static_cast<VFour>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}

// Sign of the action of d on the axis-th infinite generator (0-based):
// E and the matching involution fix it, the other two involutions invert it.
constexpr int sign_action(VFour d, int axis) {
  return (d == VFour::E || static_cast<int>(d) == axis + 1) ? 1 : -1;
}

// True for the two involutions whose image under the first-coordinate map
// and under the hat substitution is the b-generator.
constexpr bool maps_to_b(VFour d) { return d == VFour::D2 || d == VFour::D3; }

// b^l a^k in the Klein bottle group <a, b | a^b = a^-1>.
struct KleinElt {
  i64 l = 0;
  i64 k = 0;

  friend bool operator==(const KleinElt&, const KleinElt&) = default;
  friend auto operator<=>(const KleinElt&, const KleinElt&) = default;
};

// b^eps a^k in the infinite dihedral group, eps in {0, 1}.
struct DihedralElt {
  i64 eps = 0;
  i64 k = 0;

  friend bool operator==(const DihedralElt&, const DihedralElt&) = default;
  friend auto operator<=>(const DihedralElt&, const DihedralElt&) = default;
};

// d * b^l * a1^k1 a2^k2 a3^k3 in the ambient group
// (V4 x <b>) |x (<a1> x <a2> x <a3>), where b inverts every a_i and each
// involution d_i fixes a_i and inverts the other two.
struct GElt {
  VFour d = VFour::E;
  i64 l = 0;
  std::array<i64, 3> k{0, 0, 0};

  friend bool operator==(const GElt&, const GElt&) = default;
  friend auto operator<=>(const GElt&, const GElt&) = default;
};

// (i, d) in Z x Dinf, componentwise law.
struct ZxDElt {
  i64 i = 0;
  DihedralElt d{};

  friend bool operator==(const ZxDElt&, const ZxDElt&) = default;
  friend auto operator<=>(const ZxDElt&, const ZxDElt&) = default;
};

namespace detail {

// Square-and-multiply on top of a carrier's mul/inv.
template <class G>
typename G::Elt pow_sqmul(typename G::Elt base, i64 n) {
  if (n < 0) return pow_sqmul<G>(G::inv(base), checked_neg(n));
  typename G::Elt acc = G::identity();
  while (n > 0) {
    if (n & 1) acc = G::mul(acc, base);
    n >>= 1;
    if (n > 0) base = G::mul(base, base);
  }
  return acc;
}

}  // namespace detail

struct Klein {
  using Elt = KleinElt;
  static constexpr GroupId id = GroupId::K;
  static constexpr const char* name = "K";

  static Elt identity() { return {}; }

  // (l,k)(l',k') = (l+l', k*(-1)^l' + k').
  static Elt mul(const Elt& g, const Elt& h) {
    return {checked_add(g.l, h.l), checked_add(is_odd(h.l) ? checked_neg(g.k) : g.k, h.k)};
  }

  static Elt inv(const Elt& g) {
    return {checked_neg(g.l), is_odd(g.l) ? g.k : checked_neg(g.k)};
  }

  // Closed form: even l scales k linearly, odd l alternates it away.
  static Elt pow(const Elt& g, i64 n) {
    if (n < 0) return inv(pow(g, checked_neg(n)));
    if (is_odd(g.l)) return {checked_mul(g.l, n), is_odd(n) ? g.k : 0};
    return {checked_mul(g.l, n), checked_mul(g.k, n)};
  }

  static std::optional<i64> order(const Elt& g) {
    if (g == identity()) return 1;
    return std::nullopt;  // torsion-free
  }
};

struct Dihedral {
  using Elt = DihedralElt;
  static constexpr GroupId id = GroupId::D;
  static constexpr const char* name = "D";

  static Elt identity() { return {}; }

  static Elt mul(const Elt& g, const Elt& h) {
    return {g.eps ^ h.eps, checked_add(h.eps != 0 ? checked_neg(g.k) : g.k, h.k)};
  }

  static Elt inv(const Elt& g) { return {g.eps, g.eps != 0 ? g.k : checked_neg(g.k)}; }

  static Elt pow(const Elt& g, i64 n) { return detail::pow_sqmul<Dihedral>(g, n); }

  static std::optional<i64> order(const Elt& g) {
    if (g == identity()) return 1;
    if (g.eps != 0) return 2;  // every reflection is an involution
    return std::nullopt;
  }
};

struct Ambient {
  using Elt = GElt;
  static constexpr GroupId id = GroupId::G;
  static constexpr const char* name = "G";

  static Elt identity() { return {}; }

  // (d,l,k)(d',l',k') = (dd', l+l', (k_i * (-1)^l' * sigma_i(d') + k'_i)_i).
  static Elt mul(const Elt& g, const Elt& h) {
    Elt r;
    r.d = kbg::mul(g.d, h.d);
    r.l = checked_add(g.l, h.l);
    const bool flip = is_odd(h.l);
    for (int axis = 0; axis < 3; ++axis) {
      i64 conjugated = flip ? checked_neg(g.k[axis]) : g.k[axis];
      if (sign_action(h.d, axis) < 0) conjugated = checked_neg(conjugated);
      r.k[axis] = checked_add(conjugated, h.k[axis]);
    }
    return r;
  }

  static Elt inv(const Elt& g) {
    Elt r;
    r.d = g.d;  // every V4 element is self-inverse
    r.l = checked_neg(g.l);
    const bool flip = is_odd(g.l);
    for (int axis = 0; axis < 3; ++axis) {
      i64 v = checked_neg(g.k[axis]);
      if (flip) v = checked_neg(v);
      if (sign_action(g.d, axis) < 0) v = checked_neg(v);
      r.k[axis] = v;
    }
    return r;
  }

  static Elt pow(const Elt& g, i64 n) { return detail::pow_sqmul<Ambient>(g, n); }

  static std::optional<i64> order(const Elt& g) {
    if (g.l != 0) return std::nullopt;
    if (g.d == VFour::E) {
      return g.k == std::array<i64, 3>{0, 0, 0} ? std::optional<i64>(1) : std::nullopt;
    }
    // (Di, 0, k)^2 = (E, 0, 2*k_i on axis i); only that axis survives.
    const int axis = static_cast<int>(g.d) - 1;
    return g.k[static_cast<std::size_t>(axis)] == 0 ? std::optional<i64>(2) : std::nullopt;
  }
};

struct ZxD {
  using Elt = ZxDElt;
  static constexpr GroupId id = GroupId::ZD;
  static constexpr const char* name = "ZD";

  static Elt identity() { return {}; }

  static Elt mul(const Elt& g, const Elt& h) {
    return {checked_add(g.i, h.i), Dihedral::mul(g.d, h.d)};
  }

  static Elt inv(const Elt& g) { return {checked_neg(g.i), Dihedral::inv(g.d)}; }

  static Elt pow(const Elt& g, i64 n) { return detail::pow_sqmul<ZxD>(g, n); }

  static std::optional<i64> order(const Elt& g) {
    if (g.i != 0) return std::nullopt;
    return Dihedral::order(g.d);
  }
};

template <class G>
typename G::Elt pow(const typename G::Elt& g, i64 n) {
  return G::pow(g, n);
}

template <class G>
std::optional<i64> order_of(const typename G::Elt& g) {
  return G::order(g);
}

template <class G>
typename G::Elt conjugate(const typename G::Elt& g, const typename G::Elt& by) {
  return G::mul(G::mul(G::inv(by), g), by);
}

// g^-1 h^-1 g h.
template <class G>
typename G::Elt commutator(const typename G::Elt& g, const typename G::Elt& h) {
  return G::mul(G::mul(G::mul(G::inv(g), G::inv(h)), g), h);
}

// Image of w under the evaluation homomorphism x_i -> tuple[i].
template <class G>
typename G::Elt evaluate_word(const FreeWord& w, std::span<const typename G::Elt> tuple) {
  if (static_cast<int>(tuple.size()) < w.arity()) {
    throw DomainError("ArityMismatch", "tuple shorter than word arity");
  }
  typename G::Elt result = G::identity();
  for (const Letter& letter : w.letters()) {
    result = G::mul(result, G::pow(tuple[static_cast<std::size_t>(letter.var)], letter.exp));
  }
  return result;
}

// Exponent bounds for a finite enumeration domain. lmax bounds |l| (and the
// Z coordinate), kmax bounds each |k_i|; the finite parts (V4, the dihedral
// involution bit) always range fully. Negative bounds give an empty ball.
struct BallBounds {
  i64 lmax = 0;
  i64 kmax = 0;
};

// Every element within bounds exactly once, lexicographically ascending on
// (finite part index, l, k...) restricted to the carrier's fields.
template <class G>
std::vector<typename G::Elt> ball_elements(const BallBounds& b) {
  std::vector<typename G::Elt> out;
  if constexpr (std::is_same_v<G, Klein>) {
    for (i64 l = -b.lmax; l <= b.lmax; ++l)
      for (i64 k = -b.kmax; k <= b.kmax; ++k) out.push_back({l, k});
  } else if constexpr (std::is_same_v<G, Dihedral>) {
    for (i64 eps = 0; eps <= 1; ++eps)
      for (i64 k = -b.kmax; k <= b.kmax; ++k) out.push_back({eps, k});
  } else if constexpr (std::is_same_v<G, Ambient>) {
    for (int d = 0; d < 4; ++d)
      for (i64 l = -b.lmax; l <= b.lmax; ++l)
        for (i64 k1 = -b.kmax; k1 <= b.kmax; ++k1)
          for (i64 k2 = -b.kmax; k2 <= b.kmax; ++k2)
            for (i64 k3 = -b.kmax; k3 <= b.kmax; ++k3)
              out.push_back({static_cast<VFour>(d), l, {k1, k2, k3}});
  } else if constexpr (std::is_same_v<G, ZxD>) {
    for (i64 eps = 0; eps <= 1; ++eps)
      for (i64 i = -b.lmax; i <= b.lmax; ++i)
        for (i64 k = -b.kmax; k <= b.kmax; ++k) out.push_back({i, {eps, k}});
  } else {
    static_assert(std::is_same_v<G, Klein>, "unknown carrier");
  }
  return out;
}

// --- Square/root toolkit in K ------------------------------------------
//
// The squares of K are exactly <b^2> united with <a^2, b^4>: squaring
// (l,k) gives (2l, 2k) for even l and (2l, 0) for odd l.

// True iff g has a square root in K.
bool is_square_K(const KleinElt& g);

// The unique square root of an element of <a^2, b^4>, i.e. g = (4m, 2k)
// yields (2m, k). Elements outside that subgroup are rejected with
// DomainError("NotInDomain"); in particular b^2 has infinitely many roots
// b a^j and is not in the domain.
KleinElt unique_sqrt_K(const KleinElt& g);

// True iff g commutes with every square of K; equivalently l is even.
bool centralizes_squares_K(const KleinElt& g);

}  // namespace kbg

#endif  // KBG_GROUPS_HPP_
