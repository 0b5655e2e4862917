#ifndef KBG_MAPS_HPP_
#define KBG_MAPS_HPP_

#include <array>
#include <optional>

#include "kbg/groups.hpp"

namespace kbg {

// Permutation of the three infinite axes of the ambient group, acting
// simultaneously on the V4 part (relabelling the involutions) and on the
// exponent triple. Fixes the embedded copy of K pointwise.
class IndexPerm {
 public:
  IndexPerm() : image_{0, 1, 2} {}
  explicit IndexPerm(std::array<int, 3> image);

  static IndexPerm identity() { return IndexPerm(); }
  static IndexPerm transposition(int axis_a, int axis_b);

  int apply(int axis) const { return image_[static_cast<std::size_t>(axis)]; }
  IndexPerm inverse() const;
  bool is_identity() const { return image_ == std::array<int, 3>{0, 1, 2}; }
  const std::array<int, 3>& image() const { return image_; }

  friend bool operator==(const IndexPerm&, const IndexPerm&) = default;

 private:
  std::array<int, 3> image_;
};

// First-coordinate homomorphism G -> Dinf: a1 -> a, a2, a3, d1 -> 1,
// b, d2, d3 -> b. Closed form ((l + [d maps to b]) mod 2, k1).
DihedralElt f_hom(const GElt& g);

// Degree homomorphism G -> Z: the b-exponent.
i64 deg_hom(const GElt& g);

// K -> G, b -> b and a -> a1 a2 a3; image (E, l, (k,k,k)).
GElt embed_K(const KleinElt& e);

// Partial inverse of embed_K; nullopt when g is not in the embedded copy.
std::optional<KleinElt> decompose_K(const GElt& g);

// The substitution a1 -> a, a2, a3 -> 1, d1 -> 1, d2, d3 -> b, b -> b
// applied to the normal form. Not a homomorphism, but it preserves the
// first coordinate: f_hom(embed_K(hat_subst(g))) == f_hom(g).
KleinElt hat_subst(const GElt& g);

// The axis-relabelling automorphism of G induced by p.
GElt perm_aut(const IndexPerm& p, const GElt& g);

// Quotient K -> Dinf = K/<b^2>: (l, k) -> (l mod 2, k).
DihedralElt pi_quotient(const KleinElt& e);

// Phi: G -> Z x Dinf, g -> (deg(g), f(g)). Injective on the embedded K.
ZxDElt phi(const GElt& g);

// Membership in Phi(K) = {(i, b^j a^k) : i == j mod 2}, an index-two
// subgroup of Z x Dinf (the fibred product).
bool in_fibred_product(const ZxDElt& z);

// Inverse of Phi restricted to the embedded K. Throws
// DomainError("NotInImage") when the parity condition fails.
KleinElt phi_inv_on_K(const ZxDElt& z);

// Membership in H = Phi^-1(Phi(K)), the index-two subgroup of G retracting
// onto K; closed form d in {E, D1}.
bool in_H(const GElt& g);

// The retraction H -> K, g -> phi_inv_on_K(phi(g)) = (l, k1). Fixes the
// embedded K pointwise; throws DomainError("NotInSubgroup") outside H.
KleinElt rho_retract(const GElt& g);

}  // namespace kbg

#endif  // KBG_MAPS_HPP_
