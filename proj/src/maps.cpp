#include "kbg/maps.hpp"

#include <algorithm>

namespace kbg {

IndexPerm::IndexPerm(std::array<int, 3> image) : image_(image) {
  std::array<int, 3> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) {
    throw DomainError("IndexOutOfRange", "not a permutation of the three axes");
  }
}

IndexPerm IndexPerm::transposition(int axis_a, int axis_b) {
  std::array<int, 3> image{0, 1, 2};
  if (axis_a < 0 || axis_a > 2 || axis_b < 0 || axis_b > 2) {
    throw DomainError("IndexOutOfRange", "axis outside 0..2");
  }
  std::swap(image[static_cast<std::size_t>(axis_a)], image[static_cast<std::size_t>(axis_b)]);
  return IndexPerm(image);
}

IndexPerm IndexPerm::inverse() const {
  std::array<int, 3> image{0, 1, 2};
  for (int axis = 0; axis < 3; ++axis) {
    image[static_cast<std::size_t>(image_[static_cast<std::size_t>(axis)])] = axis;
  }
  return IndexPerm(image);
}

DihedralElt f_hom(const GElt& g) {
  const i64 eps = (maps_to_b(g.d) ? g.l + 1 : g.l) % 2;
  return {eps < 0 ? eps + 2 : eps, g.k[0]};
}

i64 deg_hom(const GElt& g) { return g.l; }

GElt embed_K(const KleinElt& e) { return {VFour::E, e.l, {e.k, e.k, e.k}}; }

std::optional<KleinElt> decompose_K(const GElt& g) {
  if (g.d != VFour::E || g.k[0] != g.k[1] || g.k[1] != g.k[2]) return std::nullopt;
  return KleinElt{g.l, g.k[0]};
}

KleinElt hat_subst(const GElt& g) {
  return {maps_to_b(g.d) ? checked_add(g.l, 1) : g.l, g.k[0]};
}

GElt perm_aut(const IndexPerm& p, const GElt& g) {
  GElt r;
  if (g.d == VFour::E) {
    r.d = VFour::E;
  } else {
    r.d = static_cast<VFour>(p.apply(static_cast<int>(g.d) - 1) + 1);
  }
  r.l = g.l;
  for (int axis = 0; axis < 3; ++axis) {
    r.k[static_cast<std::size_t>(p.apply(axis))] = g.k[static_cast<std::size_t>(axis)];
  }
  return r;
}

DihedralElt pi_quotient(const KleinElt& e) {
  const i64 eps = e.l % 2;
  return {eps < 0 ? eps + 2 : eps, e.k};
}

ZxDElt phi(const GElt& g) { return {deg_hom(g), f_hom(g)}; }

bool in_fibred_product(const ZxDElt& z) { return (z.i - z.d.eps) % 2 == 0; }

KleinElt phi_inv_on_K(const ZxDElt& z) {
  if (!in_fibred_product(z)) {
    throw DomainError("NotInImage", "degree and dihedral parts disagree mod 2");
  }
  return {z.i, z.d.k};
}

bool in_H(const GElt& g) { return !maps_to_b(g.d); }

KleinElt rho_retract(const GElt& g) {
  if (!in_H(g)) {
    throw DomainError("NotInSubgroup", "element lies outside the index-two subgroup H");
  }
  return phi_inv_on_K(phi(g));
}

}  // namespace kbg
