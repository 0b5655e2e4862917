#include "kbg/groups.hpp"

namespace kbg {

bool is_square_K(const KleinElt& g) {
  const bool even_l = !is_odd(g.l);
  const bool even_k = !is_odd(g.k);
  return (g.k == 0 && even_l) || (g.l % 4 == 0 && even_k);
}

KleinElt unique_sqrt_K(const KleinElt& g) {
  if (g.l % 4 != 0 || is_odd(g.k)) {
    throw DomainError("NotInDomain",
                      "unique square roots exist only in <a^2, b^4>; b-exponent must be "
                      "divisible by 4 and a-exponent even");
  }
  return {g.l / 2, g.k / 2};
}

bool centralizes_squares_K(const KleinElt& g) { return !is_odd(g.l); }

}  // namespace kbg
