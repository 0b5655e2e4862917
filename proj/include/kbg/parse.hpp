#ifndef KBG_PARSE_HPP_
#define KBG_PARSE_HPP_

#include <string>
#include <string_view>

#include "kbg/freewords.hpp"
#include "kbg/groups.hpp"

namespace kbg {

// Word grammar: variables x1..x9 with aliases x, y, z, t for x1..x4;
// juxtaposition or '*' for products; '^' with an optionally signed integer
// exponent; [w1, w2] for the commutator w1^-1 w2^-1 w1 w2; parentheses;
// whitespace insignificant; '1' for the identity. The returned word's arity
// is the highest variable index used.
FreeWord parse_word(std::string_view text);

// Element grammars: arbitrary products of generator powers, normalized by
// the parser. K and Dinf use letters a, b; the ambient group uses
// d1, d2, d3, b, a1, a2, a3; Z x Dinf reads "(i; w)" with w a Dinf
// expression. '1' denotes the identity everywhere.
KleinElt parse_klein(std::string_view text);
DihedralElt parse_dihedral(std::string_view text);
GElt parse_g(std::string_view text);
ZxDElt parse_zxd(std::string_view text);

// Canonical printing (normal forms, '^1' omitted, identity printed "1").
std::string print_word(const FreeWord& w);
std::string print_klein(const KleinElt& e);
std::string print_dihedral(const DihedralElt& e);
std::string print_g(const GElt& g);
std::string print_zxd(const ZxDElt& z);

GroupId parse_group_id(std::string_view text);  // "K" | "D" | "G" | "ZD"
std::string group_id_name(GroupId id);

}  // namespace kbg

#endif  // KBG_PARSE_HPP_
