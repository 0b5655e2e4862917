#include "kbg/parse.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace kbg {

namespace {

constexpr std::size_t kMaxExpandedLetters = 100000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

  bool try_consume(char c) {
    if (!eof() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  i64 parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (!eof() && (peek() == '+' || peek() == '-')) ++pos;
    std::size_t digits_start = pos;
    while (!eof() && peek() >= '0' && peek() <= '9') ++pos;
    if (pos == digits_start) fail("expected an integer");
    i64 value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(start, "integer literal out of range");
    }
    if (ec != std::errc() || ptr != text.data() + pos) {
      throw ParseError(start, "malformed integer");
    }
    return value;
  }

  // Optional '^' exponent; defaults to 1.
  i64 parse_exponent() {
    skip_ws();
    if (try_consume('^')) return parse_int();
    return 1;
  }
};

// ---- word grammar -------------------------------------------------------

bool starts_word_primary(char c) {
  return c == '(' || c == '[' || c == '1' || c == 'x' || c == 'y' || c == 'z' || c == 't';
}

std::vector<Letter> invert_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back({it->var, checked_neg(it->exp)});
  }
  return out;
}

void append_letters(std::vector<Letter>& dst, const std::vector<Letter>& src) {
  if (dst.size() + src.size() > kMaxExpandedLetters) {
    throw Error("WordTooLarge", "expression expands past the letter limit");
  }
  dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<Letter> parse_word_product(Cursor& cur);

std::vector<Letter> parse_word_primary(Cursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("expected a word");
  const char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    std::vector<Letter> inner = parse_word_product(cur);
    cur.skip_ws();
    cur.expect(')', "closing parenthesis");
    return inner;
  }
  if (c == '[') {
    ++cur.pos;
    std::vector<Letter> first = parse_word_product(cur);
    cur.skip_ws();
    cur.expect(',', "commutator separator");
    std::vector<Letter> second = parse_word_product(cur);
    cur.skip_ws();
    cur.expect(']', "closing bracket");
    std::vector<Letter> out;
    append_letters(out, invert_letters(first));
    append_letters(out, invert_letters(second));
    append_letters(out, first);
    append_letters(out, second);
    return out;
  }
  if (c == '1') {
    ++cur.pos;
    return {};
  }
  int var = -1;
  if (c == 'x') {
    ++cur.pos;
    if (!cur.eof() && cur.peek() >= '0' && cur.peek() <= '9') {
      const char digit = cur.peek();
      if (digit == '0') cur.fail("variable indices run from x1 to x9");
      ++cur.pos;
      var = digit - '1';
    } else {
      var = 0;
    }
  } else if (c == 'y') {
    ++cur.pos;
    var = 1;
  } else if (c == 'z') {
    ++cur.pos;
    var = 2;
  } else if (c == 't') {
    ++cur.pos;
    var = 3;
  } else {
    cur.fail("expected a variable, '(', '[' or '1'");
  }
  return {Letter{var, 1}};
}

std::vector<Letter> apply_exponent(std::vector<Letter> base, i64 exp) {
  if (exp == 1) return base;
  if (exp == 0 || base.empty()) return {};
  if (base.size() == 1) return {Letter{base[0].var, checked_mul(base[0].exp, exp)}};
  const std::vector<Letter> pattern = exp < 0 ? invert_letters(base) : base;
  const i64 repeats = checked_abs(exp);
  if (static_cast<i64>(pattern.size()) > 0 &&
      repeats > static_cast<i64>(kMaxExpandedLetters / pattern.size())) {
    throw Error("WordTooLarge", "exponent expands past the letter limit");
  }
  std::vector<Letter> out;
  out.reserve(pattern.size() * static_cast<std::size_t>(repeats));
  for (i64 n = 0; n < repeats; ++n) append_letters(out, pattern);
  return out;
}

std::vector<Letter> parse_word_product(Cursor& cur) {
  std::vector<Letter> out;
  bool expect_term = true;
  bool saw_term = false;
  while (true) {
    cur.skip_ws();
    if (cur.eof() || cur.peek() == ')' || cur.peek() == ',' || cur.peek() == ']') break;
    if (cur.peek() == '*') {
      ++cur.pos;
      expect_term = true;
      continue;
    }
    if (!starts_word_primary(cur.peek())) {
      cur.fail("unexpected character in word");
    }
    std::vector<Letter> primary = parse_word_primary(cur);
    append_letters(out, apply_exponent(std::move(primary), cur.parse_exponent()));
    expect_term = false;
    saw_term = true;
  }
  if (!saw_term) cur.fail("expected a word");
  if (expect_term) cur.fail("dangling '*'");
  return out;
}

// ---- element grammar ----------------------------------------------------

template <class G>
struct GenTable {
  std::vector<std::pair<std::string_view, typename G::Elt>> entries;
};

template <class G>
typename G::Elt parse_elt_product(Cursor& cur, const GenTable<G>& gens, char terminator);

template <class G>
typename G::Elt parse_elt_primary(Cursor& cur, const GenTable<G>& gens) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("expected an element");
  if (cur.peek() == '(') {
    ++cur.pos;
    typename G::Elt inner = parse_elt_product<G>(cur, gens, ')');
    cur.expect(')', "closing parenthesis");
    return inner;
  }
  if (cur.peek() == '1') {
    ++cur.pos;
    return G::identity();
  }
  for (const auto& [token, value] : gens.entries) {
    if (cur.text.substr(cur.pos, token.size()) == token) {
      cur.pos += token.size();
      return value;
    }
  }
  cur.fail("unknown generator");
}

template <class G>
typename G::Elt parse_elt_product(Cursor& cur, const GenTable<G>& gens, char terminator) {
  typename G::Elt result = G::identity();
  bool expect_term = true;
  bool saw_term = false;
  while (true) {
    cur.skip_ws();
    if (cur.eof() || cur.peek() == terminator) break;
    if (cur.peek() == '*') {
      ++cur.pos;
      expect_term = true;
      continue;
    }
    typename G::Elt primary = parse_elt_primary<G>(cur, gens);
    result = G::mul(result, G::pow(primary, cur.parse_exponent()));
    expect_term = false;
    saw_term = true;
  }
  if (!saw_term) cur.fail("expected an element");
  if (expect_term) cur.fail("dangling '*'");
  return result;
}

template <class G>
typename G::Elt parse_element(std::string_view text, const GenTable<G>& gens) {
  Cursor cur{text};
  typename G::Elt result = parse_elt_product<G>(cur, gens, '\0');
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing characters after element");
  return result;
}

const GenTable<Klein>& klein_gens() {
  static const GenTable<Klein> table{{{"a", KleinElt{0, 1}}, {"b", KleinElt{1, 0}}}};
  return table;
}

const GenTable<Dihedral>& dihedral_gens() {
  static const GenTable<Dihedral> table{{{"a", DihedralElt{0, 1}}, {"b", DihedralElt{1, 0}}}};
  return table;
}

const GenTable<Ambient>& g_gens() {
  static const GenTable<Ambient> table{{
      {"d1", GElt{VFour::D1, 0, {0, 0, 0}}},
      {"d2", GElt{VFour::D2, 0, {0, 0, 0}}},
      {"d3", GElt{VFour::D3, 0, {0, 0, 0}}},
      {"a1", GElt{VFour::E, 0, {1, 0, 0}}},
      {"a2", GElt{VFour::E, 0, {0, 1, 0}}},
      {"a3", GElt{VFour::E, 0, {0, 0, 1}}},
      {"b", GElt{VFour::E, 1, {0, 0, 0}}},
  }};
  return table;
}

void append_factor(std::string& out, const std::string& letter, i64 exp) {
  if (exp == 0) return;
  if (!out.empty()) out += '*';
  out += letter;
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

FreeWord parse_word(std::string_view text) {
  Cursor cur{text};
  std::vector<Letter> letters = parse_word_product(cur);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing characters after word");
  int max_var = -1;
  for (const Letter& letter : letters) max_var = std::max(max_var, letter.var);
  return FreeWord(max_var + 1, letters);
}

KleinElt parse_klein(std::string_view text) { return parse_element<Klein>(text, klein_gens()); }

DihedralElt parse_dihedral(std::string_view text) {
  return parse_element<Dihedral>(text, dihedral_gens());
}

GElt parse_g(std::string_view text) { return parse_element<Ambient>(text, g_gens()); }

ZxDElt parse_zxd(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('(', "pair opener");
  const i64 i = cur.parse_int();
  cur.skip_ws();
  cur.expect(';', "pair separator");
  DihedralElt d = parse_elt_product<Dihedral>(cur, dihedral_gens(), ')');
  cur.expect(')', "pair closer");
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing characters after element");
  return {i, d};
}

std::string print_word(const FreeWord& w) {
  static const char* aliases[4] = {"x", "y", "z", "t"};
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& letter : w.letters()) {
    if (letter.var >= 9) {
      throw DomainError("IndexOutOfRange", "the word grammar covers x1..x9 only");
    }
    const std::string name =
        letter.var < 4 ? aliases[letter.var] : "x" + std::to_string(letter.var + 1);
    append_factor(out, name, letter.exp);
  }
  return out;
}

std::string print_klein(const KleinElt& e) {
  std::string out;
  append_factor(out, "b", e.l);
  append_factor(out, "a", e.k);
  return out.empty() ? "1" : out;
}

std::string print_dihedral(const DihedralElt& e) {
  std::string out;
  append_factor(out, "b", e.eps);
  append_factor(out, "a", e.k);
  return out.empty() ? "1" : out;
}

std::string print_g(const GElt& g) {
  std::string out;
  if (g.d != VFour::E) append_factor(out, "d" + std::to_string(static_cast<int>(g.d)), 1);
  append_factor(out, "b", g.l);
  for (int axis = 0; axis < 3; ++axis) {
    append_factor(out, "a" + std::to_string(axis + 1), g.k[static_cast<std::size_t>(axis)]);
  }
  return out.empty() ? "1" : out;
}

std::string print_zxd(const ZxDElt& z) {
  return "(" + std::to_string(z.i) + "; " + print_dihedral(z.d) + ")";
}

GroupId parse_group_id(std::string_view text) {
  if (text == "K") return GroupId::K;
  if (text == "D") return GroupId::D;
  if (text == "G") return GroupId::G;
  if (text == "ZD") return GroupId::ZD;
  throw ParseError(0, "unknown group (expected K, D, G or ZD)");
}

std::string group_id_name(GroupId id) {
  switch (id) {
    case GroupId::K: return "K";
    case GroupId::D: return "D";
    case GroupId::G: return "G";
    case GroupId::ZD: return "ZD";
  }
  return "?";
}

}  // namespace kbg
