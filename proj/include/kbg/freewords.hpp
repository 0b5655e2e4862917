#ifndef KBG_FREEWORDS_HPP_
#define KBG_FREEWORDS_HPP_

#include <span>
#include <vector>

#include "kbg/checked.hpp"

namespace kbg {

// One syllable of a reduced word: variable index (0-based) and a nonzero
// exponent. Adjacent letters of a reduced word have distinct variables.
struct Letter {
  int var = 0;
  i64 exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word in F(x_1, ..., x_n). The arity records n; two words
// compare equal when their reduced letter sequences agree (the natural
// inclusions F_n <= F_m identify them regardless of declared arity).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int arity);
  // Reduces an arbitrary letter list. Throws DomainError("IndexOutOfRange")
  // if some letter's variable is outside [0, arity).
  FreeWord(int arity, std::span<const Letter> raw);

  static FreeWord generator(int arity, int var, i64 exp = 1);

  int arity() const noexcept { return arity_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  // Number of alphabet letters counted with multiplicity (sum of |exp|).
  i64 length() const;
  int max_var_used() const;  // -1 for the identity word

  // Same word viewed in a larger free group.
  FreeWord widened(int arity) const;

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }
  FreeWord inverse() const;
  FreeWord pow(i64 n) const;

  std::vector<i64> exponent_sums() const;
  // True iff every exponent sum vanishes.
  bool in_commutator_subgroup() const;

  // Appends one letter, merging and cancelling to keep the word reduced.
  void append(int var, i64 exp);

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  int arity_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction of a raw letter list (the canonical constructor, exposed as
// an operation in its own right).
FreeWord reduce(int arity, std::span<const Letter> raw);

// w1^-1 w2^-1 w1 w2.
FreeWord commutator(const FreeWord& w1, const FreeWord& w2);

// All reduced words of length <= max_len over x_1..x_nvars, ordered by
// length, then lexicographically by syllable sequence with the alphabet
// ordered x_1, x_1^-1, x_2, x_2^-1, ... The identity word comes first.
// A negative max_len yields the empty list.
std::vector<FreeWord> reduced_words_up_to(int nvars, i64 max_len);

// Elementary Nielsen move on F(x_1, ..., x_n).
struct NielsenMove {
  enum class Kind { Swap, Invert, RightMult };

  Kind kind = Kind::Swap;
  int i = 0;
  int j = 0;
  int sign = 1;  // RightMult: x_i -> x_i * x_j^sign, i != j, sign in {-1,+1}

  static NielsenMove swap(int i, int j) { return {Kind::Swap, i, j, 1}; }
  static NielsenMove invert(int i) { return {Kind::Invert, i, i, 1}; }
  static NielsenMove right_mult(int i, int j, int sign) {
    return {Kind::RightMult, i, j, sign};
  }

  NielsenMove inverted() const;

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

// A composition of elementary Nielsen moves, applied in list order: the
// first move acts on the input first. Inverting reverses and inverts the
// list, so apply(inverse(), apply(*this, w)) == w.
class FreeAut {
 public:
  explicit FreeAut(int arity = 0) : arity_(arity) {}

  int arity() const noexcept { return arity_; }
  const std::vector<NielsenMove>& moves() const noexcept { return moves_; }
  bool is_identity_composition() const noexcept { return moves_.empty(); }

  // Validates move indices against the arity.
  void append(const NielsenMove& move);

  FreeAut inverse() const;

  // Image of w under the composite substitution, freely reduced.
  // Throws DomainError("ArityMismatch") unless arities agree.
  FreeWord apply(const FreeWord& w) const;

  // Reduced image of the generator x_i.
  FreeWord generator_image(int i) const;

 private:
  int arity_ = 0;
  std::vector<NielsenMove> moves_;
};

// Result of the change of variables carrying w to x_1^m * u with u in the
// commutator subgroup and m = gcd of the absolute exponent sums of w
// (m = 0 when all sums vanish).
struct NielsenNormalForm {
  i64 m = 0;
  FreeWord u;
  FreeAut alpha;
};

// Deterministic Euclidean reduction on the exponent-sum vector: repeatedly
// pick the nonzero sum of smallest absolute value (ties by lowest index) as
// pivot and reduce the others modulo it with RightMult moves; finally the
// surviving sum is swapped into position 1 and made nonnegative.
NielsenNormalForm nielsen_normalize(const FreeWord& w);

}  // namespace kbg

#endif  // KBG_FREEWORDS_HPP_
