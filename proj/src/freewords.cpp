#include "kbg/freewords.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kbg {

namespace {

// Guard against runaway expansion when applying substitutions to words with
// huge exponents; the library targets desk-scale inputs.
constexpr std::size_t kMaxSyllables = std::size_t{1} << 22;

void check_var(int var, int arity) {
  if (var < 0 || var >= arity) {
    throw DomainError("IndexOutOfRange",
                      "variable index " + std::to_string(var + 1) +
                          " outside 1.." + std::to_string(arity));
  }
}

}  // namespace

FreeWord::FreeWord(int arity) : arity_(arity) {
  if (arity < 0) throw DomainError("IndexOutOfRange", "negative arity");
}

FreeWord::FreeWord(int arity, std::span<const Letter> raw) : FreeWord(arity) {
  for (const Letter& letter : raw) {
    check_var(letter.var, arity);
    append(letter.var, letter.exp);
  }
}

FreeWord FreeWord::generator(int arity, int var, i64 exp) {
  FreeWord w(arity);
  check_var(var, arity);
  w.append(var, exp);
  return w;
}

void FreeWord::append(int var, i64 exp) {
  check_var(var, arity_);
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().var == var) {
    i64 merged = checked_add(letters_.back().exp, exp);
    if (merged == 0) {
      letters_.pop_back();
    } else {
      letters_.back().exp = merged;
    }
    return;
  }
  if (letters_.size() >= kMaxSyllables) {
    throw Error("WordTooLarge", "word exceeds the syllable limit");
  }
  letters_.push_back({var, exp});
}

i64 FreeWord::length() const {
  i64 total = 0;
  for (const Letter& letter : letters_) total = checked_add(total, checked_abs(letter.exp));
  return total;
}

int FreeWord::max_var_used() const {
  int max_var = -1;
  for (const Letter& letter : letters_) max_var = std::max(max_var, letter.var);
  return max_var;
}

FreeWord FreeWord::widened(int arity) const {
  if (arity < arity_) {
    throw DomainError("ArityMismatch", "cannot shrink arity below letters in use");
  }
  FreeWord w = *this;
  w.arity_ = arity;
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  arity_ = std::max(arity_, rhs.arity_);
  for (const Letter& letter : rhs.letters_) append(letter.var, letter.exp);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(arity_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->var, checked_neg(it->exp)});
  }
  return w;
}

FreeWord FreeWord::pow(i64 n) const {
  if (n < 0) return inverse().pow(checked_neg(n));
  // Single-syllable words stay single-syllable under powers.
  if (letters_.size() == 1) {
    return generator(arity_, letters_[0].var, checked_mul(letters_[0].exp, n));
  }
  FreeWord result(arity_);
  for (i64 i = 0; i < n; ++i) result *= *this;
  return result;
}

std::vector<i64> FreeWord::exponent_sums() const {
  std::vector<i64> sums(static_cast<std::size_t>(arity_), 0);
  for (const Letter& letter : letters_) {
    sums[static_cast<std::size_t>(letter.var)] =
        checked_add(sums[static_cast<std::size_t>(letter.var)], letter.exp);
  }
  return sums;
}

bool FreeWord::in_commutator_subgroup() const {
  const std::vector<i64> sums = exponent_sums();
  return std::all_of(sums.begin(), sums.end(), [](i64 s) { return s == 0; });
}

FreeWord reduce(int arity, std::span<const Letter> raw) { return FreeWord(arity, raw); }

FreeWord commutator(const FreeWord& w1, const FreeWord& w2) {
  return w1.inverse() * w2.inverse() * w1 * w2;
}

std::vector<FreeWord> reduced_words_up_to(int nvars, i64 max_len) {
  std::vector<FreeWord> out;
  if (max_len < 0) return out;
  out.push_back(FreeWord(nvars));
  // Alphabet symbol s encodes x_{s/2}^{+1} when s is even, x_{s/2}^{-1}
  // when odd; growing words one symbol at a time keeps them reduced.
  std::vector<std::vector<int>> level;
  level.push_back({});
  for (i64 len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& word : level) {
      for (int s = 0; s < 2 * nvars; ++s) {
        if (!word.empty() && (word.back() ^ 1) == s) continue;
        std::vector<int> grown = word;
        grown.push_back(s);
        next.push_back(std::move(grown));
      }
    }
    for (const std::vector<int>& symbols : next) {
      FreeWord w(nvars);
      for (int s : symbols) w.append(s / 2, s % 2 == 0 ? 1 : -1);
      out.push_back(std::move(w));
    }
    level = std::move(next);
  }
  return out;
}

NielsenMove NielsenMove::inverted() const {
  switch (kind) {
    case Kind::Swap:
    case Kind::Invert:
      return *this;
    case Kind::RightMult:
      return right_mult(i, j, -sign);
  }
  return *this;  // unreachable
}

namespace {

// Image of a word under one elementary move, reduced.
FreeWord apply_move(const NielsenMove& move, const FreeWord& w) {
  FreeWord out(w.arity());
  switch (move.kind) {
    case NielsenMove::Kind::Swap:
      for (const Letter& letter : w.letters()) {
        int var = letter.var;
        if (var == move.i) {
          var = move.j;
        } else if (var == move.j) {
          var = move.i;
        }
        // Swapping distinct variables keeps adjacent letters distinct, but
        // reduce anyway via the shared appender.
        out.append(var, letter.exp);
      }
      return out;
    case NielsenMove::Kind::Invert:
      for (const Letter& letter : w.letters()) {
        out.append(letter.var, letter.var == move.i ? checked_neg(letter.exp) : letter.exp);
      }
      return out;
    case NielsenMove::Kind::RightMult:
      for (const Letter& letter : w.letters()) {
        if (letter.var != move.i) {
          out.append(letter.var, letter.exp);
          continue;
        }
        // x_i^e -> (x_i x_j^s)^e, spelled out letter by letter.
        if (letter.exp > 0) {
          for (i64 n = 0; n < letter.exp; ++n) {
            out.append(move.i, 1);
            out.append(move.j, move.sign);
          }
        } else {
          for (i64 n = 0; n < checked_neg(letter.exp); ++n) {
            out.append(move.j, -move.sign);
            out.append(move.i, -1);
          }
        }
      }
      return out;
  }
  return out;  // unreachable
}

}  // namespace

void FreeAut::append(const NielsenMove& move) {
  check_var(move.i, arity_);
  check_var(move.j, arity_);
  if (move.kind == NielsenMove::Kind::RightMult) {
    if (move.i == move.j) {
      throw DomainError("IndexOutOfRange", "RightMult requires distinct variables");
    }
    if (move.sign != 1 && move.sign != -1) {
      throw DomainError("IndexOutOfRange", "RightMult sign must be +1 or -1");
    }
  }
  moves_.push_back(move);
}

FreeAut FreeAut::inverse() const {
  FreeAut inv(arity_);
  inv.moves_.reserve(moves_.size());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
    inv.moves_.push_back(it->inverted());
  }
  return inv;
}

FreeWord FreeAut::apply(const FreeWord& w) const {
  if (w.arity() != arity_) {
    throw DomainError("ArityMismatch", "word arity " + std::to_string(w.arity()) +
                                           " vs automorphism arity " + std::to_string(arity_));
  }
  FreeWord result = w;
  for (const NielsenMove& move : moves_) result = apply_move(move, result);
  return result;
}

FreeWord FreeAut::generator_image(int i) const {
  check_var(i, arity_);
  return apply(FreeWord::generator(arity_, i));
}

NielsenNormalForm nielsen_normalize(const FreeWord& w) {
  const int arity = w.arity();
  FreeAut alpha(arity);
  std::vector<i64> sums = w.exponent_sums();

  auto nonzero_count = [&sums] {
    return std::count_if(sums.begin(), sums.end(), [](i64 s) { return s != 0; });
  };

  while (nonzero_count() > 1) {
    // Pivot: smallest nonzero |sum|, ties by lowest index.
    int pivot = -1;
    for (int i = 0; i < arity; ++i) {
      if (sums[i] == 0) continue;
      if (pivot < 0 || checked_abs(sums[i]) < checked_abs(sums[pivot])) pivot = i;
    }
    for (int j = 0; j < arity; ++j) {
      if (j == pivot || sums[j] == 0) continue;
      i64 quotient = sums[j] / sums[pivot];  // |remainder| < |pivot sum|
      int sign = quotient > 0 ? -1 : 1;
      for (i64 n = 0; n < checked_abs(quotient); ++n) {
        alpha.append(NielsenMove::right_mult(pivot, j, sign));
        sums[j] = checked_add(sums[j], sign > 0 ? sums[pivot] : checked_neg(sums[pivot]));
      }
    }
  }

  i64 m = 0;
  for (int i = 0; i < arity; ++i) {
    if (sums[i] == 0) continue;
    if (i != 0) alpha.append(NielsenMove::swap(0, i));
    if (sums[i] < 0) alpha.append(NielsenMove::invert(0));
    m = checked_abs(sums[i]);
    break;
  }

  FreeWord image = alpha.apply(w);
  FreeWord u = arity > 0 ? FreeWord::generator(arity, 0, checked_neg(m)) * image : image;
  return {m, std::move(u), std::move(alpha)};
}

}  // namespace kbg
