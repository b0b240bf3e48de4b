#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nbe/word.hpp"

namespace nbe {

using BigInt = boost::multiprecision::cpp_int;

/// Square boolean matrix of allowed symbol transitions; entry (i,j) says
/// symbol j may follow symbol i.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::vector<std::vector<int>> rows);

  int size() const { return n_; }
  bool at(int i, int j) const { return bits_[static_cast<size_t>(i) * n_ + j] != 0; }
  bool row_nonempty(int i) const;
  bool col_nonempty(int j) const;
  /// True when every entry is <= the corresponding entry of the other matrix.
  bool dominated_by(const TransitionMatrix& outer) const;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<char> bits_;
};

enum class ShiftKind { FullShift, Sft };

/// A one-sided full shift or 1-step subshift of finite type over a finite
/// alphabet, with the standard metric d(x,y) = N^-(first disagreement).
class ShiftSpec {
 public:
  static ShiftSpec full_shift(int alphabet_size);
  static ShiftSpec sft(TransitionMatrix transitions);

  int alphabet_size() const { return alphabet_size_; }
  ShiftKind kind() const { return kind_; }
  const TransitionMatrix& transitions() const { return transitions_; }

  /// Transition check; always true on a full shift.
  bool allows(Symbol a, Symbol b) const;
  bool is_admissible(const Word& w) const;

 private:
  ShiftSpec() = default;
  int alphabet_size_ = 0;
  ShiftKind kind_ = ShiftKind::FullShift;
  TransitionMatrix transitions_;  // empty for full shifts
};

/// Exact number of admissible words of the given length, by transfer-matrix
/// power for subshifts (never enumeration).
BigInt count_admissible_words(const ShiftSpec& shift, int length);

/// Natural log of the admissible word count, for growth-rate estimates at
/// depths where the exact integer is unwieldy.
double log_count_admissible_words(const ShiftSpec& shift, int length);

}  // namespace nbe
