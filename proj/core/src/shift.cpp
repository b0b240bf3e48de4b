#include "nbe/shift.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nbe/errors.hpp"

namespace nbe {

TransitionMatrix::TransitionMatrix(std::vector<std::vector<int>> rows) {
  n_ = static_cast<int>(rows.size());
  bits_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n_) {
      throw ConfigError("transition matrix must be square");
    }
    for (int j = 0; j < n_; ++j) {
      int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v != 0 && v != 1) throw ConfigError("transition matrix entries must be 0 or 1");
      bits_[static_cast<size_t>(i) * n_ + j] = static_cast<char>(v);
    }
  }
}

bool TransitionMatrix::row_nonempty(int i) const {
  for (int j = 0; j < n_; ++j) {
    if (at(i, j)) return true;
  }
  return false;
}

bool TransitionMatrix::col_nonempty(int j) const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, j)) return true;
  }
  return false;
}

bool TransitionMatrix::dominated_by(const TransitionMatrix& outer) const {
  if (n_ != outer.n_) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) && !outer.at(i, j)) return false;
    }
  }
  return true;
}

ShiftSpec ShiftSpec::full_shift(int alphabet_size) {
  if (alphabet_size < 2) throw ConfigError("alphabet size must be at least 2");
  ShiftSpec s;
  s.alphabet_size_ = alphabet_size;
  s.kind_ = ShiftKind::FullShift;
  return s;
}

ShiftSpec ShiftSpec::sft(TransitionMatrix transitions) {
  if (transitions.size() < 2) throw ConfigError("alphabet size must be at least 2");
  for (int i = 0; i < transitions.size(); ++i) {
    if (!transitions.row_nonempty(i)) throw ConfigError("SFT transition row with no successor");
    if (!transitions.col_nonempty(i)) throw ConfigError("SFT transition column with no predecessor");
  }
  ShiftSpec s;
  s.alphabet_size_ = transitions.size();
  s.kind_ = ShiftKind::Sft;
  s.transitions_ = std::move(transitions);
  return s;
}

bool ShiftSpec::allows(Symbol a, Symbol b) const {
  if (a >= alphabet_size_ || b >= alphabet_size_) return false;
  if (kind_ == ShiftKind::FullShift) return true;
  return transitions_.at(a, b);
}

bool ShiftSpec::is_admissible(const Word& w) const {
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size_) return false;
  }
  if (kind_ == ShiftKind::Sft) {
    for (int i = 0; i + 1 < w.size(); ++i) {
      if (!transitions_.at(w[i], w[i + 1])) return false;
    }
  }
  return true;
}

BigInt count_admissible_words(const ShiftSpec& shift, int length) {
  if (length < 0) throw ConfigError("word length must be non-negative");
  if (length == 0) return 1;  // the empty word
  const int n = shift.alphabet_size();
  if (shift.kind() == ShiftKind::FullShift) {
    return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(length));
  }
  // counts[j] = number of admissible words of the current length ending in j
  std::vector<BigInt> counts(static_cast<size_t>(n), 1);
  for (int step = 1; step < length; ++step) {
    std::vector<BigInt> next(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (counts[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (shift.transitions().at(i, j)) next[static_cast<size_t>(j)] += counts[static_cast<size_t>(i)];
      }
    }
    counts.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& c : counts) total += c;
  return total;
}

double log_count_admissible_words(const ShiftSpec& shift, int length) {
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  BigInt c = count_admissible_words(shift, length);
  return static_cast<double>(boost::multiprecision::log(BigFloat(c)));
}

}  // namespace nbe
