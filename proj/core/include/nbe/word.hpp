#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nbe {

using Symbol = std::uint8_t;

/// A finite word over {0,...,N-1}, stored densely one symbol per byte.
/// A word of length m also denotes the cylinder of all sequences extending it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<int> symbols);

  /// Parses "0120" style digit strings; only alphabets up to 10 symbols.
  static Word from_string(const std::string& digits);

  int size() const { return static_cast<int>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](int i) const { return symbols_[static_cast<size_t>(i)]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  Word prefix(int length) const;
  Word appended(Symbol s) const;
  bool is_prefix_of(const Word& other) const;
  /// True when one of the two words is a prefix of the other, i.e. the two
  /// cylinders intersect (then the longer one is contained in the shorter).
  bool cylinder_intersects(const Word& other) const;

  /// Index of the first disagreement, or min(size, other.size) if the words
  /// agree on their whole overlap.
  int first_disagreement(const Word& other) const;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::vector<Symbol> symbols_;
};

}  // namespace nbe
