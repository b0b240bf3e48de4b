#include "nbe/word.hpp"

#include <algorithm>

#include "nbe/errors.hpp"

namespace nbe {

Word::Word(std::initializer_list<int> symbols) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s > 255) throw ConfigError("word symbol out of byte range");
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

Word Word::from_string(const std::string& digits) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw ConfigError("word string must be decimal digits: " + digits);
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(out));
}

Word Word::prefix(int length) const {
  if (length < 0 || length > size()) throw ConfigError("prefix length out of range");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + length));
}

Word Word::appended(Symbol s) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(s);
  return Word(std::move(out));
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
}

bool Word::cylinder_intersects(const Word& other) const {
  return is_prefix_of(other) || other.is_prefix_of(*this);
}

int Word::first_disagreement(const Word& other) const {
  int overlap = std::min(size(), other.size());
  for (int i = 0; i < overlap; ++i) {
    if (symbols_[static_cast<size_t>(i)] != other[i]) return i;
  }
  return overlap;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    out.push_back(s < 10 ? static_cast<char>('0' + s) : '?');
  }
  return out;
}

}  // namespace nbe
