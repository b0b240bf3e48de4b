#include "nbe/subset.hpp"

#include <algorithm>
#include <set>

#include "nbe/errors.hpp"

namespace nbe {

SubsetSpec SubsetSpec::whole_space() {
  SubsetSpec s;
  s.kind_ = SubsetKind::WholeSpace;
  return s;
}

SubsetSpec SubsetSpec::cylinder_union(std::vector<Word> cylinders) {
  if (cylinders.empty()) throw ConfigError("cylinder union must be non-empty");
  // Normalize to an antichain: drop exact duplicates and any cylinder that
  // extends another listed one (the shorter cylinder absorbs it).
  std::sort(cylinders.begin(), cylinders.end(),
            [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::vector<Word> kept;
  for (const Word& w : cylinders) {
    bool absorbed = false;
    for (const Word& k : kept) {
      if (k.is_prefix_of(w)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end());
  SubsetSpec s;
  s.kind_ = SubsetKind::CylinderUnion;
  s.cylinders_ = std::move(kept);
  // A listed empty word means the whole space.
  if (s.cylinders_.size() == 1 && s.cylinders_[0].empty()) return whole_space();
  return s;
}

SubsetSpec SubsetSpec::sft_subsystem(TransitionMatrix sub_transitions) {
  SubsetSpec s;
  s.kind_ = SubsetKind::SftSubsystem;
  s.sub_transitions_ = std::move(sub_transitions);
  return s;
}

int SubsetSpec::max_cylinder_length() const {
  int m = 0;
  for (const Word& w : cylinders_) m = std::max(m, w.size());
  return m;
}

void SubsetSpec::validate_against(const ShiftSpec& shift) const {
  switch (kind_) {
    case SubsetKind::WholeSpace:
      return;
    case SubsetKind::CylinderUnion:
      for (const Word& w : cylinders_) {
        if (!shift.is_admissible(w)) {
          throw ConfigError("subset cylinder not admissible for the shift: " + w.to_string());
        }
      }
      return;
    case SubsetKind::SftSubsystem:
      if (sub_transitions_.size() != shift.alphabet_size()) {
        throw ConfigError("subsystem matrix size differs from the ambient alphabet");
      }
      if (shift.kind() == ShiftKind::Sft &&
          !sub_transitions_.dominated_by(shift.transitions())) {
        throw ConfigError("subsystem transitions exceed the ambient transitions");
      }
      return;
  }
}

SubsetSpec SubsetSpec::union_of(const SubsetSpec& a, const SubsetSpec& b) {
  if (a.kind_ == SubsetKind::WholeSpace || b.kind_ == SubsetKind::WholeSpace) {
    return whole_space();
  }
  if (a.kind_ != SubsetKind::CylinderUnion || b.kind_ != SubsetKind::CylinderUnion) {
    throw ConfigError("union is only defined for cylinder unions");
  }
  std::vector<Word> all = a.cylinders_;
  all.insert(all.end(), b.cylinders_.begin(), b.cylinders_.end());
  return cylinder_union(std::move(all));
}

std::vector<int> SubsetSpec::live_states() const {
  if (kind_ != SubsetKind::SftSubsystem) return {};
  const int n = sub_transitions_.size();
  std::vector<char> live(static_cast<size_t>(n), 1);
  // Iteratively remove states with no outgoing edge into the live set; what
  // survives are the states with an infinite forward path.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!live[static_cast<size_t>(i)]) continue;
      bool has_succ = false;
      for (int j = 0; j < n; ++j) {
        if (sub_transitions_.at(i, j) && live[static_cast<size_t>(j)]) {
          has_succ = true;
          break;
        }
      }
      if (!has_succ) {
        live[static_cast<size_t>(i)] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (live[static_cast<size_t>(i)]) out.push_back(i);
  }
  return out;
}

namespace {

// Admissible continuations of the given length from one starting state.
BigInt continuation_count(const ShiftSpec& shift, int from_state, int steps) {
  if (steps == 0) return 1;
  const int n = shift.alphabet_size();
  std::vector<BigInt> counts(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    if (shift.allows(static_cast<Symbol>(from_state), static_cast<Symbol>(j))) {
      counts[static_cast<size_t>(j)] = 1;
    }
  }
  for (int step = 1; step < steps; ++step) {
    std::vector<BigInt> next(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (counts[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (shift.allows(static_cast<Symbol>(i), static_cast<Symbol>(j))) {
          next[static_cast<size_t>(j)] += counts[static_cast<size_t>(i)];
        }
      }
    }
    counts.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& c : counts) total += c;
  return total;
}

}  // namespace

BigInt count_admissible_words(const ShiftSpec& shift, const SubsetSpec& subset, int length) {
  if (length < 0) throw ConfigError("word length must be non-negative");
  subset.validate_against(shift);
  switch (subset.kind()) {
    case SubsetKind::WholeSpace:
      return count_admissible_words(shift, length);
    case SubsetKind::SftSubsystem: {
      std::vector<int> live = subset.live_states();
      if (live.empty()) return 0;  // empty subsystem meets nothing
      if (length == 0) return 1;
      const TransitionMatrix& sub = subset.sub_transitions();
      const int n = sub.size();
      std::vector<char> is_live(static_cast<size_t>(n), 0);
      for (int q : live) is_live[static_cast<size_t>(q)] = 1;
      std::vector<BigInt> counts(static_cast<size_t>(n), 1);
      for (int step = 1; step < length; ++step) {
        std::vector<BigInt> next(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
          if (counts[static_cast<size_t>(i)] == 0) continue;
          for (int j = 0; j < n; ++j) {
            if (sub.at(i, j)) next[static_cast<size_t>(j)] += counts[static_cast<size_t>(i)];
          }
        }
        counts.swap(next);
      }
      // Only words that can continue forever inside the subsystem meet it.
      BigInt total = 0;
      for (int j = 0; j < n; ++j) {
        if (is_live[static_cast<size_t>(j)]) total += counts[static_cast<size_t>(j)];
      }
      return total;
    }
    case SubsetKind::CylinderUnion: {
      // A length-L word meets the union iff it is a prefix of some listed
      // cylinder or extends one. The antichain normalization rules out
      // double counting across the two cases and across cylinders.
      std::set<Word> prefixes;
      BigInt extensions = 0;
      for (const Word& u : subset.cylinders()) {
        if (u.size() >= length) {
          prefixes.insert(u.prefix(length));
        } else if (u.empty()) {
          extensions += count_admissible_words(shift, length);
        } else {
          extensions += continuation_count(shift, u[u.size() - 1], length - u.size());
        }
      }
      return BigInt(prefixes.size()) + extensions;
    }
  }
  throw InternalError("unreachable subset kind");
}

}  // namespace nbe
