#pragma once

#include <utility>
#include <vector>

#include "nbe/shift.hpp"
#include "nbe/subset.hpp"
#include "nbe/word.hpp"

namespace nbe {

/// The quotiented prefix tree the solvers run on. Nodes of the admissible
/// prefix tree that meet the target are grouped into classes with identical
/// subtree structure:
///   - trie nodes: the (few) explicit words that are proper prefixes of the
///     target's defining cylinders, pinned to their depth;
///   - interior states: nodes already inside the target region, grouped by
///     last symbol; their transition structure is depth-independent.
/// Nodes whose cylinder misses the target have no class (cost 0 to cover).
/// Interior entries carry a weight level so weighted cover targets can reuse
/// the same machinery; plain subsets have the single level of weight 1.
class ClassGraph {
 public:
  enum class ChildKind { Trie, Interior };
  struct Child {
    ChildKind kind;
    Symbol symbol;
    int index;  // trie node id, or interior state
    int level;  // weight level for Interior children
  };
  struct TrieNode {
    int depth = 0;
    std::vector<Child> children;
  };

  static ClassGraph from_subset(const ShiftSpec& shift, const SubsetSpec& subset);
  /// Weighted cells: an antichain of cylinders with non-negative weights.
  /// Zero-weight cells are dropped.
  static ClassGraph from_cells(const ShiftSpec& shift,
                               const std::vector<std::pair<Word, double>>& cells);

  int alphabet_size() const { return alphabet_size_; }
  const std::vector<TrieNode>& trie() const { return trie_; }
  const TrieNode& root() const { return trie_.front(); }
  const std::vector<std::vector<int>>& interior_next() const { return interior_next_; }
  const std::vector<double>& level_weights() const { return level_weights_; }
  int levels() const { return static_cast<int>(level_weights_.size()); }
  bool empty_target() const { return empty_target_; }

  /// ln of the number of tree nodes per (interior state, depth), computed by
  /// forward propagation from the trie entries; -inf where unreachable.
  std::vector<std::vector<double>> interior_log_counts(int depth_max) const;

 private:
  int alphabet_size_ = 0;
  std::vector<TrieNode> trie_;
  std::vector<std::vector<int>> interior_next_;
  std::vector<double> level_weights_;
  bool empty_target_ = false;
};

}  // namespace nbe
