#pragma once

#include <vector>

#include "nbe/shift.hpp"
#include "nbe/word.hpp"

namespace nbe {

enum class SubsetKind { WholeSpace, CylinderUnion, SftSubsystem };

/// A subset of the shift space: the whole space, a finite union of cylinders,
/// or the subsystem of a sub-transition-matrix. Cylinder lists are normalized
/// to an antichain (no listed cylinder extends another).
class SubsetSpec {
 public:
  static SubsetSpec whole_space();
  static SubsetSpec cylinder_union(std::vector<Word> cylinders);
  static SubsetSpec sft_subsystem(TransitionMatrix sub_transitions);

  SubsetKind kind() const { return kind_; }
  const std::vector<Word>& cylinders() const { return cylinders_; }
  const TransitionMatrix& sub_transitions() const { return sub_transitions_; }

  /// Longest defining cylinder (0 for whole space / subsystems).
  int max_cylinder_length() const;

  /// Checks the subset against an ambient shift: cylinders must be
  /// admissible, a sub-matrix must be entrywise dominated. Throws ConfigError.
  void validate_against(const ShiftSpec& shift) const;

  /// Union of two subsets; defined for cylinder unions (and anything with
  /// the whole space, which absorbs).
  static SubsetSpec union_of(const SubsetSpec& a, const SubsetSpec& b);

  /// Symbols of the subsystem from which an infinite admissible path exists.
  /// Meaningful for SftSubsystem; empty otherwise.
  std::vector<int> live_states() const;

 private:
  SubsetSpec() = default;
  SubsetKind kind_ = SubsetKind::WholeSpace;
  std::vector<Word> cylinders_;
  TransitionMatrix sub_transitions_;
};

/// Number of admissible words of the given length whose cylinder meets the
/// subset, by transfer counting on the quotiented prefix structure.
BigInt count_admissible_words(const ShiftSpec& shift, const SubsetSpec& subset, int length);

}  // namespace nbe
