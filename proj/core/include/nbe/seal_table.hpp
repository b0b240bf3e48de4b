#pragma once

#include <optional>
#include <vector>

#include "nbe/ball.hpp"

namespace nbe {

/// Per-depth availability of cover balls. For a fixed rate and ball kind the
/// realized cylinder length is strictly increasing in the order, so each
/// depth is realized by at most one order in [n_min, n_max]; depths skipped
/// when the length jumps by more than one are gaps where no ball seals.
/// order_for_depth keeps the largest realizing order (cheapest seal, since
/// e^{-n s} is non-increasing in n for s >= 0).
class SealTable {
 public:
  static SealTable build(int alphabet_size, double eps, int n_min, int n_max, BallKind kind);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  double eps() const { return eps_; }
  BallKind kind() const { return kind_; }
  int depth_min() const { return depth_min_; }
  int depth_max() const { return depth_max_; }
  bool any_boundary_case() const { return any_boundary_case_; }

  std::optional<int> order_at(int depth) const;

  /// ln of the cheapest seal cost e^{-n s} at this depth, +inf if no order
  /// realizes it.
  double log_seal(int depth, double s) const;

 private:
  int n_min_ = 0;
  int n_max_ = 0;
  double eps_ = 0.0;
  BallKind kind_ = BallKind::Open;
  int depth_min_ = 0;
  int depth_max_ = 0;
  bool any_boundary_case_ = false;
  std::vector<int> order_for_depth_;  // -1 where unavailable
};

}  // namespace nbe
