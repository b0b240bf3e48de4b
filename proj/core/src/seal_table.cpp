#include "nbe/seal_table.hpp"

#include <limits>

#include "nbe/errors.hpp"

namespace nbe {

SealTable SealTable::build(int alphabet_size, double eps, int n_min, int n_max, BallKind kind) {
  if (n_min < 1 || n_max < n_min) throw ConfigError("order range must satisfy 1 <= n_min <= n_max");
  SealTable t;
  t.n_min_ = n_min;
  t.n_max_ = n_max;
  t.eps_ = eps;
  t.kind_ = kind;
  t.depth_min_ = ball_cylinder_length(n_min, eps, alphabet_size, kind).length;
  t.depth_max_ = ball_cylinder_length(n_max, eps, alphabet_size, kind).length;
  t.order_for_depth_.assign(static_cast<size_t>(t.depth_max_) + 1, -1);
  for (int n = n_min; n <= n_max; ++n) {
    CylinderLength cl = ball_cylinder_length(n, eps, alphabet_size, kind);
    t.any_boundary_case_ = t.any_boundary_case_ || cl.boundary_case;
    if (cl.length <= t.depth_max_) {
      // Larger orders overwrite: the cheapest seal per depth wins.
      t.order_for_depth_[static_cast<size_t>(cl.length)] = n;
    }
  }
  return t;
}

std::optional<int> SealTable::order_at(int depth) const {
  if (depth < 0 || depth > depth_max_) return std::nullopt;
  int n = order_for_depth_[static_cast<size_t>(depth)];
  if (n < 0) return std::nullopt;
  return n;
}

double SealTable::log_seal(int depth, double s) const {
  std::optional<int> n = order_at(depth);
  if (!n) return std::numeric_limits<double>::infinity();
  return -s * static_cast<double>(*n);
}

}  // namespace nbe
