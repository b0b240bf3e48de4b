#pragma once

#include "nbe/shift.hpp"
#include "nbe/word.hpp"

namespace nbe {

enum class BallKind { Open, Closed };

/// Realized cylinder length of a dynamical ball, plus a flag marking inputs
/// where the defining inequality sat within the floating-point guard band of
/// an exact integer threshold (the open/closed distinction then matters and
/// the result was decided by snapping to the exact integer).
struct CylinderLength {
  int length = 0;
  bool boundary_case = false;
};

/// Cylinder length D such that the order-n rate-eps ball around any point x
/// equals the cylinder on the first D symbols of x.
/// Open balls:   D = n + floor(n*eps / ln N).
/// Closed balls: D = n - 1 + ceil(n*eps / ln N).
CylinderLength ball_cylinder_length(int order, double eps, int alphabet_size, BallKind kind);

/// Generalization to an arbitrary radius r > 0 (the neutralized case is
/// r = e^{-n*eps}); used by the covering-lemma utilities where enlarged radii
/// such as 5r appear. The length is clamped at 0 when the ball is everything.
CylinderLength ball_cylinder_length_for_radius(int order, double radius, int alphabet_size,
                                               BallKind kind);

/// max over 0 <= j < n of the distance between the j-shifted sequences,
/// evaluated on finite words. Agreement over the whole comparable range
/// returns 0. Throws when a word is shorter than n, since then some shifted
/// pair has no symbols to compare.
double bowen_distance(const Word& x, const Word& y, int order, int alphabet_size);

/// Membership of y in the (open or closed) ball around center, decided by
/// direct metric evaluation. Agrees with the cylinder criterion from
/// ball_cylinder_length; that equivalence is asserted by the test suite.
/// Throws when either word is shorter than the realized cylinder length.
bool ball_membership(const Word& center, const Word& y, int order, double eps,
                     int alphabet_size, BallKind kind);

/// A ball together with its realized cylinder length.
struct NeutralizedBall {
  int order = 1;
  double rate = 0.0;
  Word center;
  BallKind kind = BallKind::Open;
  int realized_length = 0;
  bool boundary_case = false;
};

NeutralizedBall make_ball(Word center, int order, double eps, int alphabet_size, BallKind kind);

}  // namespace nbe
