#include "nbe/ball.hpp"

#include <cmath>

#include "nbe/errors.hpp"

namespace nbe {

namespace {

constexpr double kBoundaryBand = 1e-12;

// Floor/ceil of the threshold t = n*eps/ln N with snapping: when t lies
// within a relative guard band of an integer it is treated as that integer,
// so the strict (open) and non-strict (closed) comparisons stay faithful to
// exact arithmetic for rationally-expressible inputs.
struct SnappedThreshold {
  double value = 0.0;
  long long nearest = 0;
  bool on_integer = false;
};

SnappedThreshold snap(double t) {
  SnappedThreshold s;
  s.value = t;
  double r = std::round(t);
  s.nearest = static_cast<long long>(r);
  s.on_integer = std::abs(t - r) <= kBoundaryBand * std::max(1.0, std::abs(t));
  return s;
}

long long floor_snapped(const SnappedThreshold& s) {
  if (s.on_integer) return s.nearest;
  return static_cast<long long>(std::floor(s.value));
}

long long ceil_snapped(const SnappedThreshold& s) {
  if (s.on_integer) return s.nearest;
  return static_cast<long long>(std::ceil(s.value));
}

CylinderLength from_threshold(int order, double t, BallKind kind) {
  SnappedThreshold s = snap(t);
  CylinderLength out;
  out.boundary_case = s.on_integer;
  if (kind == BallKind::Open) {
    // Each window start j needs agreement strictly past t, i.e. on
    // floor(t)+1 symbols; the union over j < n is a prefix of length
    // n + floor(t). A negative floor means no constraint at all.
    long long f = floor_snapped(s);
    out.length = f >= 0 ? static_cast<int>(order + f) : 0;
  } else {
    long long c = ceil_snapped(s);
    out.length = c >= 1 ? static_cast<int>(order - 1 + c) : 0;
  }
  return out;
}

}  // namespace

CylinderLength ball_cylinder_length(int order, double eps, int alphabet_size, BallKind kind) {
  if (order < 1) throw ConfigError("ball order must be >= 1");
  if (!(eps > 0.0)) throw ConfigError("ball rate must be > 0");
  if (alphabet_size < 2) throw ConfigError("alphabet size must be at least 2");
  double t = static_cast<double>(order) * eps / std::log(static_cast<double>(alphabet_size));
  return from_threshold(order, t, kind);
}

CylinderLength ball_cylinder_length_for_radius(int order, double radius, int alphabet_size,
                                               BallKind kind) {
  if (order < 1) throw ConfigError("ball order must be >= 1");
  if (!(radius > 0.0)) throw ConfigError("ball radius must be > 0");
  if (alphabet_size < 2) throw ConfigError("alphabet size must be at least 2");
  double t = -std::log(radius) / std::log(static_cast<double>(alphabet_size));
  return from_threshold(order, t, kind);
}

double bowen_distance(const Word& x, const Word& y, int order, int alphabet_size) {
  if (order < 1) throw ConfigError("order must be >= 1");
  if (alphabet_size < 2) throw ConfigError("alphabet size must be at least 2");
  if (x.size() < order || y.size() < order) {
    throw ConfigError("words too short to evaluate all shifted pairs");
  }
  int q = x.first_disagreement(y);
  if (q == std::min(x.size(), y.size())) return 0.0;  // agree on the whole overlap
  // The first disagreement at index q dominates: the worst window start is
  // min(q, order-1), giving distance N^-(q - min(q, order-1)).
  int exponent = q - std::min(q, order - 1);
  return std::pow(static_cast<double>(alphabet_size), -static_cast<double>(exponent));
}

bool ball_membership(const Word& center, const Word& y, int order, double eps,
                     int alphabet_size, BallKind kind) {
  CylinderLength cl = ball_cylinder_length(order, eps, alphabet_size, kind);
  if (center.size() < cl.length || y.size() < cl.length) {
    throw ConfigError("words too short to decide ball membership");
  }
  double d = bowen_distance(center, y, order, alphabet_size);
  if (d == 0.0) return true;
  // Compare N^-m against e^{-n eps} in log space as integer m vs threshold t,
  // with the same snapping rule as the cylinder length, so the two routes
  // cannot disagree at boundary inputs.
  double m = -std::log(d) / std::log(static_cast<double>(alphabet_size));
  long long m_int = static_cast<long long>(std::llround(m));
  double t = static_cast<double>(order) * eps / std::log(static_cast<double>(alphabet_size));
  SnappedThreshold s = snap(t);
  if (kind == BallKind::Open) {
    if (s.on_integer) return m_int > s.nearest;
    return static_cast<double>(m_int) > s.value;
  }
  if (s.on_integer) return m_int >= s.nearest;
  return static_cast<double>(m_int) >= s.value;
}

NeutralizedBall make_ball(Word center, int order, double eps, int alphabet_size, BallKind kind) {
  CylinderLength cl = ball_cylinder_length(order, eps, alphabet_size, kind);
  if (center.size() < cl.length) {
    throw ConfigError("ball center shorter than the realized cylinder length");
  }
  NeutralizedBall b;
  b.order = order;
  b.rate = eps;
  b.center = std::move(center);
  b.kind = kind;
  b.realized_length = cl.length;
  b.boundary_case = cl.boundary_case;
  return b;
}

}  // namespace nbe
