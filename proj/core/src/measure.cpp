#include "nbe/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nbe/errors.hpp"

namespace nbe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStationaryTol = 1e-12;
constexpr double kTelescopeTol = 1e-9;

double safe_log(double p) { return p > 0.0 ? std::log(p) : -kInf; }

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> c(p.size());
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    c[i] = acc;
  }
  return c;
}

}  // namespace

MeasureSpec MeasureSpec::bernoulli(std::vector<double> probs) {
  if (probs.size() < 2) throw ConfigError("bernoulli measure needs at least 2 symbols");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw ConfigError("probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("probabilities must sum to 1");
  MeasureSpec m;
  m.kind_ = MeasureKind::Bernoulli;
  m.alphabet_size_ = static_cast<int>(probs.size());
  m.probs_ = std::move(probs);
  m.finalize();
  return m;
}

MeasureSpec MeasureSpec::bernoulli_rational(std::vector<Rational> probs) {
  Rational sum = 0;
  std::vector<double> dp;
  for (const Rational& p : probs) {
    if (p < 0) throw ConfigError("probabilities must be non-negative");
    sum += p;
    dp.push_back(static_cast<double>(p));
  }
  if (sum != 1) throw ConfigError("rational probabilities must sum to exactly 1");
  MeasureSpec m = bernoulli(std::move(dp));
  m.has_exact_ = true;
  m.rprobs_ = std::move(probs);
  return m;
}

MeasureSpec MeasureSpec::markov(std::vector<double> stationary,
                                std::vector<std::vector<double>> matrix) {
  const int n = static_cast<int>(stationary.size());
  if (n < 2) throw ConfigError("markov measure needs at least 2 symbols");
  if (static_cast<int>(matrix.size()) != n) throw ConfigError("markov matrix must be square");
  double ssum = 0.0;
  for (double p : stationary) {
    if (p < 0.0) throw ConfigError("stationary entries must be non-negative");
    ssum += p;
  }
  if (std::abs(ssum - 1.0) > 1e-9) throw ConfigError("stationary vector must sum to 1");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[static_cast<size_t>(i)].size()) != n) {
      throw ConfigError("markov matrix must be square");
    }
    double rsum = 0.0;
    for (double p : matrix[static_cast<size_t>(i)]) {
      if (p < 0.0) throw ConfigError("transition probabilities must be non-negative");
      rsum += p;
    }
    if (stationary[static_cast<size_t>(i)] > 0.0 && std::abs(rsum - 1.0) > 1e-9) {
      throw ConfigError("markov matrix rows must sum to 1");
    }
  }
  // Stationarity: pi P = pi.
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) {
      v += stationary[static_cast<size_t>(i)] * matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (std::abs(v - stationary[static_cast<size_t>(j)]) > kStationaryTol) {
      throw ConfigError("stationary vector is not invariant under the matrix");
    }
  }
  MeasureSpec m;
  m.kind_ = MeasureKind::Markov;
  m.alphabet_size_ = n;
  m.stationary_ = std::move(stationary);
  m.matrix_ = std::move(matrix);
  m.finalize();
  return m;
}

MeasureSpec MeasureSpec::markov_rational(std::vector<Rational> stationary,
                                         std::vector<std::vector<Rational>> matrix) {
  const int n = static_cast<int>(stationary.size());
  std::vector<double> ds(static_cast<size_t>(n));
  std::vector<std::vector<double>> dm(static_cast<size_t>(n));
  Rational ssum = 0;
  for (int i = 0; i < n; ++i) {
    ssum += stationary[static_cast<size_t>(i)];
    ds[static_cast<size_t>(i)] = static_cast<double>(stationary[static_cast<size_t>(i)]);
    Rational rsum = 0;
    for (const Rational& p : matrix[static_cast<size_t>(i)]) {
      rsum += p;
      dm[static_cast<size_t>(i)].push_back(static_cast<double>(p));
    }
    if (stationary[static_cast<size_t>(i)] > 0 && rsum != 1) {
      throw ConfigError("rational markov rows must sum to exactly 1");
    }
  }
  if (ssum != 1) throw ConfigError("rational stationary vector must sum to exactly 1");
  for (int j = 0; j < n; ++j) {
    Rational v = 0;
    for (int i = 0; i < n; ++i) {
      v += stationary[static_cast<size_t>(i)] * matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (v != stationary[static_cast<size_t>(j)]) {
      throw ConfigError("rational stationary vector is not exactly invariant");
    }
  }
  MeasureSpec m = markov(std::move(ds), std::move(dm));
  m.has_exact_ = true;
  m.rstationary_ = std::move(stationary);
  m.rmatrix_ = std::move(matrix);
  return m;
}

MeasureSpec MeasureSpec::markov_parry(const TransitionMatrix& transitions) {
  const int n = transitions.size();
  if (n < 2) throw ConfigError("parry measure needs at least 2 symbols");
  for (int i = 0; i < n; ++i) {
    if (!transitions.row_nonempty(i) || !transitions.col_nonempty(i)) {
      throw ConfigError("parry measure requires every symbol to have successors and predecessors");
    }
  }
  // Perron data by power iteration; desk-scale matrices converge quickly.
  auto iterate = [&](bool left) {
    std::vector<double> v(static_cast<size_t>(n), 1.0);
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
      std::vector<double> next(static_cast<size_t>(n), 0.0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (transitions.at(i, j)) {
            if (left) {
              next[static_cast<size_t>(j)] += v[static_cast<size_t>(i)];
            } else {
              next[static_cast<size_t>(i)] += v[static_cast<size_t>(j)];
            }
          }
        }
      }
      double norm = 0.0;
      for (double x : next) norm = std::max(norm, x);
      for (double& x : next) x /= norm;
      double delta = 0.0;
      for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[static_cast<size_t>(i)] - v[static_cast<size_t>(i)]));
      v.swap(next);
      lambda = norm;
      if (delta < 1e-15 && it > 8) break;
    }
    return std::make_pair(v, lambda);
  };
  auto [right, lambda] = iterate(false);
  auto [leftv, lambda2] = iterate(true);
  (void)lambda2;
  std::vector<std::vector<double>> p(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    double rsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (transitions.at(i, j)) {
        p[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            right[static_cast<size_t>(j)] / (lambda * right[static_cast<size_t>(i)]);
        rsum += p[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    for (int j = 0; j < n; ++j) p[static_cast<size_t>(i)][static_cast<size_t>(j)] /= rsum;
  }
  std::vector<double> pi(static_cast<size_t>(n));
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    pi[static_cast<size_t>(i)] = leftv[static_cast<size_t>(i)] * right[static_cast<size_t>(i)];
    norm += pi[static_cast<size_t>(i)];
  }
  for (double& x : pi) x /= norm;
  // Re-stationarize exactly enough for the 1e-10 invariant after the
  // row normalization above.
  for (int it = 0; it < 2000; ++it) {
    std::vector<double> next(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        next[static_cast<size_t>(j)] += pi[static_cast<size_t>(i)] * p[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    double s = 0.0;
    for (double x : next) s += x;
    for (double& x : next) x /= s;
    double delta = 0.0;
    for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[static_cast<size_t>(i)] - pi[static_cast<size_t>(i)]));
    pi.swap(next);
    if (delta < 1e-16) break;
  }
  return markov(std::move(pi), std::move(p));
}

void MeasureSpec::finalize() {
  if (kind_ == MeasureKind::Bernoulli) {
    log_probs_.clear();
    for (double p : probs_) log_probs_.push_back(safe_log(p));
    cum_probs_ = cumulative(probs_);
    // Symbols with equal weight are interchangeable for mass purposes.
    symbol_group_.assign(static_cast<size_t>(alphabet_size_), -1);
    group_log_prob_.clear();
    std::vector<double> group_p;
    for (int i = 0; i < alphabet_size_; ++i) {
      int g = -1;
      for (size_t k = 0; k < group_p.size(); ++k) {
        if (probs_[static_cast<size_t>(i)] == group_p[k]) {
          g = static_cast<int>(k);
          break;
        }
      }
      if (g < 0) {
        g = static_cast<int>(group_p.size());
        group_p.push_back(probs_[static_cast<size_t>(i)]);
        group_log_prob_.push_back(log_probs_[static_cast<size_t>(i)]);
      }
      symbol_group_[static_cast<size_t>(i)] = g;
    }
    structure_ = MassStructure::SymbolCounts;
    return;
  }
  const int n = alphabet_size_;
  log_stationary_.clear();
  for (double p : stationary_) log_stationary_.push_back(safe_log(p));
  log_matrix_.assign(static_cast<size_t>(n), {});
  cum_matrix_.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (double p : matrix_[static_cast<size_t>(i)]) log_matrix_[static_cast<size_t>(i)].push_back(safe_log(p));
    cum_matrix_[static_cast<size_t>(i)] = cumulative(matrix_[static_cast<size_t>(i)]);
  }
  cum_probs_ = cumulative(stationary_);

  // Telescoping detection: the chain has boundary-pair masses when
  // log P_ij = potential(j) - potential(i) - decay on its support graph.
  // Solve for the potential along a BFS tree, with the decay as a symbolic
  // unknown fixed by the first cycle, then verify every remaining edge.
  structure_ = MassStructure::General;
  std::vector<double> a(static_cast<size_t>(n), 0.0), b(static_cast<size_t>(n), 0.0);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue;
  int start = -1;
  for (int i = 0; i < n && start < 0; ++i) {
    if (stationary_[static_cast<size_t>(i)] > 0.0) start = i;
  }
  if (start < 0) return;
  seen[static_cast<size_t>(start)] = 1;
  queue.push_back(start);
  struct PendingEdge { int from, to; double w; };
  std::vector<PendingEdge> extra;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (int j = 0; j < n; ++j) {
      double pij = matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      double pji = matrix_[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (pij > 0.0) {
        if (!seen[static_cast<size_t>(j)]) {
          seen[static_cast<size_t>(j)] = 1;
          a[static_cast<size_t>(j)] = a[static_cast<size_t>(i)] + std::log(pij);
          b[static_cast<size_t>(j)] = b[static_cast<size_t>(i)] + 1.0;
          queue.push_back(j);
        } else {
          extra.push_back({i, j, std::log(pij)});
        }
      }
      if (pji > 0.0 && !seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        a[static_cast<size_t>(j)] = a[static_cast<size_t>(i)] - std::log(pji);
        b[static_cast<size_t>(j)] = b[static_cast<size_t>(i)] - 1.0;
        queue.push_back(j);
      }
    }
  }
  bool kappa_known = false;
  double kappa = 0.0;
  for (const PendingEdge& e : extra) {
    double ca = a[static_cast<size_t>(e.to)] - a[static_cast<size_t>(e.from)] - e.w;
    double cb = b[static_cast<size_t>(e.to)] - b[static_cast<size_t>(e.from)] - 1.0;
    if (std::abs(cb) > 0.5) {
      double k = -ca / cb;
      if (kappa_known && std::abs(k - kappa) > kTelescopeTol) return;
      kappa = k;
      kappa_known = true;
    }
  }
  if (!kappa_known) return;
  for (const PendingEdge& e : extra) {
    double ca = a[static_cast<size_t>(e.to)] - a[static_cast<size_t>(e.from)] - e.w;
    double cb = b[static_cast<size_t>(e.to)] - b[static_cast<size_t>(e.from)] - 1.0;
    if (std::abs(ca + cb * kappa) > kTelescopeTol) return;
  }
  telescope_decay_ = -kappa;
  telescope_potential_.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    telescope_potential_[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)] * kappa;
  }
  structure_ = MassStructure::BoundaryPair;
}

double MeasureSpec::log_cylinder_mass(const Word& w) const {
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size_) throw ConfigError("word symbol outside the measure's alphabet");
  }
  if (w.empty()) return 0.0;
  double acc = 0.0;
  if (kind_ == MeasureKind::Bernoulli) {
    for (int i = 0; i < w.size(); ++i) {
      acc += log_probs_[w[i]];
    }
    return acc;
  }
  acc = log_stationary_[w[0]];
  for (int i = 0; i + 1 < w.size(); ++i) {
    acc += log_matrix_[w[i]][w[i + 1]];
  }
  return acc;
}

Rational MeasureSpec::cylinder_mass_exact(const Word& w) const {
  if (!has_exact_) throw ConfigError("measure was not constructed with rational parameters");
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size_) throw ConfigError("word symbol outside the measure's alphabet");
  }
  if (w.empty()) return 1;
  Rational acc = 1;
  if (kind_ == MeasureKind::Bernoulli) {
    for (int i = 0; i < w.size(); ++i) acc *= rprobs_[w[i]];
    return acc;
  }
  acc = rstationary_[w[0]];
  for (int i = 0; i + 1 < w.size(); ++i) acc *= rmatrix_[w[i]][w[i + 1]];
  return acc;
}

Word MeasureSpec::sample_word(int length, std::uint64_t seed) const {
  Rng rng(seed);
  return sample_word(length, rng);
}

Word MeasureSpec::sample_word(int length, Rng& rng) const {
  if (length < 0) throw ConfigError("sample length must be non-negative");
  std::vector<Symbol> out;
  out.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    if (kind_ == MeasureKind::Bernoulli) {
      out.push_back(static_cast<Symbol>(rng.pick_cumulative(cum_probs_.data(), alphabet_size_)));
    } else if (i == 0) {
      out.push_back(static_cast<Symbol>(rng.pick_cumulative(cum_probs_.data(), alphabet_size_)));
    } else {
      const auto& row = cum_matrix_[out.back()];
      out.push_back(static_cast<Symbol>(rng.pick_cumulative(row.data(), alphabet_size_)));
    }
  }
  return Word(std::move(out));
}

double MeasureSpec::entropy_rate() const {
  double h = 0.0;
  if (kind_ == MeasureKind::Bernoulli) {
    for (double p : probs_) {
      if (p > 0.0) h -= p * std::log(p);
    }
    return h;
  }
  for (int i = 0; i < alphabet_size_; ++i) {
    double pi = stationary_[static_cast<size_t>(i)];
    if (pi <= 0.0) continue;
    for (int j = 0; j < alphabet_size_; ++j) {
      double p = matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (p > 0.0) h -= pi * p * std::log(p);
    }
  }
  return h;
}

void MeasureSpec::check_support(const ShiftSpec& shift) const {
  if (alphabet_size_ != shift.alphabet_size()) {
    throw ConfigError("measure alphabet differs from the shift alphabet");
  }
  if (shift.kind() == ShiftKind::FullShift) return;
  if (kind_ == MeasureKind::Bernoulli) {
    for (int i = 0; i < alphabet_size_; ++i) {
      if (probs_[static_cast<size_t>(i)] <= 0.0) continue;
      for (int j = 0; j < alphabet_size_; ++j) {
        if (probs_[static_cast<size_t>(j)] > 0.0 && !shift.allows(static_cast<Symbol>(i), static_cast<Symbol>(j))) {
          throw ConfigError("bernoulli support uses a forbidden transition");
        }
      }
    }
    return;
  }
  for (int i = 0; i < alphabet_size_; ++i) {
    if (stationary_[static_cast<size_t>(i)] <= 0.0) continue;
    for (int j = 0; j < alphabet_size_; ++j) {
      if (matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0.0 &&
          !shift.allows(static_cast<Symbol>(i), static_cast<Symbol>(j))) {
        throw ConfigError("markov support uses a forbidden transition");
      }
    }
  }
}

double MeasureSpec::telescoped_log_mass(int first, int last, int length) const {
  if (structure_ != MassStructure::BoundaryPair) {
    throw InternalError("telescoped mass queried on a non-telescoping measure");
  }
  return log_stationary_[static_cast<size_t>(first)] +
         telescope_potential_[static_cast<size_t>(last)] -
         telescope_potential_[static_cast<size_t>(first)] -
         static_cast<double>(length - 1) * telescope_decay_;
}

bool MeasureSpec::step_allowed(int from, int to) const {
  if (kind_ == MeasureKind::Bernoulli) return probs_[static_cast<size_t>(to)] > 0.0;
  return matrix_[static_cast<size_t>(from)][static_cast<size_t>(to)] > 0.0;
}

}  // namespace nbe
