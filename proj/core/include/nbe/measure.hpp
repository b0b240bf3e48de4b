#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nbe/rng.hpp"
#include "nbe/shift.hpp"
#include "nbe/word.hpp"

namespace nbe {

using Rational = boost::multiprecision::cpp_rational;

enum class MeasureKind { Bernoulli, Markov };

/// How per-cylinder masses depend on the word, which decides the class
/// quotient the partial-cover solver can use at large depth.
///   SymbolCounts  - product measures: mass is a function of symbol counts.
///   BoundaryPair  - Markov chains whose transition weights telescope, so the
///                   mass depends only on (first symbol, last symbol, length);
///                   maximal-entropy (Parry) chains are the canonical case.
///   General       - anything else; only small explicit trees are feasible.
enum class MassStructure { SymbolCounts, BoundaryPair, General };

/// A Bernoulli or (stationary) Markov measure with exact cylinder masses in
/// log space; optionally carries exact rational parameters for the
/// small-depth rational paths.
class MeasureSpec {
 public:
  static MeasureSpec bernoulli(std::vector<double> probs);
  static MeasureSpec bernoulli_rational(std::vector<Rational> probs);
  static MeasureSpec markov(std::vector<double> stationary, std::vector<std::vector<double>> matrix);
  static MeasureSpec markov_rational(std::vector<Rational> stationary,
                                     std::vector<std::vector<Rational>> matrix);
  /// Maximal-entropy Markov measure of an SFT (Perron data by power iteration).
  static MeasureSpec markov_parry(const TransitionMatrix& transitions);

  MeasureKind kind() const { return kind_; }
  int alphabet_size() const { return alphabet_size_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& stationary() const { return stationary_; }
  const std::vector<std::vector<double>>& matrix() const { return matrix_; }

  /// Natural-log mass of the cylinder on w; -infinity for null cylinders.
  double log_cylinder_mass(const Word& w) const;

  /// Exact rational mass; requires rational construction.
  Rational cylinder_mass_exact(const Word& w) const;
  bool has_exact() const { return has_exact_; }

  /// Word drawn from the finite-dimensional marginal; deterministic per seed.
  Word sample_word(int length, std::uint64_t seed) const;
  Word sample_word(int length, Rng& rng) const;

  /// Shannon entropy rate in nats.
  double entropy_rate() const;

  /// Throws unless every positive-probability step is admissible.
  void check_support(const ShiftSpec& shift) const;

  MassStructure mass_structure() const { return structure_; }
  /// For SymbolCounts: group index per symbol (symbols with equal weight share
  /// a group) and the per-group log weight.
  const std::vector<int>& symbol_group() const { return symbol_group_; }
  const std::vector<double>& group_log_prob() const { return group_log_prob_; }
  /// For BoundaryPair: log mass = boundary_offset(first,last) - (len-1)*decay.
  double telescoped_log_mass(int first, int last, int length) const;
  bool step_allowed(int from, int to) const;

 private:
  MeasureSpec() = default;
  void finalize();

  MeasureKind kind_ = MeasureKind::Bernoulli;
  int alphabet_size_ = 0;
  std::vector<double> probs_;
  std::vector<double> log_probs_;
  std::vector<double> stationary_;
  std::vector<double> log_stationary_;
  std::vector<std::vector<double>> matrix_;
  std::vector<std::vector<double>> log_matrix_;
  std::vector<double> cum_probs_;                 // sampling tables
  std::vector<std::vector<double>> cum_matrix_;

  bool has_exact_ = false;
  std::vector<Rational> rprobs_;
  std::vector<Rational> rstationary_;
  std::vector<std::vector<Rational>> rmatrix_;

  MassStructure structure_ = MassStructure::General;
  std::vector<int> symbol_group_;
  std::vector<double> group_log_prob_;
  double telescope_decay_ = 0.0;                  // per-step log-mass decay
  std::vector<double> telescope_potential_;       // potential per symbol
};

}  // namespace nbe
