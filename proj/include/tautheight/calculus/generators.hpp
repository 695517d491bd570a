#ifndef TAUTHEIGHT_CALCULUS_GENERATORS_HPP
#define TAUTHEIGHT_CALCULUS_GENERATORS_HPP

#include <string>
#include <vector>

#include "tautheight/rational.hpp"

namespace tautheight::calculus {

enum class GeneratorKind { Omega, Delta, Beta };

/// omega_i, Delta_ij (i < j) or beta_i, pulled back to X^r along the
/// coordinate projections. Indices are 1-based.
struct Generator {
  GeneratorKind kind;
  int i;
  int j = 0;  // only meaningful for Delta

  static Generator omega(int i) { return {GeneratorKind::Omega, i, 0}; }
  static Generator delta(int i, int j) { return {GeneratorKind::Delta, i, j}; }
  static Generator beta(int i) { return {GeneratorKind::Beta, i, 0}; }

  std::string name() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct WeightedGenerator {
  Generator generator;
  Rational weight;
};

/// The weighted generator set S(r) attached to a multi-index m and genus g.
class GeneratorSystem {
 public:
  /// omega_i -> m_i^2, Delta_ij -> -2 m_i m_j, beta_i -> d m_i with
  /// d = sum m_i. Zero-weight generators are dropped.
  ///
  /// Throws InputError unless g >= 2, len(m) <= g and every m_i != 0.
  static GeneratorSystem from_multi_index(const std::vector<long>& m, int genus);

  /// Arbitrary weights on the vertex set {1..vertex_count}; used for
  /// expansions that are not of the form (sum q(s) s)^n for some m.
  static GeneratorSystem custom(int genus, int vertex_count,
                                std::vector<WeightedGenerator> generators);

  int genus() const { return genus_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<long>& multi_index() const { return m_; }
  long degree_sum() const { return d_; }
  const std::vector<WeightedGenerator>& generators() const { return generators_; }

  /// Weight of a generator, 0 if absent.
  Rational weight(const Generator& generator) const;

 private:
  int genus_ = 2;
  int vertex_count_ = 0;
  std::vector<long> m_;
  long d_ = 0;
  std::vector<WeightedGenerator> generators_;
};

}  // namespace tautheight::calculus

#endif  // TAUTHEIGHT_CALCULUS_GENERATORS_HPP
