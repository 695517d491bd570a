#include "tautheight/calculus/generators.hpp"

#include "tautheight/errors.hpp"

namespace tautheight::calculus {

std::string Generator::name() const {
  switch (kind) {
    case GeneratorKind::Omega:
      return "Omega(" + std::to_string(i) + ")";
    case GeneratorKind::Delta:
      return "Delta(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case GeneratorKind::Beta:
      return "Beta(" + std::to_string(i) + ")";
  }
  return {};
}

GeneratorSystem GeneratorSystem::from_multi_index(const std::vector<long>& m, int genus) {
  if (genus < 2) throw InputError("genus must be at least 2, got " + std::to_string(genus));
  if (m.size() > static_cast<std::size_t>(genus)) {
    throw InputError("length of m (" + std::to_string(m.size()) + ") exceeds genus " +
                     std::to_string(genus));
  }
  for (long mi : m) {
    if (mi == 0) throw InputError("entries of m must be nonzero");
  }

  GeneratorSystem system;
  system.genus_ = genus;
  system.vertex_count_ = static_cast<int>(m.size());
  system.m_ = m;
  for (long mi : m) system.d_ += mi;

  const int r = system.vertex_count_;
  auto push = [&](Generator gen, Rational w) {
    if (w != 0) system.generators_.push_back({gen, std::move(w)});
  };
  for (int i = 1; i <= r; ++i) push(Generator::omega(i), Rational(m[i - 1]) * m[i - 1]);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      push(Generator::delta(i, j), Rational(-2) * m[i - 1] * m[j - 1]);
    }
  }
  for (int i = 1; i <= r; ++i) push(Generator::beta(i), Rational(system.d_) * m[i - 1]);
  return system;
}

GeneratorSystem GeneratorSystem::custom(int genus, int vertex_count,
                                        std::vector<WeightedGenerator> generators) {
  if (genus < 2) throw InputError("genus must be at least 2, got " + std::to_string(genus));
  GeneratorSystem system;
  system.genus_ = genus;
  system.vertex_count_ = vertex_count;
  for (auto& wg : generators) {
    const auto& gen = wg.generator;
    const bool in_range = gen.i >= 1 && gen.i <= vertex_count &&
                          (gen.kind != GeneratorKind::Delta ||
                           (gen.j > gen.i && gen.j <= vertex_count));
    if (!in_range) throw InputError("generator " + gen.name() + " outside vertex range");
    if (wg.weight != 0) system.generators_.push_back(std::move(wg));
  }
  return system;
}

Rational GeneratorSystem::weight(const Generator& generator) const {
  for (const auto& wg : generators_) {
    if (wg.generator == generator) return wg.weight;
  }
  return 0;
}

}  // namespace tautheight::calculus
