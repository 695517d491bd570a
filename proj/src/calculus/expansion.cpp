#include "tautheight/calculus/expansion.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tautheight/errors.hpp"

namespace tautheight::calculus {

namespace {

void check_capacity(const GeneratorSystem& system) {
  if (system.vertex_count() > kMaxVertices) {
    throw CapacityError("expansion over " + std::to_string(system.vertex_count()) +
                        " vertices exceeds the supported maximum of " +
                        std::to_string(kMaxVertices));
  }
}

void add_generator(LoopLabelledGraph& graph, const Generator& gen) {
  switch (gen.kind) {
    case GeneratorKind::Omega:
      graph.add_loop(gen.i, LoopLabel::omega());
      break;
    case GeneratorKind::Beta:
      graph.add_loop(gen.i, LoopLabel::beta());
      break;
    case GeneratorKind::Delta:
      graph.add_edge(gen.i, gen.j);
      break;
  }
}

LoopLabelledGraph base_graph(const GeneratorSystem& system) {
  LoopLabelledGraph g;
  for (int v = 1; v <= system.vertex_count(); ++v) g.add_vertex(v);
  return g;
}

// Walks the multisets of size n, one generator index at a time.
class Walker {
 public:
  Walker(const GeneratorSystem& system, int n)
      : gens_(system.generators()), n_(n), base_(base_graph(system)), counts_(gens_.size(), 0) {
    factorials_.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) factorials_.push_back(factorial(static_cast<unsigned>(k)));
  }

  template <typename Leaf>
  void run(std::size_t start, int remaining, Leaf&& leaf) {
    if (start + 1 >= gens_.size()) {
      if (gens_.empty()) {
        if (remaining == 0) leaf(*this);
        return;
      }
      counts_[start] = remaining;
      leaf(*this);
      counts_[start] = 0;
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts_[start] = c;
      run(start + 1, remaining - c, leaf);
    }
    counts_[start] = 0;
  }

  void set_count(std::size_t index, int c) { counts_[index] = c; }

  LoopLabelledGraph& build() {
    scratch_ = base_;
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      for (int k = 0; k < counts_[s]; ++k) add_generator(scratch_, gens_[s].generator);
    }
    return scratch_;
  }

  Rational coefficient() const {
    Integer denom = 1;
    Rational weight_product = 1;
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      if (counts_[s] == 0) continue;
      denom *= factorials_[static_cast<std::size_t>(counts_[s])];
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), gens_[s].weight.get_num_mpz_t(),
                 static_cast<unsigned long>(counts_[s]));
      mpz_pow_ui(p.get_den_mpz_t(), gens_[s].weight.get_den_mpz_t(),
                 static_cast<unsigned long>(counts_[s]));
      weight_product *= p;
    }
    Rational multinomial(factorials_[static_cast<std::size_t>(n_)], denom);
    multinomial.canonicalize();
    return multinomial * weight_product;
  }

  std::size_t generator_count() const { return gens_.size(); }

 private:
  const std::vector<WeightedGenerator>& gens_;
  int n_;
  LoopLabelledGraph base_;
  LoopLabelledGraph scratch_;
  std::vector<int> counts_;
  std::vector<Integer> factorials_;
};

// Prefix (c0, c1) of counts for the first two generators; the unit of work
// handed to a thread.
struct Task {
  int c0;
  int c1;
};

template <typename Partial, typename LeafFn, typename Combine>
Partial run_partitioned(const GeneratorSystem& system, int n, const ExpansionOptions& options,
                        LeafFn leaf_fn, Combine combine) {
  const std::size_t gen_count = system.generators().size();
  if (gen_count < 3 || n == 0) {
    Walker walker(system, n);
    Partial partial{};
    walker.run(0, n, [&](Walker& w) { leaf_fn(w, partial); });
    return partial;
  }

  std::vector<Task> tasks;
  for (int c0 = n; c0 >= 0; --c0) {
    for (int c1 = n - c0; c1 >= 0; --c1) tasks.push_back({c0, c1});
  }
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));

  std::vector<Partial> partials(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    Walker walker(system, n);
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      walker.set_count(0, tasks[t].c0);
      walker.set_count(1, tasks[t].c1);
      walker.run(2, n - tasks[t].c0 - tasks[t].c1,
                 [&](Walker& w) { leaf_fn(w, partials[id]); });
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  Partial total{};
  for (auto& p : partials) combine(total, p);
  return total;
}

}  // namespace

void for_each_term(const GeneratorSystem& system, int n,
                   const std::function<void(const LoopLabelledGraph&, const Rational&)>& visit) {
  if (n < 0) throw InputError("expansion power must be nonnegative");
  Walker walker(system, n);
  walker.run(0, n, [&](Walker& w) {
    const Rational coeff = w.coefficient();
    visit(w.build(), coeff);
  });
}

std::vector<ExpansionTerm> expand(const GeneratorSystem& system, int n) {
  std::vector<ExpansionTerm> out;
  for_each_term(system, n, [&](const LoopLabelledGraph& g, const Rational& c) {
    out.push_back({g, c});
  });
  return out;
}

BasisSums expand_and_evaluate_basis(const GeneratorSystem& system, int n,
                                    const ExpansionOptions& options) {
  check_capacity(system);
  if (n < 0) throw InputError("expansion power must be nonnegative");
  if (system.vertex_count() - n != -1) {
    throw InputError("arithmetic expansion needs n = r + 1");
  }
  const int genus = system.genus();
  using Basis = detail::FactoredValue::Basis;
  return run_partitioned<BasisSums>(
      system, n, options,
      [genus](Walker& walker, BasisSums& acc) {
        const auto value = detail::evaluate_factored(walker.build(), genus);
        if (value.basis == Basis::Zero) return;
        const Rational term = walker.coefficient() * Rational(value.scalar);
        switch (value.basis) {
          case Basis::W:
            acc.w += term;
            break;
          case Basis::B:
            acc.b += term;
            break;
          case Basis::T:
            acc.t += term;
            break;
          case Basis::Zero:
            break;
        }
      },
      [](BasisSums& total, const BasisSums& p) {
        total.w += p.w;
        total.b += p.b;
        total.t += p.t;
      });
}

IntersectionVector expand_and_evaluate(const GeneratorSystem& system, int n,
                                       const ExpansionOptions& options) {
  const BasisSums sum = expand_and_evaluate_basis(system, n, options);
  IntersectionVector out{sum.w, 0, sum.b};
  out += sum.t * IntersectionVector::triple_diagonal();
  return out;
}

Integer expand_and_evaluate_geometric(const GeneratorSystem& system, int n,
                                      const ExpansionOptions& options) {
  check_capacity(system);
  if (n < 0) throw InputError("expansion power must be nonnegative");
  if (system.vertex_count() != n) throw InputError("geometric expansion needs n = r");
  const int genus = system.genus();
  const Rational total = run_partitioned<Rational>(
      system, n, options,
      [genus](Walker& walker, Rational& acc) {
        const Integer value = detail::evaluate_geometric_in_place(walker.build(), genus);
        if (value != 0) acc += walker.coefficient() * Rational(value);
      },
      [](Rational& total, const Rational& p) { total += p; });
  if (total.get_den() != 1) throw InternalError("geometric degree is not an integer");
  return total.get_num();
}

IntersectionVector arithmetic_intersection(const std::vector<long>& m, int genus,
                                           const ExpansionOptions& options) {
  const auto system = GeneratorSystem::from_multi_index(m, genus);
  return expand_and_evaluate(system, system.vertex_count() + 1, options);
}

Integer geometric_degree(const std::vector<long>& m, int genus, const ExpansionOptions& options) {
  const auto system = GeneratorSystem::from_multi_index(m, genus);
  Integer degree = expand_and_evaluate_geometric(system, system.vertex_count(), options);
  if (degree <= 0) {
    throw InternalError("geometric degree " + degree.get_str() +
                        " is not positive; f should be generically finite");
  }
  return degree;
}

}  // namespace tautheight::calculus
