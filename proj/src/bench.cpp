#include "tsgcd/bench.hpp"

#include <random>
#include <stdexcept>

namespace tsgcd {

BenchProfile BenchProfile::named(const std::string& name) {
  if (name == "table1") return {name, 6, 5, 4, false};
  if (name == "table2") return {name, 6, 5, 4, true};
  if (name == "table3") return {name, 9, 8, 4, false};
  throw std::invalid_argument("unknown profile '" + name + "'");
}

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long coeff() {
    const long v = std::uniform_int_distribution<long>(10, 99)(rng_);
    return std::bernoulli_distribution(0.5)(rng_) ? -v : v;
  }

  // Dense in z_1..z_level with deg_{z_i} < degrees[i-1].
  QPoly dense(int level, const std::vector<int>& degrees) {
    if (level == 0) return QPoly::constant(0, mpq_class(coeff()));
    std::vector<QPoly> t;
    for (int i = 0; i < degrees[static_cast<std::size_t>(level - 1)]; ++i) t.push_back(dense(level - 1, degrees));
    return QPoly::from_terms(level, std::move(t));
  }

  // Degree-d polynomial in the main variable with dense coefficients in R.
  QPoly in_x(int n, int d, const std::vector<int>& degrees, bool monic) {
    std::vector<QPoly> t;
    for (int i = 0; i < d; ++i) t.push_back(dense(n, degrees));
    t.push_back(monic ? QPoly::constant(n, 1) : dense(n, degrees));
    return QPoly::from_terms(n + 1, std::move(t));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

BenchInstance make_instance(const BenchProfile& profile, const std::vector<int>& degrees, std::uint64_t seed) {
  Gen gen(seed);
  const int n = static_cast<int>(degrees.size());
  std::vector<QPoly> gens;
  for (int i = 1; i <= n; ++i) {
    if (degrees[static_cast<std::size_t>(i - 1)] < 1) throw std::invalid_argument("extension degrees must be >= 1");
    std::vector<QPoly> t;
    for (int j = 0; j < degrees[static_cast<std::size_t>(i - 1)]; ++j) t.push_back(gen.dense(i - 1, degrees));
    t.push_back(QPoly::constant(i - 1, 1));
    gens.push_back(QPoly::from_terms(i, std::move(t)));
  }
  QTset T(RationalField{}, std::move(gens));
  QPoly a = gen.in_x(n, profile.deg_a, degrees, false);
  QPoly b = gen.in_x(n, profile.deg_b, degrees, false);
  QPoly g = gen.in_x(n, profile.deg_g, degrees, profile.monic_g);
  QPoly A = mul_mod(a, g, T);
  QPoly B = mul_mod(b, g, T);
  return {std::move(T), std::move(g), std::move(A), std::move(B)};
}

BenchRow run_bench(const BenchProfile& profile, const std::vector<int>& degrees, std::uint64_t seed,
                   const CGcdOptions& options) {
  BenchInstance inst = make_instance(profile, degrees, seed);
  CGcdResult r = modular_cgcd(inst.A, inst.B, inst.tset, options);
  BenchRow row;
  row.degrees = degrees;
  row.seconds = r.stats.seconds;
  row.divide_seconds = r.stats.divide_seconds;
  row.primes = r.stats.primes_used;
  row.components = r.components.size();
  return row;
}

}  // namespace tsgcd
