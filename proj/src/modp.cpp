#include "tsgcd/modp.hpp"

#include <string>

namespace tsgcd {

PPoly project_mod_p(const QPoly& a, std::uint32_t p) {
  const PrimeField f(p);
  const mpz_class P(static_cast<unsigned long>(p));
  return map_coeffs<PrimeField>(a, [&](const mpq_class& c) -> std::uint32_t {
    mpz_class den = c.get_den() % P;
    if (den == 0) throw BadPrime(std::to_string(p) + " divides a denominator");
    mpz_class num = c.get_num() % P;
    if (num < 0) num += P;
    return f.mul(static_cast<std::uint32_t>(num.get_ui()), f.inv(static_cast<std::uint32_t>(den.get_ui())));
  });
}

PTset project_mod_p(const QTset& T, std::uint32_t p) {
  std::vector<PPoly> gens;
  gens.reserve(static_cast<std::size_t>(T.size()));
  for (const auto& t : T.gens()) gens.push_back(project_mod_p(t, p));
  return PTset(PrimeField(p), std::move(gens));
}

QPoly lift_residues(const PPoly& a) {
  return map_coeffs<RationalField>(a, [](std::uint32_t c) { return mpq_class(static_cast<unsigned long>(c)); });
}

RadicalVerdict is_radical(const PTset& Tp) {
  const PrimeField& f = Tp.field();
  for (int i = 1; i <= Tp.size(); ++i) {
    const PPoly& t = Tp.gen(i);
    auto g = monic_euclidean_cgcd(t, derivative(f, t), Tp.prefix(i - 1));
    if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&g)) return *zd;
    if (std::get<Gcd<PrimeField>>(g).value.degree() != 0) return false;
  }
  return true;
}

RadicalVerdict is_radical_prime(const QTset& T, std::uint32_t p) { return is_radical(project_mod_p(T, p)); }

}  // namespace tsgcd
