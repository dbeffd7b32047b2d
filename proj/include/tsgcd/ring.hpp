#pragma once

// Arithmetic in R = k[z_1..z_n]/<T> and in R[x].
//
// Division by a monic polynomial uses delayed reduction: every coefficient of
// the quotient and remainder is assembled as an unreduced sum of products over
// k and reduced modulo T_{L-1} exactly once.  For reduced dense operands a
// product in R then costs exactly mul_cost_bound() field multiplications.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tsgcd/poly.hpp"
#include "tsgcd/tset.hpp"

namespace tsgcd {

class NonMonicDivisor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
struct DivRem {
  Poly<F> quotient;
  Poly<F> remainder;
};

template <class F>
Poly<F> reduce(const Poly<F>& a, const TowerOf<F>& T);

namespace detail {

// c = q*b + r with deg r < deg b, coefficients reduced modulo `coeffs`.
// b must be monic.
template <class F>
DivRem<F> divide_monic(const Poly<F>& c, const Poly<F>& b, const TowerOf<F>& coeffs) {
  const int level = c.level();
  const F& f = coeffs.field();
  if (c.is_zero()) return {Poly<F>(level), Poly<F>(level)};
  const int m = c.degree();
  const int d = b.degree();
  const int nq = std::max(0, m - d + 1);
  auto bt = b.terms();

  std::vector<Poly<F>> q(static_cast<std::size_t>(nq), Poly<F>(level - 1));
  for (int s = 0; s < nq; ++s) {
    const int idx = m - s;
    const int qi = m - d - s;
    Poly<F> acc = c.coeff(idx);
    for (int i = qi + 1; i <= std::min(nq - 1, idx); ++i) {
      mul_add_into(f, acc, q[static_cast<std::size_t>(i)], bt[static_cast<std::size_t>(idx - i)], true);
    }
    q[static_cast<std::size_t>(qi)] = reduce(acc, coeffs);
  }

  const int nr = std::min(d, m + 1);
  std::vector<Poly<F>> r(static_cast<std::size_t>(nr), Poly<F>(level - 1));
  for (int k = 0; k < nr; ++k) {
    Poly<F> acc = c.coeff(k);
    for (int i = std::max(0, k - (d - 1)); i <= std::min(k, nq - 1); ++i) {
      mul_add_into(f, acc, q[static_cast<std::size_t>(i)], bt[static_cast<std::size_t>(k - i)], true);
    }
    r[static_cast<std::size_t>(k)] = reduce(acc, coeffs);
  }
  return {Poly<F>::from_terms(level, std::move(q)), Poly<F>::from_terms(level, std::move(r))};
}

template <class F>
Tower<F> coefficient_tower(const Tower<F>& T, int level) {
  return T.prefix(std::min(level - 1, T.size()));
}

}  // namespace detail

/// Normal form of `a` modulo <T>: deg_{z_i} < mdeg(t_i) for every i.
template <class F>
Poly<F> reduce(const Poly<F>& a, const TowerOf<F>& T) {
  const int level = a.level();
  if (level == 0 || a.is_zero()) return a;
  if (level > T.size()) {
    Poly<F> r(level);
    auto& t = r.raw_terms();
    t.reserve(a.terms().size());
    for (const auto& ti : a.terms()) t.push_back(reduce(ti, T));
    r.normalize();
    return r;
  }
  return detail::divide_monic(a, T.gen(level), T.prefix(level - 1)).remainder;
}

/// reduce(a*b, T).  The plain product is formed first and reduced once.
template <class F>
Poly<F> mul_mod(const Poly<F>& a, const Poly<F>& b, const TowerOf<F>& T) {
  if (a.level() != b.level()) throw std::invalid_argument("mul_mod: level mismatch");
  return reduce(mul(T.field(), a, b), T);
}

/// Multiplies every coefficient of `a` (level L) by `c` (level L-1) modulo T.
template <class F>
Poly<F> scale_mod(const Poly<F>& a, const Poly<F>& c, const TowerOf<F>& T) {
  if (c.level() + 1 != a.level()) throw std::invalid_argument("scale_mod: level mismatch");
  Poly<F> r(a.level());
  auto& t = r.raw_terms();
  t.reserve(a.terms().size());
  for (const auto& ai : a.terms()) t.push_back(mul_mod(ai, c, T));
  r.normalize();
  return r;
}

/// Quotient and remainder of a by a monic b in the level variable of both,
/// with coefficients reduced modulo T.
template <class F>
DivRem<F> div_rem(const Poly<F>& a, const Poly<F>& b, const TowerOf<F>& T) {
  if (a.level() != b.level()) throw std::invalid_argument("div_rem: level mismatch");
  if (b.level() == 0) throw std::invalid_argument("div_rem: divisor must have positive level");
  if (b.is_zero()) throw NonMonicDivisor("div_rem: division by zero");
  if (!b.is_monic()) throw NonMonicDivisor("div_rem: divisor is not monic");
  return detail::divide_monic(a, b, detail::coefficient_tower(T, a.level()));
}

/// Degrees d_1..d_n of a triangular set and their partial products.
struct MulCostModel {
  std::vector<std::uint64_t> degrees;

  /// delta_0..delta_n with delta_0 = 1.
  std::vector<std::uint64_t> partial_products() const;
};

/// Exact field-multiplication count of mul_mod on dense reduced operands:
/// delta_n^2 + D(n), D(k) = (2 d_k - 1) D(k-1) + d_k (d_k - 1) delta_{k-1}^2.
std::uint64_t mul_cost_bound(const MulCostModel& model);

template <class F>
MulCostModel cost_model(const TriangularSet<F>& T) {
  MulCostModel m;
  for (int k = 1; k <= T.size(); ++k) m.degrees.push_back(static_cast<std::uint64_t>(T.mdeg(k)));
  return m;
}

}  // namespace tsgcd
