#pragma once

// Reference implementations for tests: a plain Euclidean c-gcd over Q that
// splits T whenever it meets a zero-divisor, and iterated resultants.

#include <stdexcept>
#include <utility>
#include <vector>

#include "tsgcd/cgcd.hpp"
#include "tsgcd/modp.hpp"

namespace tsgcd::oracle {

class NotExact : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a / b in k[z_1..z_L], which must be exact.
template <class F>
Poly<F> exact_div(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw NotExact("division by zero");
  if (a.level() == 0) return Poly<F>::constant(0, f.mul(a.value(), f.inv(b.value())));
  const int level = a.level();
  Poly<F> r = a;
  std::vector<Poly<F>> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), Poly<F>(level - 1));
  while (!r.is_zero()) {
    const int k = r.degree() - b.degree();
    if (k < 0) throw NotExact("inexact division");
    Poly<F> c = exact_div(f, r.lc(), b.lc());
    Poly<F> term = shift(Poly<F>::from_terms(level, {c}), k);
    r = sub(f, r, mul(f, term, b));
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  return Poly<F>::from_terms(level, std::move(q));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, in the level variable.
template <class F>
Poly<F> prem(const F& f, Poly<F> a, const Poly<F>& b) {
  const int level = a.level();
  const Poly<F> lb = raise_level(b.lc(), level);
  int e = a.degree() - b.degree() + 1;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Poly<F> term = shift(Poly<F>::from_terms(level, {a.lc()}), a.degree() - b.degree());
    a = sub(f, mul(f, lb, a), mul(f, term, b));
    --e;
  }
  for (; e > 0; --e) a = mul(f, lb, a);
  return a;
}

template <class F>
Poly<F> pow_poly(const F& f, const Poly<F>& a, int e) {
  return pow(f, a, static_cast<unsigned>(e));
}

/// res_{z_L}(a, b) over k[z_1..z_{L-1}] by the subresultant PRS.
template <class F>
Poly<F> resultant(const F& f, Poly<F> A, Poly<F> B) {
  const int level = A.level();
  if (A.is_zero() || B.is_zero()) return Poly<F>(level - 1);
  Poly<F> s = Poly<F>::constant(level - 1, f.one());
  if (A.degree() < B.degree()) {
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = neg(f, s);
    std::swap(A, B);
  }
  if (B.degree() == 0) return mul(f, s, pow_poly(f, B.lc(), A.degree()));
  Poly<F> g = Poly<F>::constant(level - 1, f.one());
  Poly<F> h = g;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = neg(f, s);
    Poly<F> R = prem(f, A, B);
    A = std::move(B);
    if (R.is_zero()) return Poly<F>(level - 1);
    B = exact_div(f, R, raise_level(mul(f, g, pow_poly(f, h, delta)), level));
    g = A.lc();
    if (delta > 0) h = exact_div(f, pow_poly(f, g, delta), pow_poly(f, h, delta - 1));
    if (B.degree() == 0) break;
  }
  const int m = A.degree();
  Poly<F> r = exact_div(f, pow_poly(f, B.lc(), m), pow_poly(f, h, m - 1));
  return mul(f, s, r);
}

/// det of the Sylvester matrix of a and b in the level variable, by Laplace
/// expansion.  Only meant for small degrees.
template <class F>
Poly<F> sylvester_resultant(const F& f, const Poly<F>& a, const Poly<F>& b) {
  const int level = a.level();
  const int m = a.degree();
  const int n = b.degree();
  if (m < 0 || n < 0) return Poly<F>(level - 1);
  const int N = m + n;
  if (N == 0) return Poly<F>::constant(level - 1, f.one());
  using Row = std::vector<Poly<F>>;
  std::vector<Row> M(static_cast<std::size_t>(N), Row(static_cast<std::size_t>(N), Poly<F>(level - 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
  }
  std::vector<int> cols(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) cols[j] = j;
  auto det = [&](auto&& self, int row, std::vector<int>& rest) -> Poly<F> {
    if (rest.empty()) return Poly<F>::constant(level - 1, f.one());
    Poly<F> acc(level - 1);
    for (std::size_t j = 0; j < rest.size(); ++j) {
      const Poly<F>& e = M[row][rest[j]];
      if (e.is_zero()) continue;
      std::vector<int> minor = rest;
      minor.erase(minor.begin() + static_cast<long>(j));
      Poly<F> term = mul(f, e, self(self, row + 1, minor));
      add_into(f, acc, term, j % 2 == 1);
    }
    return acc;
  };
  return det(det, 0, cols);
}

/// iterres(f, T) with reduction modulo T_{k-1} after each resultant.
template <class F>
typename F::value_type iterres(const Poly<F>& g, const TowerOf<F>& T) {
  const F& f = T.field();
  if (g.level() > T.size()) throw std::invalid_argument("iterres: element above the tower");
  Poly<F> r = raise_level(reduce(g, T), T.size());
  for (int k = T.size(); k >= 1; --k) {
    r = reduce(resultant(f, r, T.gen(k)), T.prefix(k - 1));
  }
  return r.value();
}

template <class F>
bool is_zero_divisor(const Poly<F>& g, const TowerOf<F>& T) {
  if (reduce(g, T.prefix(std::min(g.level(), T.size()))).is_zero()) throw std::invalid_argument("zero is excluded");
  return T.field().is_zero(iterres(g, T));
}

/// Euclidean c-gcd over Q.  A zero-divisor w at level k splits t_k into w and
/// t_k / w and the computation restarts on both parts.
CGcdResult euclid_q_cgcd(const QPoly& a, const QPoly& b, const QTset& T);

/// Radicality over Q: gcd(t_i, t_i') = 1 over every component of T_{i-1}.
bool is_radical_q(const QTset& T);

}  // namespace tsgcd::oracle
