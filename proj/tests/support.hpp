#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tsgcd/cgcd.hpp"
#include "tsgcd/oracle.hpp"
#include "tsgcd/text.hpp"

namespace tsgcd::testing {

/// Parses in the standard variables z1..zn, x and drops to `level`.
inline QPoly poly(const std::string& s, int n, int level) {
  return lower_level(parse_poly(s, VarContext::standard(n)), level);
}

/// Parses a polynomial in x over z1..zn.
inline QPoly xpoly(const std::string& s, int n) { return parse_poly(s, VarContext::standard(n)); }

inline QTset tset(const std::vector<std::string>& gens) {
  std::string text = "vars:";
  for (std::size_t i = 1; i <= gens.size(); ++i) text += " z" + std::to_string(i);
  text += "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) text += "t" + std::to_string(i + 1) + ": " + gens[i] + "\n";
  return parse_tset(text).tset;
}

inline std::string str(const QPoly& a, int n) {
  return format_poly(raise_level(a, n + 1), VarContext::standard(n));
}

inline PPoly ppoly(const std::string& s, int n, int level, std::uint32_t p) {
  return project_mod_p(poly(s, n, level), p);
}

/// Symmetric residues, for printing images.
inline QPoly symmetric(const PPoly& a, std::uint32_t p) {
  return map_coeffs<RationalField>(a, [p](std::uint32_t c) {
    return c > p / 2 ? mpq_class(-static_cast<long>(p - c)) : mpq_class(static_cast<unsigned long>(c));
  });
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  long nonzero(long h) {
    long v = range(1, h);
    return coin() ? -v : v;
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// Random element with deg_{z_i} < degs[i-1]; `dense` forces every leaf nonzero.
template <class F>
Poly<F> random_element(const F& f, Rng& rng, int level, const std::vector<int>& degs, long height, bool dense) {
  if (level == 0) {
    const long v = dense ? rng.nonzero(height) : rng.range(-height, height);
    return Poly<F>::constant(0, f.from_int(v));
  }
  std::vector<Poly<F>> t;
  for (int i = 0; i < degs[static_cast<std::size_t>(level - 1)]; ++i) {
    t.push_back(random_element(f, rng, level - 1, degs, height, dense));
  }
  return Poly<F>::from_terms(level, std::move(t));
}

/// Random triangular set with given main degrees, generic coefficients.
template <class F>
TriangularSet<F> random_tset(const F& f, Rng& rng, const std::vector<int>& degs, long height) {
  std::vector<Poly<F>> gens;
  for (int i = 1; i <= static_cast<int>(degs.size()); ++i) {
    std::vector<Poly<F>> t;
    for (int j = 0; j < degs[static_cast<std::size_t>(i - 1)]; ++j) {
      t.push_back(random_element(f, rng, i - 1, degs, height, false));
    }
    t.push_back(Poly<F>::constant(i - 1, f.one()));
    gens.push_back(Poly<F>::from_terms(i, std::move(t)));
  }
  return TriangularSet<F>(f, std::move(gens));
}

/// Random polynomial of degree d in the main variable over R.
template <class F>
Poly<F> random_x(const F& f, Rng& rng, int n, int d, const std::vector<int>& degs, long height, bool monic) {
  std::vector<Poly<F>> t;
  for (int i = 0; i < d; ++i) t.push_back(random_element(f, rng, n, degs, height, false));
  Poly<F> top = monic ? Poly<F>::constant(n, f.one()) : random_element(f, rng, n, degs, height, false);
  if (top.is_zero()) top = Poly<F>::constant(n, f.one());
  t.push_back(std::move(top));
  return Poly<F>::from_terms(n + 1, std::move(t));
}

/// Radical-by-construction T with n <= 2, d_i <= 3, as described by the
/// generator: t1 a product of distinct factors over Q, t2 a product of
/// distinct z2 - s_j(z1).
inline QTset random_radical_tset(Rng& rng, int n) {
  const int d1 = static_cast<int>(rng.range(1, 3));
  const int n1 = 1;
  QPoly t1;
  for (;;) {
    std::vector<std::string> factors;
    int left = d1;
    std::vector<long> roots;
    while (left > 0) {
      if (left >= 2 && rng.coin(0.4)) {
        const long k = rng.range(1, 5);
        factors.push_back("(z1^2 + " + std::to_string(k) + ")");
        left -= 2;
      } else {
        long c = rng.range(-4, 4);
        bool dup = false;
        for (long r : roots) dup = dup || r == c;
        if (dup) continue;
        roots.push_back(c);
        factors.push_back("(z1 - (" + std::to_string(c) + "))");
        left -= 1;
      }
    }
    std::string s = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) s += "*" + factors[i];
    t1 = poly(s, n1, 1);
    QTset T1(RationalField{}, {t1});
    if (oracle::is_radical_q(T1)) break;
  }
  if (n == 1) return QTset(RationalField{}, {t1});
  const QTset T1(RationalField{}, {t1});
  for (;;) {
    const int d2 = static_cast<int>(rng.range(1, 3));
    QPoly t2 = QPoly::constant(2, 1);
    for (int j = 0; j < d2; ++j) {
      std::vector<QPoly> s;
      for (int i = 0; i < d1; ++i) s.push_back(QPoly::constant(0, mpq_class(rng.range(-3, 3))));
      QPoly sj = QPoly::from_terms(1, std::move(s));
      QPoly lin = QPoly::from_terms(2, {neg(RationalField{}, sj), QPoly::constant(1, 1)});
      t2 = mul_mod(t2, lin, T1);
    }
    QTset T(RationalField{}, {t1, t2});
    if (oracle::is_radical_q(T)) return T;
  }
}

inline std::vector<std::string> lines(const CGcdResult& r, int n) {
  std::vector<std::string> out;
  for (const auto& c : r.components) {
    std::string s;
    for (const auto& t : c.tset.gens()) s += str(t, n) + "; ";
    out.push_back(s + "=> " + str(c.gcd, n));
  }
  return out;
}

}  // namespace tsgcd::testing
