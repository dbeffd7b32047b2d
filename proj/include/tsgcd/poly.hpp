#pragma once

// Recursive dense polynomials.
//
// A polynomial at level L > 0 is a dense list of coefficients, each a
// polynomial at level L-1, indexed by the exponent of the level-L variable.
// Level 0 holds a single field element.  The variable order is
// z_1 < z_2 < ... < z_n < x, so with n algebraic variables, level i is z_i
// and level n+1 is x.  Every level has one canonical zero (an empty
// coefficient list, or the zero element at level 0) and the top coefficient
// of a nonzero polynomial is always nonzero, so equality is structural.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsgcd/field.hpp"

namespace tsgcd {

template <class F>
class Poly {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  /// The zero constant.
  Poly() = default;
  /// The zero polynomial at `level`.
  explicit Poly(int level) : level_(level) {
    if (level < 0) throw std::invalid_argument("negative polynomial level");
  }

  /// c as a polynomial at `level` (constant in every variable).
  static Poly constant(int level, value_type c) {
    Poly p;
    p.value_ = std::move(c);
    if (p.value_ == 0) return Poly(level);
    for (int l = 1; l <= level; ++l) {
      Poly w(l);
      w.terms_.push_back(std::move(p));
      p = std::move(w);
    }
    return p;
  }

  /// Builds a level-`level` polynomial from coefficient polynomials at
  /// level-1, dropping trailing zeros.
  static Poly from_terms(int level, std::vector<Poly> terms) {
    if (level < 1) throw std::invalid_argument("from_terms needs level >= 1");
    for (const auto& t : terms) {
      if (t.level() != level - 1) throw std::invalid_argument("coefficient level mismatch");
    }
    Poly p(level);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  int level() const noexcept { return level_; }
  bool is_zero() const noexcept { return level_ == 0 ? value_ == 0 : terms_.empty(); }

  /// Degree in the level variable; -1 for zero.
  int degree() const noexcept {
    if (level_ == 0) return value_ == 0 ? -1 : 0;
    return static_cast<int>(terms_.size()) - 1;
  }

  const value_type& value() const {
    if (level_ != 0) throw std::logic_error("value() on non-constant level");
    return value_;
  }

  std::span<const Poly> terms() const noexcept { return terms_; }
  const Poly& term(std::size_t i) const { return terms_.at(i); }

  /// Coefficient of the level variable to the power i (zero when out of range).
  Poly coeff(int i) const {
    if (level_ == 0) throw std::logic_error("coeff() on level 0");
    if (i < 0 || i >= static_cast<int>(terms_.size())) return Poly(level_ - 1);
    return terms_[static_cast<std::size_t>(i)];
  }

  const Poly& lc() const {
    if (level_ == 0 || terms_.empty()) throw std::logic_error("lc() of zero or level-0 polynomial");
    return terms_.back();
  }

  /// True iff this is a constant (possibly zero) in every variable.
  bool is_constant() const noexcept {
    if (level_ == 0) return true;
    if (terms_.size() > 1) return false;
    return terms_.empty() || terms_.front().is_constant();
  }

  /// The constant value of a constant polynomial.
  const value_type& constant_value() const {
    const Poly* p = this;
    while (p->level_ > 0) {
      if (p->terms_.size() != 1) throw std::logic_error("constant_value() of a non-constant or zero polynomial");
      p = &p->terms_.front();
    }
    return p->value_;
  }

  bool is_one() const noexcept { return !is_zero() && is_constant() && constant_value() == 1; }

  /// Monic in the level variable: the top coefficient is the constant 1.
  bool is_monic() const noexcept {
    if (level_ == 0) return value_ == 1;
    return !terms_.empty() && terms_.back().is_one();
  }

  std::vector<Poly>& raw_terms() noexcept { return terms_; }
  value_type& raw_value() noexcept { return value_; }

  /// Strips zero coefficients from the top of this node.
  void normalize() {
    while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.level_ != b.level_) return false;
    if (a.level_ == 0) return a.value_ == b.value_;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i] == b.terms_[i])) return false;
    }
    return true;
  }

 private:
  int level_ = 0;
  value_type value_{};
  std::vector<Poly> terms_;
};

using QPoly = Poly<RationalField>;
using PPoly = Poly<PrimeField>;
using ZPoly = Poly<IntegerRing>;

/// Wraps `a` as a constant in the variables above its level.
template <class F>
Poly<F> raise_level(Poly<F> a, int level) {
  if (level < a.level()) throw std::invalid_argument("raise_level to a lower level");
  while (a.level() < level) {
    Poly<F> w(a.level() + 1);
    if (!a.is_zero()) w.raw_terms().push_back(std::move(a));
    a = std::move(w);
  }
  return a;
}

/// Drops variables above `level`; they must not occur in `a`.
template <class F>
Poly<F> lower_level(Poly<F> a, int level) {
  while (a.level() > level) {
    if (a.degree() > 0) throw std::invalid_argument("lower_level: variable at level " + std::to_string(a.level()) + " occurs");
    a = a.is_zero() ? Poly<F>(a.level() - 1) : Poly<F>(a.term(0));
  }
  return a;
}

/// The variable at `var` (1-based) as a polynomial at `level`.
template <class F>
Poly<F> variable(const F& f, int level, int var) {
  if (var < 1 || var > level) throw std::invalid_argument("variable index out of range");
  Poly<F> z = Poly<F>::from_terms(var, {Poly<F>(var - 1), Poly<F>::constant(var - 1, f.one())});
  return raise_level(std::move(z), level);
}

template <class F>
void add_into(const F& f, Poly<F>& acc, const Poly<F>& b, bool negate = false) {
  if (acc.level() != b.level()) throw std::invalid_argument("add: level mismatch");
  if (b.is_zero()) return;
  if (b.level() == 0) {
    acc.raw_value() = negate ? f.sub(acc.raw_value(), b.value()) : f.add(acc.raw_value(), b.value());
    return;
  }
  auto& t = acc.raw_terms();
  auto bt = b.terms();
  if (t.size() < bt.size()) t.resize(bt.size(), Poly<F>(b.level() - 1));
  for (std::size_t i = 0; i < bt.size(); ++i) add_into(f, t[i], bt[i], negate);
  acc.normalize();
}

template <class F>
Poly<F> add(const F& f, Poly<F> a, const Poly<F>& b) {
  add_into(f, a, b);
  return a;
}

template <class F>
Poly<F> sub(const F& f, Poly<F> a, const Poly<F>& b) {
  add_into(f, a, b, true);
  return a;
}

template <class F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  return sub(f, Poly<F>(a.level()), a);
}

/// acc += a*b (or acc -= a*b) without any reduction.  Each pair of nonzero
/// leaves costs one field multiplication.
template <class F>
void mul_add_into(const F& f, Poly<F>& acc, const Poly<F>& a, const Poly<F>& b, bool subtract = false) {
  if (a.level() != b.level() || acc.level() != a.level()) throw std::invalid_argument("mul: level mismatch");
  if (a.is_zero() || b.is_zero()) return;
  if (a.level() == 0) {
    auto prod = f.mul(a.value(), b.value());
    acc.raw_value() = subtract ? f.sub(acc.raw_value(), prod) : f.add(acc.raw_value(), prod);
    return;
  }
  auto at = a.terms();
  auto bt = b.terms();
  auto& t = acc.raw_terms();
  const std::size_t need = at.size() + bt.size() - 1;
  if (t.size() < need) t.resize(need, Poly<F>(a.level() - 1));
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (at[i].is_zero()) continue;
    for (std::size_t j = 0; j < bt.size(); ++j) {
      if (bt[j].is_zero()) continue;
      mul_add_into(f, t[i + j], at[i], bt[j], subtract);
    }
  }
  acc.normalize();
}

/// Plain product, no reduction.
template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(a.level());
  mul_add_into(f, r, a, b);
  return r;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::value_type& c) {
  if (a.is_zero()) return a;
  if (a.level() == 0) return Poly<F>::constant(0, f.mul(a.value(), c));
  std::vector<Poly<F>> t;
  t.reserve(a.terms().size());
  for (const auto& ti : a.terms()) t.push_back(scale(f, ti, c));
  return Poly<F>::from_terms(a.level(), std::move(t));
}

template <class F>
Poly<F> pow(const F& f, const Poly<F>& a, unsigned e) {
  Poly<F> r = Poly<F>::constant(a.level(), f.one());
  Poly<F> base = a;
  while (e != 0) {
    if (e & 1u) r = mul(f, r, base);
    e >>= 1;
    if (e != 0) base = mul(f, base, base);
  }
  return r;
}

/// Derivative in the level variable.
template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.level() == 0) return Poly<F>(0);
  std::vector<Poly<F>> t;
  for (std::size_t i = 1; i < a.terms().size(); ++i) {
    t.push_back(scale(f, a.terms()[i], f.from_int(static_cast<long>(i))));
  }
  return Poly<F>::from_terms(a.level(), std::move(t));
}

/// x^k * a in the level variable.
template <class F>
Poly<F> shift(const Poly<F>& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<Poly<F>> t(static_cast<std::size_t>(k), Poly<F>(a.level() - 1));
  t.insert(t.end(), a.terms().begin(), a.terms().end());
  return Poly<F>::from_terms(a.level(), std::move(t));
}

/// Degree in the variable at level `var`; -1 for zero.
template <class F>
int degree_in(const Poly<F>& a, int var) {
  if (a.is_zero()) return -1;
  if (a.level() < var) return 0;
  if (a.level() == var) return a.degree();
  int d = -1;
  for (const auto& t : a.terms()) d = std::max(d, degree_in(t, var));
  return d;
}

/// Applies `fn` to every leaf value, converting to another coefficient domain.
template <class G, class F, class Fn>
Poly<G> map_coeffs(const Poly<F>& a, Fn&& fn) {
  if (a.level() == 0) return Poly<G>::constant(0, fn(a.value()));
  Poly<G> r(a.level());
  auto& t = r.raw_terms();
  t.reserve(a.terms().size());
  for (const auto& ti : a.terms()) t.push_back(map_coeffs<G>(ti, fn));
  r.normalize();
  return r;
}

template <class F, class Fn>
void for_each_value(const Poly<F>& a, Fn&& fn) {
  if (a.level() == 0) {
    if (!a.is_zero()) fn(a.value());
    return;
  }
  for (const auto& t : a.terms()) for_each_value(t, fn);
}

/// Number of stored leaves (zero leaves inside the dense range included).
template <class F>
std::size_t leaf_count(const Poly<F>& a) {
  if (a.level() == 0) return 1;
  std::size_t n = 0;
  for (const auto& t : a.terms()) n += leaf_count(t);
  return n;
}

}  // namespace tsgcd
