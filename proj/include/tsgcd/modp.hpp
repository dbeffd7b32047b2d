#pragma once

// Inversion and monic Euclidean algorithms in R = k[z_1..z_n]/<T> and R[x].
//
// Every routine either completes or reports the first zero-divisor met while
// inverting a leading coefficient.  Inversion of u at level k runs the monic
// extended Euclidean algorithm on (t_k, u) over R_{k-1}, recursively inverting
// leading coefficients, so a reported witness is always monic in its main
// variable and equal to gcd(u, t_k) modulo T_{k-1}.  The algorithms are generic
// in the coefficient field; they run over Z_p inside the modular algorithm and
// over Q for direct inversion.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "tsgcd/poly.hpp"
#include "tsgcd/ring.hpp"
#include "tsgcd/tset.hpp"

namespace tsgcd {

/// A monic zero-divisor modulo T_level, main variable z_level.
template <class F>
struct ZdSignal {
  Poly<F> witness;
  int level = 0;
};

template <class F>
struct Unit {
  Poly<F> value;
};

template <class F>
struct Gcd {
  Poly<F> value;
};

/// s*a + t*b = gcd.
template <class F>
struct Bezout {
  Poly<F> gcd;
  Poly<F> s;
  Poly<F> t;
};

template <class F>
using UnitOrZd = std::variant<Unit<F>, ZdSignal<F>>;
template <class F>
using GcdOrZd = std::variant<Gcd<F>, ZdSignal<F>>;
template <class F>
using BezoutOrZd = std::variant<Bezout<F>, ZdSignal<F>>;

class ZeroInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Receives every zero-divisor signal raised on this thread while alive,
/// together with the tower T_level it is a zero-divisor of.
template <class F>
class ZdObserver {
 public:
  using Sink = std::function<void(const ZdSignal<F>&, const Tower<F>&)>;

  explicit ZdObserver(Sink sink) : sink_(std::move(sink)), prev_(active_) { active_ = this; }
  ~ZdObserver() { active_ = prev_; }
  ZdObserver(const ZdObserver&) = delete;
  ZdObserver& operator=(const ZdObserver&) = delete;

  static void notify(const ZdSignal<F>& zd, const Tower<F>& T) {
    for (ZdObserver* o = active_; o != nullptr; o = o->prev_) o->sink_(zd, T);
  }

 private:
  Sink sink_;
  ZdObserver* prev_;
  inline static thread_local ZdObserver* active_ = nullptr;
};

namespace detail {

// Inverse of a nonzero reduced u modulo T, where T.size() == u.level().
template <class F>
UnitOrZd<F> invert(const Poly<F>& u, const Tower<F>& T) {
  const int level = u.level();
  const F& f = T.field();
  if (level == 0) return Unit<F>{Poly<F>::constant(0, f.inv(u.value()))};

  const Tower<F> C = T.prefix(level - 1);
  Poly<F> r0 = T.gen(level);
  Poly<F> s0(level);
  Poly<F> r1 = u;
  Poly<F> s1 = Poly<F>::constant(level, f.one());
  for (;;) {
    auto lc_inv = invert(r1.lc(), C);
    if (auto* zd = std::get_if<ZdSignal<F>>(&lc_inv)) return std::move(*zd);
    const Poly<F>& li = std::get<Unit<F>>(lc_inv).value;
    r1 = scale_mod(r1, li, C);
    s1 = scale_mod(s1, li, C);
    if (r1.degree() == 0) return Unit<F>{reduce(s1, T)};

    DivRem<F> qr = divide_monic(r0, r1, C);
    if (qr.remainder.is_zero()) {
      ZdSignal<F> zd{std::move(r1), level};
      ZdObserver<F>::notify(zd, T);
      return zd;
    }
    Poly<F> s2 = sub(f, s0, mul_mod(qr.quotient, s1, C));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(qr.remainder);
    s1 = std::move(s2);
  }
}

template <class F>
void check_x_level(const Poly<F>& a, const Poly<F>& b, const Tower<F>& T) {
  if (a.level() != T.size() + 1 || b.level() != T.size() + 1) {
    throw std::invalid_argument("operands must be polynomials in the variable above the tower");
  }
}

}  // namespace detail

/// u^{-1} modulo T_k where k = level(u), or the zero-divisor that blocks it.
template <class F>
UnitOrZd<F> inv_mod(const Poly<F>& u, const TowerOf<F>& T) {
  if (u.level() > T.size()) throw std::invalid_argument("inv_mod: element above the tower");
  const Tower<F> Tk = T.prefix(u.level());
  Poly<F> ur = reduce(u, Tk);
  if (ur.is_zero()) throw ZeroInput("inv_mod: zero has no inverse");
  return detail::invert(ur, Tk);
}

/// Monic gcd in R[x] by the monic remainder sequence, or the first
/// zero-divisor met.  gcd(0, 0) = 0.
template <class F>
GcdOrZd<F> monic_euclidean_cgcd(const Poly<F>& a_in, const Poly<F>& b_in, const TowerOf<F>& T) {
  detail::check_x_level(a_in, b_in, T);
  Poly<F> r0 = reduce(a_in, T);
  Poly<F> r1 = reduce(b_in, T);
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  if (r1.is_zero()) {
    if (r0.is_zero()) return Gcd<F>{std::move(r0)};
    auto li = detail::invert(r0.lc(), T);
    if (auto* zd = std::get_if<ZdSignal<F>>(&li)) return std::move(*zd);
    return Gcd<F>{scale_mod(r0, std::get<Unit<F>>(li).value, T)};
  }
  while (!r1.is_zero()) {
    auto li = detail::invert(r1.lc(), T);
    if (auto* zd = std::get_if<ZdSignal<F>>(&li)) return std::move(*zd);
    r1 = scale_mod(r1, std::get<Unit<F>>(li).value, T);
    Poly<F> r2 = detail::divide_monic(r0, r1, T).remainder;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return Gcd<F>{std::move(r0)};
}

/// Monic extended Euclidean algorithm: s*a + t*b = g with g the monic gcd.
template <class F>
BezoutOrZd<F> extended_euclidean(const Poly<F>& a_in, const Poly<F>& b_in, const TowerOf<F>& T) {
  detail::check_x_level(a_in, b_in, T);
  const F& f = T.field();
  const int level = a_in.level();
  Poly<F> r0 = reduce(a_in, T);
  Poly<F> r1 = reduce(b_in, T);
  const bool swapped = r0.degree() < r1.degree();
  if (swapped) std::swap(r0, r1);
  auto finish = [&](Poly<F> g, Poly<F> s, Poly<F> t) -> BezoutOrZd<F> {
    if (swapped) std::swap(s, t);
    return Bezout<F>{std::move(g), std::move(s), std::move(t)};
  };

  if (r1.is_zero()) {
    if (r0.is_zero()) return finish(Poly<F>(level), Poly<F>(level), Poly<F>(level));
    auto li = detail::invert(r0.lc(), T);
    if (auto* zd = std::get_if<ZdSignal<F>>(&li)) return std::move(*zd);
    const Poly<F>& inv = std::get<Unit<F>>(li).value;
    return finish(scale_mod(r0, inv, T), raise_level(inv, level), Poly<F>(level));
  }

  Poly<F> s0 = Poly<F>::constant(level, f.one());
  Poly<F> t0(level);
  Poly<F> s1(level);
  Poly<F> t1 = Poly<F>::constant(level, f.one());
  for (;;) {
    auto li = detail::invert(r1.lc(), T);
    if (auto* zd = std::get_if<ZdSignal<F>>(&li)) return std::move(*zd);
    const Poly<F>& inv = std::get<Unit<F>>(li).value;
    r1 = scale_mod(r1, inv, T);
    s1 = scale_mod(s1, inv, T);
    t1 = scale_mod(t1, inv, T);
    DivRem<F> qr = detail::divide_monic(r0, r1, T);
    if (qr.remainder.is_zero()) return finish(std::move(r1), std::move(s1), std::move(t1));
    Poly<F> s2 = sub(f, s0, mul_mod(qr.quotient, s1, T));
    Poly<F> t2 = sub(f, t0, mul_mod(qr.quotient, t1, T));
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    r1 = std::move(qr.remainder);
    s1 = std::move(s2);
    t1 = std::move(t2);
  }
}

/// Reduction of rational coefficients modulo p.  Throws BadPrime when p
/// divides a denominator.
PPoly project_mod_p(const QPoly& a, std::uint32_t p);
PTset project_mod_p(const QTset& T, std::uint32_t p);

/// Residues in [0, p) as integers.
QPoly lift_residues(const PPoly& a);

/// True (radical), false (gcd(t_i, t_i') != 1 for some i) or the zero-divisor
/// met while computing one of those gcds.
using RadicalVerdict = std::variant<bool, ZdSignal<PrimeField>>;

RadicalVerdict is_radical_prime(const QTset& T, std::uint32_t p);
RadicalVerdict is_radical(const PTset& Tp);

}  // namespace tsgcd
