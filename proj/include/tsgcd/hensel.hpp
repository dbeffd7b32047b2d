#pragma once

// Lifting a monic coprime factorization of t_k modulo (T_{k-1}, p) to an
// exact factorization over Q, plus the CRT and rational reconstruction
// helpers used by the modular driver.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include <gmpxx.h>

#include "tsgcd/modp.hpp"

namespace tsgcd {

struct Fail {};

/// f = a*b modulo T_{k-1} over Q, both monic.
struct Factors {
  QPoly a;
  QPoly b;
};

/// t_level = u*v modulo T_{level-1} over Q.
struct Split {
  int level = 0;
  QPoly u;
  QPoly v;
};

using LiftOutcome = std::variant<Factors, Fail, ZdSignal<PrimeField>>;
using SplitOutcome = std::variant<Split, Fail, ZdSignal<PrimeField>>;

/// sigma*a0 + tau*b0 = c with deg sigma < deg b0.
struct Diophantine {
  PPoly sigma;
  PPoly tau;
};

Diophantine diophantine_solve(const PPoly& a0, const PPoly& b0, const PPoly& s, const PPoly& t, const PPoly& c,
                              const Tower<PrimeField>& T);

/// Called with (u, v, p^i) at the start of every lifting step.
using LiftStep = std::function<void(const ZPoly&, const ZPoly&, const mpz_class&)>;

/// Linear Hensel lifting of f = a0*b0 mod (T, p) where level(f) = |T| + 1.
/// Returns Fail once p^i exceeds 2*bound without a certified factor.
LiftOutcome hensel_lift(const QPoly& f, const PPoly& a0, const PPoly& b0, const QTset& T, std::uint32_t p,
                        const mpz_class& bound, const LiftStep& on_step = {});

/// Bound schedule 2^60, then repeated squaring, shared by all lifts of one
/// component branch.
class LiftBound {
 public:
  const mpz_class& next();
  const mpz_class& current() const noexcept { return value_; }
  bool used() const noexcept { return used_; }

 private:
  mpz_class value_ = 0;
  bool used_ = false;
};

inline constexpr int kMaxZdDepth = 64;

/// Resolves a monic zero-divisor mod (T_k, p) into a factorization of t_k
/// over Q.  A zero-divisor returned here means the recursion cap was hit.
SplitOutcome handle_zero_divisor(const QTset& T, std::uint32_t p, const ZdSignal<PrimeField>& zd, LiftBound& bound,
                                 int depth = 0);

/// n/d with n = c*d mod m and |n|, d <= sqrt(m/2).
std::optional<mpq_class> rational_reconstruction(const mpz_class& c, const mpz_class& m);
std::optional<QPoly> rational_reconstruction(const ZPoly& c, const mpz_class& m);

/// Coefficientwise Garner step: r = G mod M, r = g mod p, 0 <= r < M*p.
ZPoly crt_combine(const ZPoly& G, const mpz_class& M, const PPoly& g, std::uint32_t p);

ZPoly to_integers(const PPoly& g);

}  // namespace tsgcd
