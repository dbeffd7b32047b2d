#include "tsgcd/hensel.hpp"

#include <stdexcept>

namespace tsgcd {

Diophantine diophantine_solve(const PPoly& a0, const PPoly& b0, const PPoly& s, const PPoly& t, const PPoly& c,
                              const Tower<PrimeField>& T) {
  const PrimeField& f = T.field();
  if (c.is_zero()) return {PPoly(c.level()), PPoly(c.level())};
  DivRem<PrimeField> qr = detail::divide_monic(mul_mod(c, s, T), b0, T);
  PPoly tau = add(f, mul_mod(c, t, T), mul_mod(qr.quotient, a0, T));
  return {std::move(qr.remainder), std::move(tau)};
}

namespace {

QPoly to_q(const ZPoly& a) {
  return map_coeffs<RationalField>(a, [](const mpz_class& c) { return mpq_class(c); });
}

// a + m*b for integer-valued a and residues b.
ZPoly add_scaled(const ZPoly& a, const PPoly& b, const mpz_class& m) {
  const IntegerRing Z;
  ZPoly bz = map_coeffs<IntegerRing>(b, [&](std::uint32_t c) { return mpz_class(m * static_cast<unsigned long>(c)); });
  return add(Z, a, bz);
}

}  // namespace

LiftOutcome hensel_lift(const QPoly& f, const PPoly& a0, const PPoly& b0, const QTset& T, std::uint32_t p,
                        const mpz_class& bound, const LiftStep& on_step) {
  const int level = T.size() + 1;
  if (f.level() != level || a0.level() != level || b0.level() != level) {
    throw std::invalid_argument("hensel_lift: operands must live one level above T");
  }
  const PrimeField fp(p);
  const PTset Tp = project_mod_p(T, p);

  auto ext = extended_euclidean(a0, b0, Tp);
  if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&ext)) return *zd;
  const auto& bez = std::get<Bezout<PrimeField>>(ext);
  if (!bez.gcd.is_one()) return Fail{};

  const mpz_class P(static_cast<unsigned long>(p));
  const mpz_class limit = 2 * bound;
  ZPoly u = to_integers(a0);
  ZPoly v = to_integers(b0);
  mpz_class m = P;
  for (;;) {
    if (on_step) on_step(u, v, m);
    if (auto h = rational_reconstruction(u, m)) {
      if (h->is_monic()) {
        DivRem<RationalField> qr = div_rem(f, *h, T);
        if (qr.remainder.is_zero()) return Factors{std::move(*h), std::move(qr.quotient)};
      }
    }
    if (m > limit) return Fail{};

    QPoly e = reduce(sub(RationalField{}, f, mul(RationalField{}, to_q(u), to_q(v))), T);
    bool divisible = true;
    PPoly c = map_coeffs<PrimeField>(e, [&](const mpq_class& x) -> std::uint32_t {
      mpz_class q;
      mpz_class r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_num().get_mpz_t(), m.get_mpz_t());
      if (r != 0) divisible = false;
      mpz_class qn = q % P;
      if (qn < 0) qn += P;
      mpz_class dn = x.get_den() % P;
      return fp.mul(static_cast<std::uint32_t>(qn.get_ui()), fp.inv(static_cast<std::uint32_t>(dn.get_ui())));
    });
    if (!divisible) return Fail{};

    Diophantine st = diophantine_solve(a0, b0, bez.s, bez.t, c, Tp);
    u = add_scaled(u, st.tau, m);
    v = add_scaled(v, st.sigma, m);
    m *= P;
  }
}

const mpz_class& LiftBound::next() {
  if (!used_) {
    value_ = 1;
    value_ <<= 60;
    used_ = true;
  } else {
    value_ *= value_;
  }
  return value_;
}

SplitOutcome handle_zero_divisor(const QTset& T, std::uint32_t p, const ZdSignal<PrimeField>& zd, LiftBound& bound,
                                 int depth) {
  if (depth >= kMaxZdDepth) return zd;
  const int k = zd.level;
  const PTset Tp = project_mod_p(T.prefix(k), p);
  const Tower<PrimeField> C = Tower<PrimeField>(Tp).prefix(k - 1);
  const PPoly& tk = Tp.gen(k);

  PPoly u0 = zd.witness;
  DivRem<PrimeField> qr = detail::divide_monic(tk, u0, C);
  if (!qr.remainder.is_zero()) {
    auto g = monic_euclidean_cgcd(tk, u0, C);
    if (auto* deeper = std::get_if<ZdSignal<PrimeField>>(&g)) {
      return handle_zero_divisor(T, p, *deeper, bound, depth + 1);
    }
    u0 = std::move(std::get<Gcd<PrimeField>>(g).value);
    if (u0.degree() < 1 || u0.degree() >= tk.degree()) return Fail{};
    qr = detail::divide_monic(tk, u0, C);
  }

  const mpz_class& B = bound.next();
  LiftOutcome lifted = hensel_lift(T.gen(k), u0, qr.quotient, T.prefix(k - 1), p, B);
  if (auto* fac = std::get_if<Factors>(&lifted)) return Split{k, std::move(fac->a), std::move(fac->b)};
  if (auto* deeper = std::get_if<ZdSignal<PrimeField>>(&lifted)) {
    return handle_zero_divisor(T, p, *deeper, bound, depth + 1);
  }
  return Fail{};
}

std::optional<mpq_class> rational_reconstruction(const mpz_class& c, const mpz_class& m) {
  if (m <= 0) throw std::invalid_argument("rational_reconstruction: modulus must be positive");
  mpz_class r0 = m;
  mpz_class r1 = c % m;
  if (r1 < 0) r1 += m;
  if (r1 == 0) return mpq_class(0);
  mpz_class N = m / 2;
  N = sqrt(N);
  mpz_class t0 = 0;
  mpz_class t1 = 1;
  while (r1 > N) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (abs(t1) > N || t1 == 0) return std::nullopt;
  mpz_class g = gcd(t1, m);
  if (g != 1) return std::nullopt;
  mpq_class r(r1, t1);
  r.canonicalize();
  return r;
}

std::optional<QPoly> rational_reconstruction(const ZPoly& c, const mpz_class& m) {
  bool ok = true;
  QPoly r = map_coeffs<RationalField>(c, [&](const mpz_class& x) -> mpq_class {
    if (!ok) return mpq_class(0);
    auto q = rational_reconstruction(x, m);
    if (!q) {
      ok = false;
      return mpq_class(0);
    }
    return *q;
  });
  if (!ok) return std::nullopt;
  return r;
}

namespace {

ZPoly crt_rec(const ZPoly& G, const PPoly& g, const mpz_class& M, const mpz_class& P, const mpz_class& Minv) {
  if (G.level() == 0) {
    const mpz_class a = G.value();
    mpz_class diff = (mpz_class(static_cast<unsigned long>(g.value())) - a) % P;
    if (diff < 0) diff += P;
    mpz_class k = diff * Minv % P;
    return ZPoly::constant(0, a + M * k);
  }
  const int n = std::max(G.degree(), g.degree()) + 1;
  ZPoly r(G.level());
  auto& t = r.raw_terms();
  for (int i = 0; i < n; ++i) t.push_back(crt_rec(G.coeff(i), g.coeff(i), M, P, Minv));
  r.normalize();
  return r;
}

}  // namespace

ZPoly crt_combine(const ZPoly& G, const mpz_class& M, const PPoly& g, std::uint32_t p) {
  if (G.level() != g.level()) throw std::invalid_argument("crt_combine: level mismatch");
  if (G.level() > 0 && G.degree() != g.degree() && !G.is_zero() && !g.is_zero()) {
    throw std::invalid_argument("crt_combine: degree mismatch");
  }
  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class Minv;
  if (mpz_invert(Minv.get_mpz_t(), mpz_class(M % P).get_mpz_t(), P.get_mpz_t()) == 0) {
    throw std::invalid_argument("crt_combine: moduli are not coprime");
  }
  return crt_rec(G, g, M, P, Minv);
}

ZPoly to_integers(const PPoly& g) {
  return map_coeffs<IntegerRing>(g, [](std::uint32_t c) { return mpz_class(static_cast<unsigned long>(c)); });
}

}  // namespace tsgcd
