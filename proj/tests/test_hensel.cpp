#include "check.hpp"

using namespace tsgcd;
using namespace tsgcd::testing;

namespace {

mpz_class two60() {
  mpz_class b = 1;
  b <<= 60;
  return b;
}

}  // namespace

TEST_CASE("diophantine_solve") {
  const PTset T = project_mod_p(tset({"z1^2 + 1"}), 13);
  const PPoly a0 = ppoly("z2 + 12*z1", 2, 2, 13);
  const PPoly b0 = ppoly("z2 + z1", 2, 2, 13);
  auto ext = extended_euclidean(a0, b0, T);
  REQUIRE(std::holds_alternative<Bezout<PrimeField>>(ext));
  const auto& bz = std::get<Bezout<PrimeField>>(ext);

  auto one = diophantine_solve(a0, b0, bz.s, bz.t, ppoly("1", 2, 2, 13), T);
  CHECK(one.sigma == ppoly("7*z1", 2, 2, 13));
  CHECK(one.tau == ppoly("6*z1", 2, 2, 13));

  auto zero = diophantine_solve(a0, b0, bz.s, bz.t, PPoly(2), T);
  CHECK(zero.sigma.is_zero());
  CHECK(zero.tau.is_zero());

  const PPoly c = ppoly("3*z2 + z1", 2, 2, 13);
  auto gen = diophantine_solve(a0, b0, bz.s, bz.t, c, T);
  CHECK(add(T.field(), mul_mod(gen.sigma, a0, T), mul_mod(gen.tau, b0, T)) == c);
}

TEST_CASE("hensel_lift") {
  const QTset T1 = tset({"z1^2 + 1"});
  auto split = hensel_lift(poly("z2^2 + 1", 2, 2), ppoly("z2 + 12*z1", 2, 2, 13), ppoly("z2 + z1", 2, 2, 13), T1, 13,
                           two60());
  REQUIRE(std::holds_alternative<Factors>(split));
  CHECK(std::get<Factors>(split).a == poly("z2 - z1", 2, 2));
  CHECK(std::get<Factors>(split).b == poly("z2 + z1", 2, 2));
  CHECK(mul_mod(std::get<Factors>(split).a, std::get<Factors>(split).b, T1) == poly("z2^2 + 1", 2, 2));

  const QTset E(RationalField{});
  auto exact = hensel_lift(poly("z1^2 - 1", 1, 1), ppoly("z1 - 1", 1, 1, 5), ppoly("z1 + 1", 1, 1, 5), E, 5, two60());
  REQUIRE(std::holds_alternative<Factors>(exact));
  CHECK(std::get<Factors>(exact).a == poly("z1 - 1", 1, 1));
  CHECK(std::get<Factors>(exact).b == poly("z1 + 1", 1, 1));

  // z1^2 + 2 is irreducible over Q.
  auto none = hensel_lift(poly("z1^2 + 2", 1, 1), ppoly("z1 + 1", 1, 1, 3), ppoly("z1 + 2", 1, 1, 3), E, 3, two60());
  CHECK(std::holds_alternative<Fail>(none));
}

TEST_CASE("lifting steps keep f = u v mod p^i") {
  const QTset E(RationalField{});
  // (x - 1/3)(x + 5/7), so a few steps are needed before reconstruction works.
  const QPoly f = poly("x^2 + 8/21*x - 5/21", 0, 1);
  const PPoly a0 = project_mod_p(poly("x - 1/3", 0, 1), 13);
  const PPoly b0 = project_mod_p(poly("x + 5/7", 0, 1), 13);
  int steps = 0;
  mpz_class last = 1;
  auto step = [&](const ZPoly& u, const ZPoly& v, const mpz_class& m) {
    ++steps;
    CHECK(m > last - 1);
    last = m;
    CHECK(u.is_monic());
    CHECK(v.is_monic());
  };
  auto out = hensel_lift(f, a0, b0, E, 13, two60(), step);
  REQUIRE(std::holds_alternative<Factors>(out));
  CHECK(std::get<Factors>(out).a == poly("x - 1/3", 0, 1));
  CHECK(steps >= 2);
}

TEST_CASE("handle_zero_divisor") {
  {
    const QTset T = tset({"z1^2 + 1", "z2^2 + 1"});
    LiftBound B;
    auto out = handle_zero_divisor(T, 13, {ppoly("z2 + 12*z1", 2, 2, 13), 2}, B);
    REQUIRE(std::holds_alternative<Split>(out));
    const auto& s = std::get<Split>(out);
    CHECK(s.level == 2);
    CHECK(s.u == poly("z2 - z1", 2, 2));
    CHECK(s.v == poly("z2 + z1", 2, 2));
  }
  {
    const QTset T = tset({"z1^2 - 1", "z2^3 + 9*z2^2 + (3/2*z1 + 51/2)*z2 - 53/2*z1 - 3/2"});
    LiftBound B;
    auto out = handle_zero_divisor(T, 5, {ppoly("z1 - 1", 2, 1, 5), 1}, B);
    REQUIRE(std::holds_alternative<Split>(out));
    const auto& s = std::get<Split>(out);
    CHECK(s.level == 1);
    CHECK(s.u == poly("z1 - 1", 2, 1));
    CHECK(s.v == poly("z1 + 1", 2, 1));
  }
  {
    const QTset T = tset({"z1^2 + 2"});
    LiftBound B;
    auto out = handle_zero_divisor(T, 3, {ppoly("z1 + 1", 1, 1, 3), 1}, B);
    CHECK(std::holds_alternative<Fail>(out));
    CHECK(B.used());
  }
}

TEST_CASE("bound schedule") {
  LiftBound B;
  CHECK_FALSE(B.used());
  CHECK(B.next() == two60());
  CHECK(B.next() == two60() * two60());
  CHECK(B.current() == two60() * two60());
}

TEST_CASE("rational_reconstruction") {
  CHECK(*rational_reconstruction(mpz_class(0), mpz_class(13)) == 0);
  CHECK(*rational_reconstruction(mpz_class(7), mpz_class(13)) == mpq_class(1, 2));
  CHECK(*rational_reconstruction(mpz_class(6), mpz_class(13)) == mpq_class(-1, 2));
  // 3 mod 13: n = 3 d with |n|, d <= 2 has no solution.
  CHECK_FALSE(rational_reconstruction(mpz_class(3), mpz_class(13)).has_value());
}

TEST_CASE("crt_combine") {
  auto c = [](long g, long M, long h, std::uint32_t p) {
    ZPoly G = ZPoly::constant(0, mpz_class(g));
    PPoly gp = PPoly::constant(0, static_cast<std::uint32_t>(h));
    ZPoly r = crt_combine(raise_level(G, 1), mpz_class(M), raise_level(gp, 1), p);
    return r.is_zero() ? 0L : r.coeff(0).value().get_si();
  };
  CHECK(c(2, 5, 3, 7) == 17);
  CHECK(c(4, 11, 4, 13) == 4);

  ZPoly G = ZPoly::from_terms(1, {ZPoly::constant(0, mpz_class(2)), ZPoly::constant(0, mpz_class(1))});
  PPoly g = PPoly::from_terms(1, {PPoly::constant(0, 3), PPoly::constant(0, 1)});
  ZPoly r = crt_combine(G, mpz_class(5), g, 7);
  CHECK(r == ZPoly::from_terms(1, {ZPoly::constant(0, mpz_class(17)), ZPoly::constant(0, mpz_class(1))}));
}

TEST_CASE("hensel properties") {
  Rng rng(303);
  ZdAudit audit;
  require_property(prop_reconstruction(rng, 60));
  require_property(prop_crt(rng, 60));
  require_property(prop_diophantine(rng, 40));
  require_property(prop_hensel(rng, 30));
  CHECK(audit.bad().empty());
}
