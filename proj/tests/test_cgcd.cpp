#include <algorithm>
#include <chrono>

#include "check.hpp"

using namespace tsgcd;
using namespace tsgcd::testing;

namespace {

const char* kA = "x^4 + (z1 + 18*z2)*x^3 + (-z2 + 3*z1)*x^2 + 324*x + 323";
const char* kB = "x^3 + (z1 + 18*z2)*x^2 + (-19*z2 + 2*z1)*x + 324";

const char* kSextic = "z1^6 + 3*z1^5 + 6*z1^4 + z1^3 - 3*z1^2 + 12*z1 + 16";
const char* kFactor = "x - 4/3 - 11/12*z1 + 7/12*z1^2 - 1/6*z1^3 - 1/12*z1^4 - 1/12*z1^5";

}  // namespace

TEST_CASE("four components over x, y with main variable z") {
  const TsetFile tf = read_tset_file(TSGCD_DATA_DIR "/xyz.tset");
  const QPoly a = parse_poly(
      "z^2 - 8/3*z*y*x^2 + 3*z*y*x - 7/3*z*y - 1/3*z*x^2 + 3*z*x - 5/3*z + 25/6*y*x^2 - 13/2*y*x + 10/3*y + "
      "16/3*x^2 - 2*x - 10/3",
      tf.vars);
  const QPoly b = parse_poly(
      "z^2 + 29/12*z*y*x^2 + 7/4*z*y*x - 11/3*z*y - 8/3*z*x^2 + 3*z*x + 2/3*z + 67/12*y*x^2 - 11/4*y*x - 13/3*y - "
      "13/3*x^2 - 2*x + 19/3",
      tf.vars);
  CGcdResult res = modular_cgcd(a, b, tf.tset);
  canonical_order(res.components);

  auto comp = [&](const char* t1, const char* t2, const char* g) {
    QTset T = parse_tset(std::string("vars: x y\nmain: z\nt1: ") + t1 + "\nt2: " + t2 + "\n").tset;
    return Component{std::move(T), parse_poly(g, tf.vars)};
  };
  std::vector<Component> want{
      comp("x^2 - 1", "y", "z^2 + (3*x - 2)*z - 2*x + 2"),
      comp("x^2 - 1", "y - 3/2*x - 1/2", "z + 1/2*x - 3/2"),
      comp("x", "y + 2", "z + 5"),
      comp("x", "y - 1", "1"),
  };
  canonical_order(want);
  REQUIRE(res.components.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(res.components[i].tset == want[i].tset);
    CHECK(res.components[i].gcd == want[i].gcd);
  }
  CHECK(certified(res, a, b, tf.tset));
}

TEST_CASE("z2^2 + 1 splits over z1^2 + 1") {
  const QTset T = tset({"z1^2 + 1", "z2^2 + 1"});
  CGcdResult res = modular_cgcd(xpoly(kA, 2), xpoly(kB, 2), T);
  canonical_order(res.components);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0].tset == tset({"z1^2 + 1", "z2 - z1"}));
  CHECK(res.components[1].tset == tset({"z1^2 + 1", "z2 + z1"}));
  REQUIRE(res.splits.size() == 1);
  CHECK(res.splits[0].level == 2);
  CHECK(certified(res, xpoly(kA, 2), xpoly(kB, 2), T));
}

TEST_CASE("gcd over the rationals") {
  CGcdResult res = modular_cgcd(xpoly("x^2 - 1", 0), xpoly("x - 1", 0), QTset(RationalField{}));
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0].tset.empty());
  CHECK(res.components[0].gcd == xpoly("x - 1", 0));

  CGcdResult zero = modular_cgcd(QPoly(1), QPoly(1), QTset(RationalField{}));
  REQUIRE(zero.components.size() == 1);
  CHECK(zero.components[0].gcd.is_zero());
}

TEST_CASE("factor with denominator 12 over the sextic field") {
  const QTset T = tset({kSextic});
  const QPoly f = xpoly(kFactor, 1);
  const QPoly a = xpoly("x^3 - 3", 1);
  CHECK(trial_divide(f, a, T));
  const QPoly b = mul_mod(f, xpoly("x + 1", 1), T);
  CGcdResult res = modular_cgcd(a, b, T);
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0].gcd == f);
  CHECK(str(res.components[0].gcd, 1) ==
        "x - 1/12*z1^5 - 1/12*z1^4 - 1/6*z1^3 + 7/12*z1^2 - 11/12*z1 - 4/3");
  mpz_class den = 1;
  for_each_value(res.components[0].gcd, [&](const mpq_class& c) { mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t()); });
  CHECK(den == 12);
}

TEST_CASE("split_tset") {
  const QTset T = tset({"z1^2 + 1", "z2^2 + 1"});
  auto [Tu, Tv] = split_tset(T, 2, poly("z2 - z1", 2, 2), poly("z2 + z1", 2, 2));
  CHECK(Tu == tset({"z1^2 + 1", "z2 - z1"}));
  CHECK(Tv == tset({"z1^2 + 1", "z2 + z1"}));

  const QTset R = tset({"z1^2 - 1", "z2^3 + 9*z2^2 + (3/2*z1 + 51/2)*z2 - 53/2*z1 - 3/2"});
  auto [Ru, Rv] = split_tset(R, 1, poly("z1 - 1", 2, 1), poly("z1 + 1", 2, 1));
  CHECK(Ru == tset({"z1 - 1", "z2^3 + 9*z2^2 + 27*z2 - 28"}));
  CHECK(Rv == tset({"z1 + 1", "z2^3 + 9*z2^2 + 24*z2 + 25"}));
  CHECK(Ru.degree() + Rv.degree() == R.degree());

  CHECK_THROWS_AS(split_tset(T, 2, poly("z2^2 + 1", 2, 2), poly("1", 2, 2)), InvalidFactorization);
  CHECK_THROWS_AS(split_tset(T, 2, poly("z2 - 1", 2, 2), poly("z2 + 1", 2, 2)), InvalidFactorization);
}

TEST_CASE("trial_divide") {
  const QTset E(RationalField{});
  CHECK(trial_divide(xpoly("x - 1", 0), xpoly("x^2 - 1", 0), E));
  CHECK_FALSE(trial_divide(xpoly("x - 1", 0), xpoly("x^2 + 1", 0), E));
  CHECK(trial_divide(xpoly(kFactor, 1), xpoly("x^3 - 3", 1), tset({kSextic})));
}

TEST_CASE("prime stream") {
  PrimeStream s;
  CHECK(next_prime(s, QTset(RationalField{}), xpoly("x", 0), xpoly("x", 0)) == 2147483647u);
  CHECK(s.next() == 2147483629u);

  const QTset R = tset({"z1^2 - 1", "z2^3 + 9*z2^2 + (3/2*z1 + 51/2)*z2 - 53/2*z1 - 3/2"});
  PrimeStream small(7);
  const QPoly x = xpoly("x", 2);
  CHECK(next_prime(small, R, x, x) == 7);
  CHECK(next_prime(small, R, x, x) == 5);
  CHECK(next_prime(small, R, x, x) == 3);
  CHECK_THROWS_AS(next_prime(small, R, x, x), Exhausted);

  PrimeStream three(3);
  CHECK(next_prime(three, QTset(RationalField{}), xpoly("3*x + 1", 0), xpoly("x", 0)) == 2);
}

TEST_CASE("driver errors") {
  // z1^2 is not radical modulo any prime.
  CHECK_THROWS_AS(modular_cgcd(xpoly("x^2 + z1", 1), xpoly("x + 1", 1), tset({"z1^2"})), NotRadical);

  CGcdOptions opts;
  opts.max_primes = 1;
  CHECK_THROWS_AS(modular_cgcd(xpoly(kA, 2), xpoly(kB, 2), tset({"z1^2 + 1", "z2^2 + 1"}), opts), ResourceLimit);
  CHECK_THROWS_AS(modular_cgcd(xpoly("x", 1), xpoly("x", 0), tset({"z1^2 + 1"})), std::invalid_argument);
}

TEST_CASE("check prime and concurrent images do not change the result") {
  Rng rng(404);
  for (int c = 0; c < 10; ++c) {
    RandomInstance in = random_instance(rng);
    CGcdResult base = modular_cgcd(in.a, in.b, in.T);
    CGcdOptions nocheck;
    nocheck.check_prime = false;
    CGcdOptions jobs;
    jobs.jobs = 4;
    CGcdResult r1 = modular_cgcd(in.a, in.b, in.T, nocheck);
    CGcdResult r2 = modular_cgcd(in.a, in.b, in.T, jobs);
    canonical_order(base.components);
    canonical_order(r1.components);
    canonical_order(r2.components);
    CHECK(lines(base, in.T.size()) == lines(r1, in.T.size()));
    CHECK(lines(base, in.T.size()) == lines(r2, in.T.size()));
  }
}

TEST_CASE("small monic gcd needs few primes") {
  const BenchProfile p2 = BenchProfile::named("table2");
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    BenchRow row = run_bench(p2, {2, 2}, seed);
    CHECK(row.primes <= 4);
  }
}

TEST_CASE("cgcd properties") {
  Rng rng(505);
  ZdAudit audit;
  require_property(prop_cgcd(rng, 30));
  require_property(prop_next_prime(rng, 40));
  CHECK(audit.bad().empty());
}
