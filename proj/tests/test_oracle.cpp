#include <fstream>
#include <iterator>

#include "check.hpp"

using namespace tsgcd;
using namespace tsgcd::testing;

namespace {

const RationalField Q;
const char* kA = "x^4 + (z1 + 18*z2)*x^3 + (-z2 + 3*z1)*x^2 + 324*x + 323";
const char* kB = "x^3 + (z1 + 18*z2)*x^2 + (-19*z2 + 2*z1)*x + 324";

QTset gauss() { return tset({"z1^2 + 1", "z2^2 + 1"}); }

}  // namespace

TEST_CASE("euclid_q_cgcd") {
  CGcdResult res = oracle::euclid_q_cgcd(xpoly(kA, 2), xpoly(kB, 2), gauss());
  canonical_order(res.components);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0].tset == tset({"z1^2 + 1", "z2 - z1"}));
  CHECK(res.components[1].tset == tset({"z1^2 + 1", "z2 + z1"}));
  for (const auto& c : res.components) {
    CHECK(trial_divide(c.gcd, xpoly(kA, 2), c.tset));
    CHECK(trial_divide(c.gcd, xpoly(kB, 2), c.tset));
  }

  CGcdResult one = oracle::euclid_q_cgcd(xpoly("x - 1", 0), xpoly("x - 1", 0), QTset(Q));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].gcd == xpoly("x - 1", 0));
}

TEST_CASE("oracle agrees with the modular algorithm on the x, y, z example") {
  const TsetFile tf = read_tset_file(TSGCD_DATA_DIR "/xyz.tset");
  auto read = [&](const char* name) {
    std::ifstream in(std::string(TSGCD_DATA_DIR) + "/" + name);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_poly(s, tf.vars);
  };
  const QPoly a = read("xyz_a.txt");
  const QPoly b = read("xyz_b.txt");
  CGcdResult m = modular_cgcd(a, b, tf.tset);
  CGcdResult o = oracle::euclid_q_cgcd(a, b, tf.tset);
  canonical_order(m.components);
  canonical_order(o.components);
  CHECK(lines(m, 2) == lines(o, 2));
  CHECK(m.components.size() == 4);
}

TEST_CASE("iterated resultant") {
  const QTset T = gauss();
  CHECK(oracle::iterres(poly("z1 - z2", 2, 2), T) == 0);
  CHECK(oracle::iterres(poly("1", 2, 2), T) == 1);
  CHECK(oracle::iterres(poly("z1", 2, 1), T) == 1);
  CHECK(oracle::is_zero_divisor(poly("z1 - z2", 2, 2), T));
  CHECK(oracle::is_zero_divisor(poly("z1 + z2", 2, 2), T));
  CHECK_FALSE(oracle::is_zero_divisor(poly("z1", 2, 1), T));
  CHECK_THROWS_AS(oracle::is_zero_divisor(poly("z2^2 + 1", 2, 2), T), std::invalid_argument);
}

TEST_CASE("resultants") {
  // res(x^2 - 2, x - 1) = 1 - 2 = -1; res(x^2 + 1, x^2 - 1) = 4
  CHECK(oracle::resultant(Q, xpoly("x^2 - 2", 0), xpoly("x - 1", 0)) == poly("-1", 0, 0));
  CHECK(oracle::resultant(Q, xpoly("x^2 + 1", 0), xpoly("x^2 - 1", 0)) == poly("4", 0, 0));
  CHECK(oracle::sylvester_resultant(Q, xpoly("x^2 + 1", 0), xpoly("x^2 - 1", 0)) == poly("4", 0, 0));
  CHECK(oracle::resultant(Q, xpoly("x^2 - 1", 0), xpoly("x - 1", 0)).is_zero());
  // In z1: res_x(x - z1, x^2 + 1) = z1^2 + 1
  CHECK(oracle::resultant(Q, xpoly("x - z1", 1), xpoly("x^2 + 1", 1)) == poly("z1^2 + 1", 1, 1));
}

TEST_CASE("radicality over Q") {
  CHECK(oracle::is_radical_q(gauss()));
  CHECK(oracle::is_radical_q(tset({"z1^2 - 3"})));
  CHECK_FALSE(oracle::is_radical_q(tset({"z1^2"})));
  CHECK_FALSE(oracle::is_radical_q(tset({"z1^2 - 1", "z2^2 + z1 - 1"})));
}

TEST_CASE("oracle properties") {
  Rng rng(606);
  require_property(prop_resultant(rng, 60));
}

TEST_CASE("zero-divisor witnesses seen during c-gcd runs") {
  ZdAudit audit;
  (void)modular_cgcd(xpoly(kA, 2), xpoly(kB, 2), gauss());
  Rng rng(607);
  for (int c = 0; c < 20; ++c) {
    RandomInstance in = random_instance(rng);
    (void)modular_cgcd(in.a, in.b, in.T);
  }
  CHECK(audit.seen() > 0);
  CHECK(audit.bad().empty());
}
