#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsgcd/bench.hpp"
#include "tsgcd/cgcd.hpp"
#include "tsgcd/modp.hpp"
#include "tsgcd/text.hpp"

using namespace tsgcd;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string operand_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot open " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TsetFile load_tset(const std::string& path) {
  if (path.empty()) return TsetFile{VarContext::standard(0), QTset(RationalField{})};
  return read_tset_file(path);
}

// Drops the main variable when it does not occur.
QPoly as_ring_element(QPoly a, int n) {
  if (degree_in(a, n + 1) <= 0) return lower_level(std::move(a), n);
  return a;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

int cmd_gcd(const std::string& tset_path, const std::string& a_arg, const std::string& b_arg, bool as_json,
            const CGcdOptions& opts) {
  TsetFile tf = load_tset(tset_path);
  QPoly a = parse_poly(operand_text(a_arg), tf.vars);
  QPoly b = parse_poly(operand_text(b_arg), tf.vars);
  CGcdResult r = modular_cgcd(a, b, tf.tset, opts);
  canonical_order(r.components);

  if (as_json) {
    json doc;
    doc["components"] = json::array();
    for (const auto& c : r.components) {
      doc["components"].push_back(
          {{"tset", format_tset(c.tset, tf.vars)}, {"gcd", format_poly(c.gcd, tf.vars)}});
    }
    doc["primes_used"] = r.stats.primes_used;
    doc["split_events"] = json::array();
    for (const auto& s : r.splits) {
      doc["split_events"].push_back(
          {{"level", s.level}, {"u", format_poly(s.u, tf.vars)}, {"v", format_poly(s.v, tf.vars)}});
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    std::cout << "component " << (i + 1) << "\n";
    std::cout << "  tset: [" << join(format_tset(c.tset, tf.vars)) << "]\n";
    std::cout << "  gcd:  " << format_poly(c.gcd, tf.vars) << "\n";
  }
  std::cout << "primes used: " << r.stats.primes_used << "\n";
  return 0;
}

int cmd_mul(const std::string& tset_path, const std::string& a_arg, const std::string& b_arg, bool count) {
  TsetFile tf = load_tset(tset_path);
  const int n = tf.tset.size();
  QPoly a = parse_poly(operand_text(a_arg), tf.vars);
  QPoly b = parse_poly(operand_text(b_arg), tf.vars);
  if (degree_in(a, n + 1) <= 0 && degree_in(b, n + 1) <= 0) {
    a = as_ring_element(std::move(a), n);
    b = as_ring_element(std::move(b), n);
  }
  a = reduce(a, tf.tset);
  b = reduce(b, tf.tset);
  MulCounter counter;
  QPoly r = mul_mod(a, b, tf.tset);
  std::cout << format_poly(raise_level(r, n + 1), tf.vars) << "\n";
  if (count) {
    std::cout << "multiplications: " << counter.count() << "\n";
    std::cout << "dense bound: " << mul_cost_bound(cost_model(tf.tset)) << "\n";
  }
  return 0;
}

int cmd_inv(const std::string& tset_path, const std::string& a_arg) {
  TsetFile tf = load_tset(tset_path);
  const int n = tf.tset.size();
  QPoly u = parse_poly(operand_text(a_arg), tf.vars);
  if (degree_in(u, n + 1) > 0) throw InputError("inv: operand must not involve " + tf.vars.main);
  u = lower_level(std::move(u), n);
  auto r = inv_mod(u, tf.tset);
  if (auto* unit = std::get_if<Unit<RationalField>>(&r)) {
    std::cout << format_poly(raise_level(unit->value, n + 1), tf.vars) << "\n";
    return 0;
  }
  const auto& zd = std::get<ZdSignal<RationalField>>(r);
  const QTset lower = tf.tset.prefix(zd.level - 1);
  auto qr = div_rem(tf.tset.gen(zd.level), zd.witness, lower);
  std::cout << "zero-divisor: " << format_poly(raise_level(zd.witness, n + 1), tf.vars) << "\n";
  std::cout << "split t" << zd.level << " = (" << format_poly(raise_level(zd.witness, n + 1), tf.vars) << ")*("
            << format_poly(raise_level(qr.quotient, n + 1), tf.vars) << ")\n";
  return 0;
}

int cmd_radical(const std::string& tset_path, std::uint32_t p) {
  TsetFile tf = load_tset(tset_path);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  RadicalVerdict v = is_radical_prime(tf.tset, p);
  if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&v)) {
    QPoly w = map_coeffs<RationalField>(zd->witness, [p](std::uint32_t c) {
      return c > p / 2 ? mpq_class(-static_cast<long>(p - c)) : mpq_class(static_cast<unsigned long>(c));
    });
    std::cout << "zero-divisor: " << format_poly(raise_level(w, tf.tset.size() + 1), tf.vars) << " (mod " << p
              << ")\n";
  } else {
    std::cout << (std::get<bool>(v) ? "true" : "false") << "\n";
  }
  return 0;
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad degree list '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty degree list");
  return out;
}

int cmd_bench(const std::string& profile, const std::string& degrees, std::uint64_t seed, bool as_json,
              const CGcdOptions& opts) {
  const BenchProfile prof = BenchProfile::named(profile);
  const std::vector<int> ds = parse_degrees(degrees);
  BenchRow row = run_bench(prof, ds, seed, opts);
  std::string dl;
  for (std::size_t i = 0; i < ds.size(); ++i) dl += (i ? "," : "") + std::to_string(ds[i]);
  if (as_json) {
    json doc{{"profile", profile},   {"n", ds.size()},         {"degrees", ds},
             {"seed", seed},         {"time", row.seconds},    {"divide", row.divide_seconds},
             {"primes", row.primes}, {"components", row.components}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << std::left << std::setw(8) << "profile" << std::setw(4) << "n" << std::setw(12) << "degrees"
            << std::setw(12) << "time" << std::setw(12) << "divide" << "#primes\n";
  std::cout << std::setw(8) << profile << std::setw(4) << ds.size() << std::setw(12) << ("[" + dl + "]")
            << std::setw(12) << std::fixed << std::setprecision(4) << row.seconds << std::setw(12)
            << row.divide_seconds << row.primes << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Componentwise gcds over Q[z1..zn]/T"};
  app.require_subcommand(1);

  std::string tset_path, a_arg, b_arg, profile = "table1", degrees = "2";
  bool as_json = false, no_check = false, count = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint32_t prime = 0;

  auto* gcd = app.add_subcommand("gcd", "componentwise gcd of a and b modulo T");
  gcd->add_option("--tset", tset_path, "triangular set file");
  gcd->add_option("--a", a_arg, "first operand (EXPR or @file)")->required();
  gcd->add_option("--b", b_arg, "second operand (EXPR or @file)")->required();
  gcd->add_flag("--json", as_json, "machine-readable output");
  gcd->add_flag("--no-check-prime", no_check, "skip the check prime before trial division");
  gcd->add_option("--jobs", jobs, "compute prime images concurrently")->check(CLI::Range(1u, 256u));

  auto* mul = app.add_subcommand("mul", "product of a and b modulo T");
  mul->add_option("--tset", tset_path, "triangular set file");
  mul->add_option("--a", a_arg, "first operand")->required();
  mul->add_option("--b", b_arg, "second operand")->required();
  mul->add_flag("--count-muls", count, "report base-field multiplications");

  auto* inv = app.add_subcommand("inv", "inverse of a modulo T over Q");
  inv->add_option("--tset", tset_path, "triangular set file");
  inv->add_option("--a", a_arg, "operand")->required();

  auto* rad = app.add_subcommand("radical-test", "is T radical modulo p");
  rad->add_option("--tset", tset_path, "triangular set file")->required();
  rad->add_option("--prime", prime, "prime p")->required();

  auto* bench = app.add_subcommand("bench", "random benchmark instance");
  bench->add_option("--profile", profile, "table1 | table2 | table3")
      ->check(CLI::IsMember({"table1", "table2", "table3"}));
  bench->add_option("--degrees", degrees, "extension degrees d1,d2,...");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_option("--jobs", jobs, "compute prime images concurrently")->check(CLI::Range(1u, 256u));
  bench->add_flag("--no-check-prime", no_check, "skip the check prime");
  bench->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  CGcdOptions opts;
  opts.check_prime = !no_check;
  opts.jobs = jobs;
  try {
    if (*gcd) return cmd_gcd(tset_path, a_arg, b_arg, as_json, opts);
    if (*mul) return cmd_mul(tset_path, a_arg, b_arg, count);
    if (*inv) return cmd_inv(tset_path, a_arg);
    if (*rad) return cmd_radical(tset_path, prime);
    if (*bench) return cmd_bench(profile, degrees, seed, as_json, opts);
  } catch (const NotRadical& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
