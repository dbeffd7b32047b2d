#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tsgcd/cgcd.hpp"
#include "tsgcd/hensel.hpp"
#include "tsgcd/modp.hpp"
#include "tsgcd/text.hpp"

namespace py = pybind11;
using namespace tsgcd;

namespace {

TsetFile load(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    return TsetFile{VarContext::standard(0), QTset(RationalField{})};
  }
  return parse_tset(text);
}

py::dict py_gcd(const std::string& tset, const std::string& a, const std::string& b, bool check_prime, unsigned jobs) {
  TsetFile tf = load(tset);
  CGcdOptions opts;
  opts.check_prime = check_prime;
  opts.jobs = jobs;
  CGcdResult r;
  {
    QPoly pa = parse_poly(a, tf.vars);
    QPoly pb = parse_poly(b, tf.vars);
    py::gil_scoped_release release;
    r = modular_cgcd(pa, pb, tf.tset, opts);
  }
  canonical_order(r.components);
  py::list comps;
  for (const auto& c : r.components) {
    py::dict d;
    d["tset"] = format_tset(c.tset, tf.vars);
    d["gcd"] = format_poly(c.gcd, tf.vars);
    comps.append(d);
  }
  py::list splits;
  for (const auto& s : r.splits) {
    py::dict d;
    d["level"] = s.level;
    d["u"] = format_poly(s.u, tf.vars);
    d["v"] = format_poly(s.v, tf.vars);
    splits.append(d);
  }
  py::dict out;
  out["components"] = comps;
  out["primes_used"] = r.stats.primes_used;
  out["split_events"] = splits;
  return out;
}

py::tuple py_mul(const std::string& tset, const std::string& a, const std::string& b) {
  TsetFile tf = load(tset);
  const int n = tf.tset.size();
  QPoly pa = parse_poly(a, tf.vars);
  QPoly pb = parse_poly(b, tf.vars);
  if (degree_in(pa, n + 1) <= 0 && degree_in(pb, n + 1) <= 0) {
    pa = lower_level(std::move(pa), n);
    pb = lower_level(std::move(pb), n);
  }
  pa = reduce(pa, tf.tset);
  pb = reduce(pb, tf.tset);
  MulCounter counter;
  QPoly r = mul_mod(pa, pb, tf.tset);
  return py::make_tuple(format_poly(raise_level(r, n + 1), tf.vars), counter.count());
}

py::dict py_inv(const std::string& tset, const std::string& a) {
  TsetFile tf = load(tset);
  const int n = tf.tset.size();
  QPoly u = lower_level(parse_poly(a, tf.vars), n);
  auto r = inv_mod(u, tf.tset);
  py::dict out;
  if (auto* unit = std::get_if<Unit<RationalField>>(&r)) {
    out["unit"] = format_poly(raise_level(unit->value, n + 1), tf.vars);
  } else {
    const auto& zd = std::get<ZdSignal<RationalField>>(r);
    out["zero_divisor"] = format_poly(raise_level(zd.witness, n + 1), tf.vars);
    out["level"] = zd.level;
  }
  return out;
}

py::object radical(const std::string& tset, std::uint32_t p) {
  TsetFile tf = load(tset);
  RadicalVerdict v = is_radical_prime(tf.tset, p);
  if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&v)) {
    QPoly w = map_coeffs<RationalField>(zd->witness, [p](std::uint32_t c) {
      return c > p / 2 ? mpq_class(-static_cast<long>(p - c)) : mpq_class(static_cast<unsigned long>(c));
    });
    return py::str(format_poly(raise_level(w, tf.tset.size() + 1), tf.vars));
  }
  return py::bool_(std::get<bool>(v));
}

py::object reconstruct(const py::int_& c, const py::int_& m) {
  auto q = rational_reconstruction(mpz_class(std::string(py::str(c))), mpz_class(std::string(py::str(m))));
  if (!q) return py::none();
  return py::make_tuple(py::int_(py::str(q->get_num().get_str())), py::int_(py::str(q->get_den().get_str())));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Componentwise gcds over Q[z1..zn]/T";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TsetError>(m, "TsetError", PyExc_ValueError);
  py::register_exception<NotRadical>(m, "NotRadical", PyExc_RuntimeError);

  m.def("gcd", &py_gcd, py::arg("tset"), py::arg("a"), py::arg("b"), py::arg("check_prime") = true,
        py::arg("jobs") = 1u);
  m.def("mul", &py_mul, py::arg("tset"), py::arg("a"), py::arg("b"),
        "Product modulo T and the number of field multiplications spent.");
  m.def("inv", &py_inv, py::arg("tset"), py::arg("a"));
  m.def("is_radical_prime", &radical, py::arg("tset"), py::arg("p"));
  m.def("mul_cost_bound", [](const std::vector<std::uint64_t>& d) { return mul_cost_bound(MulCostModel{d}); });
  m.def("rational_reconstruction", &reconstruct, py::arg("c"), py::arg("m"));
  m.def("canonical", [](const std::string& tset, const std::string& expr) {
    TsetFile tf = load(tset);
    return format_poly(parse_poly(expr, tf.vars), tf.vars);
  });
}
