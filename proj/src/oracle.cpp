#include "tsgcd/oracle.hpp"

namespace tsgcd::oracle {

namespace {

using QZd = ZdSignal<RationalField>;

QTset replace(const QTset& T, int k, const QPoly& w) {
  std::vector<QPoly> gens(T.gens().begin(), T.gens().begin() + (k - 1));
  gens.push_back(w);
  for (int i = k + 1; i <= T.size(); ++i) {
    gens.push_back(reduce(T.gen(i), Tower<RationalField>(T.field(), gens)));
  }
  return QTset(T.field(), std::move(gens));
}

// Factors t_k as w * (t_k / w) where w | t_k is taken from the witness.
std::pair<QPoly, QPoly> factor_at(const QTset& T, const QZd& zd, QZd& deeper, bool& has_deeper) {
  const int k = zd.level;
  const QTset C = T.prefix(k - 1);
  const QPoly& tk = T.gen(k);
  QPoly w = zd.witness;
  DivRem<RationalField> qr = div_rem(tk, w, C);
  if (!qr.remainder.is_zero()) {
    auto g = monic_euclidean_cgcd(tk, w, C);
    if (auto* z = std::get_if<QZd>(&g)) {
      deeper = *z;
      has_deeper = true;
      return {};
    }
    w = std::get<Gcd<RationalField>>(g).value;
    if (w.degree() < 1 || w.degree() >= tk.degree()) throw std::logic_error("oracle: witness is not a zero-divisor");
    qr = div_rem(tk, w, C);
  }
  return {std::move(w), std::move(qr.quotient)};
}

// Splits T on a zero-divisor, following deeper witnesses as needed.
std::pair<QTset, QTset> split_on(const QTset& T, QZd zd, CGcdResult& out) {
  for (;;) {
    QZd deeper;
    bool has_deeper = false;
    auto [u, v] = factor_at(T, zd, deeper, has_deeper);
    if (has_deeper) {
      zd = std::move(deeper);
      continue;
    }
    out.splits.push_back({zd.level, u, v, T.prefix(zd.level - 1)});
    return {replace(T, zd.level, u), replace(T, zd.level, v)};
  }
}

void run(const QPoly& a, const QPoly& b, const QTset& T, CGcdResult& out) {
  auto r = monic_euclidean_cgcd(a, b, T);
  if (auto* g = std::get_if<Gcd<RationalField>>(&r)) {
    out.components.push_back({T, std::move(g->value)});
    return;
  }
  auto [Tu, Tv] = split_on(T, std::get<QZd>(r), out);
  run(a, b, Tu, out);
  run(a, b, Tv, out);
}

bool radical_from(const QTset& T, CGcdResult& scratch) {
  const RationalField f;
  for (int i = 1; i <= T.size(); ++i) {
    const QPoly& t = T.gen(i);
    auto g = monic_euclidean_cgcd(t, derivative(f, t), T.prefix(i - 1));
    if (auto* zd = std::get_if<QZd>(&g)) {
      auto [Tu, Tv] = split_on(T, *zd, scratch);
      return radical_from(Tu, scratch) && radical_from(Tv, scratch);
    }
    if (std::get<Gcd<RationalField>>(g).value.degree() != 0) return false;
  }
  return true;
}

}  // namespace

CGcdResult euclid_q_cgcd(const QPoly& a, const QPoly& b, const QTset& T) {
  if (a.level() != T.size() + 1 || b.level() != T.size() + 1) {
    throw std::invalid_argument("euclid_q_cgcd: operands must be polynomials in the main variable");
  }
  CGcdResult out;
  run(a, b, T, out);
  return out;
}

bool is_radical_q(const QTset& T) {
  CGcdResult scratch;
  return radical_from(T, scratch);
}

}  // namespace tsgcd::oracle
