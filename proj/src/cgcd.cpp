#include "tsgcd/cgcd.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <future>
#include <string>

namespace tsgcd {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e != 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool divides_denominator(const QPoly& a, unsigned long p) {
  bool hit = false;
  for_each_value(a, [&](const mpq_class& c) {
    if (!hit && mpz_divisible_ui_p(c.get_den().get_mpz_t(), p) != 0) hit = true;
  });
  return hit;
}

bool lc_vanishes(const QPoly& a, std::uint32_t p) {
  if (a.is_zero()) return false;
  return project_mod_p(a.lc(), p).is_zero();
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic below 2^32.
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t PrimeStream::next() {
  while (next_ >= 2) {
    const std::uint32_t c = next_--;
    if (is_prime(c)) return c;
  }
  throw Exhausted("prime stream exhausted");
}

std::uint32_t next_prime(PrimeStream& stream, const QTset& T, const QPoly& a, const QPoly& b) {
  for (;;) {
    const std::uint32_t p = stream.next();
    bool bad = divides_denominator(a, p) || divides_denominator(b, p);
    for (const auto& t : T.gens()) bad = bad || divides_denominator(t, p);
    if (bad) continue;
    if (lc_vanishes(a, p) || lc_vanishes(b, p)) continue;
    return p;
  }
}

bool trial_divide(const QPoly& h, const QPoly& a, const QTset& T) {
  if (h.is_zero()) return reduce(a, T).is_zero();
  return div_rem(a, h, T).remainder.is_zero();
}

std::pair<QTset, QTset> split_tset(const QTset& T, int k, const QPoly& u, const QPoly& v) {
  if (k < 1 || k > T.size()) throw InvalidFactorization("split level out of range");
  for (const QPoly* w : {&u, &v}) {
    if (w->level() != k || w->degree() < 1 || !w->is_monic()) {
      throw InvalidFactorization("split factors must be monic and non-constant in z" + std::to_string(k));
    }
  }
  const QTset lower = T.prefix(k - 1);
  if (!(mul_mod(u, v, lower) == T.gen(k))) {
    throw InvalidFactorization("u*v differs from t" + std::to_string(k));
  }
  auto build = [&](const QPoly& w) {
    std::vector<QPoly> gens(T.gens().begin(), T.gens().begin() + (k - 1));
    gens.push_back(w);
    for (int i = k + 1; i <= T.size(); ++i) {
      gens.push_back(reduce(T.gen(i), Tower<RationalField>(T.field(), gens)));
    }
    return QTset(T.field(), std::move(gens));
  };
  return {build(u), build(v)};
}

void canonical_order(std::vector<Component>& components) {
  std::sort(components.begin(), components.end(), [](const Component& x, const Component& y) {
    const auto gx = x.tset.gens();
    const auto gy = y.tset.gens();
    if (gx.size() != gy.size()) return gx.size() < gy.size();
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const int c = compare(gx[i], gy[i]);
      if (c != 0) return c < 0;
    }
    return compare(x.gcd, y.gcd) < 0;
  });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Image {
  enum Kind { NonRadical, ZeroDivisor, Image_Gcd } kind = NonRadical;
  std::uint32_t p = 0;
  ZdSignal<PrimeField> zd;
  PPoly g;
};

Image compute_image(const QTset& T, const QPoly& a, const QPoly& b, std::uint32_t p) {
  Image im;
  im.p = p;
  const PTset Tp = project_mod_p(T, p);
  RadicalVerdict rad = is_radical(Tp);
  if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&rad)) {
    im.kind = Image::ZeroDivisor;
    im.zd = std::move(*zd);
    return im;
  }
  if (!std::get<bool>(rad)) return im;
  auto r = monic_euclidean_cgcd(project_mod_p(a, p), project_mod_p(b, p), Tp);
  if (auto* zd = std::get_if<ZdSignal<PrimeField>>(&r)) {
    im.kind = Image::ZeroDivisor;
    im.zd = std::move(*zd);
    return im;
  }
  im.kind = Image::Image_Gcd;
  im.g = std::move(std::get<Gcd<PrimeField>>(r).value);
  return im;
}

class Driver {
 public:
  Driver(const CGcdOptions& options, CGcdResult& out) : options_(options), out_(out), stream_(options.first_prime) {}

  void run(QPoly a, QPoly b, const QTset& T, LiftBound bound) {
    a = reduce(a, T);
    b = reduce(b, T);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (a.is_zero()) {
      out_.components.push_back({T, std::move(a)});
      return;
    }

    ZPoly G;
    mpz_class M = 1;
    int dg = 0;
    auto fold = [&](const PPoly& g, std::uint32_t p) {
      const int d = g.degree();
      if (M == 1 || d < dg) {
        G = to_integers(g);
        M = p;
        dg = d;
      } else if (d == dg) {
        G = crt_combine(G, M, g, p);
        M *= p;
      }
    };

    std::deque<Image> pending;
    auto fetch = [&]() {
      if (pending.empty()) fill(pending, T, a, b);
      Image im = std::move(pending.front());
      pending.pop_front();
      return im;
    };

    int nonradical = 0;
    for (;;) {
      Image im = fetch();
      if (im.kind == Image::NonRadical) {
        if (++nonradical >= options_.nonradical_limit) throw NotRadical("T is not radical modulo any tried prime");
        continue;
      }
      nonradical = 0;
      if (im.kind == Image::ZeroDivisor) {
        if (resolve(a, b, T, im, bound)) return;
        continue;
      }
      fold(im.g, im.p);

      auto h = rational_reconstruction(G, M);
      if (!h) continue;

      if (options_.check_prime) {
        Image chk = fetch();
        if (chk.kind == Image::NonRadical) continue;
        if (chk.kind == Image::ZeroDivisor) {
          if (resolve(a, b, T, chk, bound)) return;
          continue;
        }
        if (!agrees(*h, chk.g, chk.p)) {
          fold(chk.g, chk.p);
          continue;
        }
      }

      const auto t0 = Clock::now();
      const bool ok = trial_divide(*h, a, T) && trial_divide(*h, b, T);
      out_.stats.divide_seconds += std::chrono::duration<double>(Clock::now() - t0).count();
      if (ok) {
        out_.components.push_back({T, std::move(*h)});
        return;
      }
    }
  }

 private:
  std::uint32_t draw(const QTset& T, const QPoly& a, const QPoly& b) {
    if (++out_.stats.primes_used > options_.max_primes) {
      throw ResourceLimit("more than " + std::to_string(options_.max_primes) + " primes needed");
    }
    return next_prime(stream_, T, a, b);
  }

  void fill(std::deque<Image>& pending, const QTset& T, const QPoly& a, const QPoly& b) {
    if (options_.jobs <= 1) {
      pending.push_back(compute_image(T, a, b, draw(T, a, b)));
      return;
    }
    std::vector<std::future<Image>> futures;
    for (unsigned j = 0; j < options_.jobs; ++j) {
      const std::uint32_t p = draw(T, a, b);
      futures.push_back(std::async(std::launch::async, [&T, &a, &b, p] { return compute_image(T, a, b, p); }));
    }
    for (auto& f : futures) pending.push_back(f.get());
  }

  static bool agrees(const QPoly& h, const PPoly& g, std::uint32_t p) {
    try {
      return project_mod_p(h, p) == g;
    } catch (const BadPrime&) {
      return false;
    }
  }

  bool resolve(const QPoly& a, const QPoly& b, const QTset& T, const Image& im, LiftBound& bound) {
    SplitOutcome outcome = handle_zero_divisor(T, im.p, im.zd, bound);
    auto* split = std::get_if<Split>(&outcome);
    if (split == nullptr) return false;
    auto [Tu, Tv] = split_tset(T, split->level, split->u, split->v);
    out_.splits.push_back({split->level, split->u, split->v, T.prefix(split->level - 1)});
    run(a, b, Tu, bound);
    run(a, b, Tv, bound);
    return true;
  }

  const CGcdOptions& options_;
  CGcdResult& out_;
  PrimeStream stream_;
};

}  // namespace

CGcdResult modular_cgcd(const QPoly& a, const QPoly& b, const QTset& T, const CGcdOptions& options) {
  if (a.level() != T.size() + 1 || b.level() != T.size() + 1) {
    throw std::invalid_argument("modular_cgcd: operands must be polynomials in the main variable");
  }
  CGcdResult out;
  const auto t0 = Clock::now();
  Driver(options, out).run(a, b, T, LiftBound{});
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

}  // namespace tsgcd
