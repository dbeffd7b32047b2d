#pragma once

// Componentwise gcd over Q[z_1..z_n]/<T> by the modular algorithm.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tsgcd/hensel.hpp"
#include "tsgcd/modp.hpp"

namespace tsgcd {

class NotRadical : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidFactorization : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Component {
  QTset tset;
  QPoly gcd;  // monic in the main variable, or zero
};

struct SplitEvent {
  int level = 0;
  QPoly u;
  QPoly v;
  QTset base;  // T_{level-1} at the time of the split
};

struct CGcdStats {
  std::size_t primes_used = 0;
  double seconds = 0;
  double divide_seconds = 0;
};

struct CGcdResult {
  std::vector<Component> components;
  std::vector<SplitEvent> splits;
  CGcdStats stats;
};

struct CGcdOptions {
  bool check_prime = true;
  std::uint32_t first_prime = 2147483647u;
  std::size_t max_primes = 20000;
  int nonradical_limit = 64;
  unsigned jobs = 1;
};

bool is_prime(std::uint32_t n);

/// Primes below 2^31 in descending order.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint32_t start = 2147483647u) : next_(start) {}
  std::uint32_t next();

 private:
  std::uint32_t next_;
};

/// Next prime that is not bad for (T, a, b).
std::uint32_t next_prime(PrimeStream& stream, const QTset& T, const QPoly& a, const QPoly& b);

/// Exact test h | a in R[x].
bool trial_divide(const QPoly& h, const QPoly& a, const QTset& T);

/// Replaces t_k by u and by v, re-reducing the generators above k.
std::pair<QTset, QTset> split_tset(const QTset& T, int k, const QPoly& u, const QPoly& v);

CGcdResult modular_cgcd(const QPoly& a, const QPoly& b, const QTset& T, const CGcdOptions& options = {});

/// Structural total order, used for canonical component ordering.
template <class F>
int compare(const Poly<F>& a, const Poly<F>& b) {
  if (a.level() != b.level()) return a.level() < b.level() ? -1 : 1;
  if (a.level() == 0) {
    if (a.value() == b.value()) return 0;
    return a.value() < b.value() ? -1 : 1;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = compare(a.term(static_cast<std::size_t>(i)), b.term(static_cast<std::size_t>(i)));
    if (c != 0) return c;
  }
  return 0;
}

void canonical_order(std::vector<Component>& components);

}  // namespace tsgcd
