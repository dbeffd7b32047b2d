#pragma once

// Random benchmark instances: T dense with two-digit coefficients, and
// A = a*g, B = b*g in R[x].

#include <cstdint>
#include <string>
#include <vector>

#include "tsgcd/cgcd.hpp"

namespace tsgcd {

struct BenchProfile {
  std::string name;
  int deg_a = 6;
  int deg_b = 5;
  int deg_g = 4;
  bool monic_g = false;

  static BenchProfile named(const std::string& name);
};

struct BenchInstance {
  QTset tset;
  QPoly g;
  QPoly A;
  QPoly B;
};

BenchInstance make_instance(const BenchProfile& profile, const std::vector<int>& degrees, std::uint64_t seed);

struct BenchRow {
  std::vector<int> degrees;
  double seconds = 0;
  double divide_seconds = 0;
  std::size_t primes = 0;
  std::size_t components = 0;
};

BenchRow run_bench(const BenchProfile& profile, const std::vector<int>& degrees, std::uint64_t seed,
                   const CGcdOptions& options = {});

}  // namespace tsgcd
