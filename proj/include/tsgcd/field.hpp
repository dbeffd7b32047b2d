#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tsgcd {

/// Counts base-field multiplications performed on the current thread while
/// an instance is alive.  Instances nest; only the innermost one counts.
class MulCounter {
 public:
  MulCounter() : prev_(active_) { active_ = this; }
  ~MulCounter() { active_ = prev_; }
  MulCounter(const MulCounter&) = delete;
  MulCounter& operator=(const MulCounter&) = delete;

  std::uint64_t count() const noexcept { return count_; }
  void reset() noexcept { count_ = 0; }

  static void tick() noexcept {
    if (active_ != nullptr) ++active_->count_;
  }

 private:
  MulCounter* prev_;
  std::uint64_t count_ = 0;
  inline static thread_local MulCounter* active_ = nullptr;
};

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The rationals, with values kept in lowest terms.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const {
    MulCounter::tick();
    return a * b;
  }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw FieldError("inverse of zero");
    return 1 / a;
  }

  bool operator==(const RationalField&) const = default;
};

/// Z/pZ for a prime p < 2^31.  Residues are canonical, in [0, p).
struct PrimeField {
  using value_type = std::uint32_t;

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime < 2 || prime >= (1u << 31)) throw FieldError("prime out of range: " + std::to_string(prime));
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    MulCounter::tick();
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("inverse of zero mod " + std::to_string(p));
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    if (s0 < 0) s0 += p;
    return static_cast<value_type>(s0);
  }

  bool operator==(const PrimeField&) const = default;
};

/// Integer coefficients; used for CRT images and Hensel lifts.  Not a field,
/// so the division-based algorithms are never instantiated on it.
struct IntegerRing {
  using value_type = mpz_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }

  bool operator==(const IntegerRing&) const = default;
};

}  // namespace tsgcd
