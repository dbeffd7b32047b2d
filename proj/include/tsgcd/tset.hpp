#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tsgcd/poly.hpp"

namespace tsgcd {

/// A generator list that violates one of the triangular-set conditions.
class TsetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered generators t_1..t_n with t_i stored at level i, monic in z_i and
/// reduced with respect to t_1..t_{i-1}.
template <class F>
class TriangularSet {
 public:
  TriangularSet() = default;
  explicit TriangularSet(F field) : field_(std::move(field)) {}

  TriangularSet(F field, std::vector<Poly<F>> gens) : field_(std::move(field)), gens_(std::move(gens)) {
    validate();
  }

  const F& field() const noexcept { return field_; }
  int size() const noexcept { return static_cast<int>(gens_.size()); }
  bool empty() const noexcept { return gens_.empty(); }
  std::span<const Poly<F>> gens() const noexcept { return gens_; }

  /// t_k, 1-based.
  const Poly<F>& gen(int k) const { return gens_.at(static_cast<std::size_t>(k - 1)); }
  int mdeg(int k) const { return gen(k).degree(); }

  /// delta = product of the main degrees; 1 for the empty set.
  std::uint64_t degree() const {
    std::uint64_t d = 1;
    for (const auto& t : gens_) d *= static_cast<std::uint64_t>(t.degree());
    return d;
  }

  TriangularSet prefix(int k) const {
    if (k < 0 || k > size()) throw std::out_of_range("prefix length out of range");
    TriangularSet r(field_);
    r.gens_.assign(gens_.begin(), gens_.begin() + k);
    return r;
  }

  friend bool operator==(const TriangularSet& a, const TriangularSet& b) {
    return a.field_ == b.field_ && a.gens_ == b.gens_;
  }

 private:
  void validate() const {
    for (int i = 1; i <= size(); ++i) {
      const auto& t = gen(i);
      const std::string name = "t" + std::to_string(i);
      if (t.level() != i || t.degree() < 1) {
        throw TsetError("condition (ii): main variable of " + name + " must be z" + std::to_string(i));
      }
      if (!t.is_monic()) throw TsetError("condition (iii): " + name + " is not monic in z" + std::to_string(i));
      for (int j = 1; j < i; ++j) {
        if (degree_in(t, j) >= gen(j).degree()) {
          throw TsetError("condition (iv): deg_z" + std::to_string(j) + "(" + name + ") must be below mdeg(t" +
                          std::to_string(j) + ")");
        }
      }
    }
  }

  F field_{};
  std::vector<Poly<F>> gens_;
};

using QTset = TriangularSet<RationalField>;
using PTset = TriangularSet<PrimeField>;

/// Non-owning view of the first n generators of a triangular set.  All ring
/// algorithms take a Tower so that recursion into T_{k-1} never copies.
template <class F>
class Tower {
 public:
  Tower(const TriangularSet<F>& t)  // NOLINT(google-explicit-constructor)
      : field_(&t.field()), gens_(t.gens()) {}
  Tower(const F& field, std::span<const Poly<F>> gens) : field_(&field), gens_(gens) {}

  const F& field() const noexcept { return *field_; }
  int size() const noexcept { return static_cast<int>(gens_.size()); }
  const Poly<F>& gen(int k) const { return gens_[static_cast<std::size_t>(k - 1)]; }
  int mdeg(int k) const { return gen(k).degree(); }
  Tower prefix(int k) const { return Tower(*field_, gens_.first(static_cast<std::size_t>(k))); }
  std::span<const Poly<F>> gens() const noexcept { return gens_; }

  TriangularSet<F> materialize() const { return TriangularSet<F>(*field_, {gens_.begin(), gens_.end()}); }

 private:
  const F* field_;
  std::span<const Poly<F>> gens_;
};

/// Tower parameter that does not take part in template argument deduction,
/// so a TriangularSet converts implicitly.
template <class F>
using TowerOf = std::type_identity_t<Tower<F>>;

}  // namespace tsgcd
