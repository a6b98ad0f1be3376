#pragma once

#include <span>
#include <vector>

#include "stanley/variable_set.hpp"

namespace stanley {

/// A monomial over an ambient VariableSet, stored as its exponent vector.
/// All exponents are >= 0; the all-zeros vector is the monomial 1.
/// Immutable; every operation returns a fresh value.
class Monomial {
public:
  Monomial(VariableSet ambient, std::vector<int> exponents);

  static Monomial one(VariableSet ambient);
  static Monomial variable(const VariableSet& ambient, std::size_t j, int power = 1);

  const VariableSet& ambient() const { return ambient_; }
  std::size_t size() const { return exps_.size(); }
  int exponent(std::size_t j) const { return exps_[j]; }
  std::span<const int> exponents() const { return exps_; }
  long long total_degree() const;
  bool is_one() const;
  /// Indices of the variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  /// Image under the ring map sending variable j to 1: coordinate j is
  /// deleted and the ambient shrinks accordingly.
  Monomial project(std::size_t j) const;

  /// this / gcd(this, a): the generator transform of the colon formula.
  Monomial colon_by(const Monomial& a) const;

  friend bool divides(const Monomial& u, const Monomial& v);
  friend Monomial gcd(const Monomial& u, const Monomial& v);
  friend Monomial lcm(const Monomial& u, const Monomial& v);
  friend Monomial operator*(const Monomial& u, const Monomial& v);

  friend bool operator==(const Monomial& u, const Monomial& v) {
    return u.ambient_ == v.ambient_ && u.exps_ == v.exps_;
  }
  friend bool operator!=(const Monomial& u, const Monomial& v) { return !(u == v); }

private:
  VariableSet ambient_;
  std::vector<int> exps_;
};

/// Strict total order on monomials of one ambient: lexicographic on the
/// exponent vector. Used for canonical storage of generator sets.
bool lex_less(const Monomial& u, const Monomial& v);

}  // namespace stanley
