#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

class MonomialIdeal;

/// A monomial prime ideal: the ideal generated by a subset of the variables.
/// Fully determined by that subset; dim S/P = n - |variables|.
class MonomialPrime {
public:
  MonomialPrime(VariableSet ambient, std::vector<std::size_t> variables);

  const VariableSet& ambient() const { return ambient_; }
  /// Sorted, duplicate-free variable indices.
  const std::vector<std::size_t>& variables() const { return vars_; }
  bool contains_variable(std::size_t j) const;
  std::size_t height() const { return vars_.size(); }
  /// dim S/P = n - height.
  std::size_t quotient_dim() const { return ambient_.size() - vars_.size(); }

  bool subset_of(const MonomialPrime& other) const;

  /// The same prime viewed in the ring with variable j removed.
  /// Requires j not among the prime's variables.
  MonomialPrime project(std::size_t j) const;

  MonomialIdeal to_ideal() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.ambient_ == b.ambient_ && a.vars_ == b.vars_;
  }
  friend bool operator!=(const MonomialPrime& a, const MonomialPrime& b) { return !(a == b); }
  /// Order by (height, variable list); used to keep prime sets canonical.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b);

private:
  VariableSet ambient_;
  std::vector<std::size_t> vars_;
};

/// A monomial ideal held in canonical form: the unique minimal monomial
/// generating set, sorted lexicographically by exponent vector. Equal ideals
/// therefore have identical representations.
///
/// The zero ideal is the empty generator set; the unit ideal is {1}.
class MonomialIdeal {
public:
  static MonomialIdeal zero(VariableSet ambient);
  static MonomialIdeal unit(VariableSet ambient);
  /// Minimalize: drop every generator divisible by another, collapse to the
  /// unit ideal if 1 occurs among the generators.
  static MonomialIdeal make(VariableSet ambient, std::vector<Monomial> generators);

  const VariableSet& ambient() const { return ambient_; }
  std::span<const Monomial> generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  /// Membership: some minimal generator divides u.
  bool contains(const Monomial& u) const;
  bool contains_exponents(std::span<const int> exps) const;

  MonomialIdeal colon(const Monomial& a) const;

  /// Adjoin one monomial and re-minimalize: (I, u).
  MonomialIdeal adjoin(const Monomial& u) const;

  /// The prime this ideal is, if it is one: every minimal generator must
  /// have total degree 1. The zero ideal is the prime on no variables; the
  /// unit ideal is not prime.
  std::optional<MonomialPrime> as_prime() const;

  /// Minimal primes over a proper nonzero ideal: the inclusion-minimal
  /// variable subsets meeting the support of every minimal generator.
  std::vector<MonomialPrime> minimal_primes() const;

  /// Image under the map sending variable j to 1, over the projected
  /// ambient: coordinate j of every generator is deleted, then the result
  /// is minimalized.
  MonomialIdeal localize(std::size_t j) const;

  /// Componentwise max of the minimal generator exponents (the exponent of
  /// the generators' lcm). Zero vector for the zero and unit ideals.
  std::vector<int> generator_exponent_bound() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
  MonomialIdeal(VariableSet ambient, std::vector<Monomial> canonical_gens);

  VariableSet ambient_;
  std::vector<Monomial> gens_;
};

}  // namespace stanley
