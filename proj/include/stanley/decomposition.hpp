#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// The vector space spanned by { offset * v : v supported on free_vars }:
/// exponent vectors that agree with the offset outside the free variables
/// and dominate it on them.
class StanleySpace {
public:
  StanleySpace(Monomial offset, std::vector<std::size_t> free_vars);

  const Monomial& offset() const { return offset_; }
  const VariableSet& ambient() const { return offset_.ambient(); }
  const std::vector<std::size_t>& free_vars() const { return free_; }
  std::size_t dimension() const { return free_.size(); }
  bool is_free(std::size_t j) const;

  bool contains(const Monomial& u) const;
  bool contains_exponents(std::span<const int> exps) const;

  /// Image under localization of a space with j free: coordinate j of the
  /// offset is deleted and j leaves the free set. Requires is_free(j).
  StanleySpace project(std::size_t j) const;

  friend bool operator==(const StanleySpace& a, const StanleySpace& b) {
    return a.offset_ == b.offset_ && a.free_ == b.free_;
  }
  friend bool operator!=(const StanleySpace& a, const StanleySpace& b) { return !(a == b); }
  friend bool operator<(const StanleySpace& a, const StanleySpace& b);

private:
  Monomial offset_;
  std::vector<std::size_t> free_;
};

/// Outcome of checking the partition condition for a decomposition.
struct VerifyResult {
  enum class Kind { valid, overlap, gap, leak };

  Kind kind = Kind::valid;
  std::optional<Monomial> witness;  // empty exactly when valid

  bool ok() const { return kind == Kind::valid; }
  std::string describe() const;

  static VerifyResult valid() { return {}; }
};

/// A claimed Stanley decomposition of S/I: a list of Stanley spaces meant to
/// partition the monomials outside the ideal. Validity is checked, never
/// assumed.
class StanleyDecomposition {
public:
  StanleyDecomposition(MonomialIdeal ideal, std::vector<StanleySpace> spaces);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::span<const StanleySpace> spaces() const { return spaces_; }
  const VariableSet& ambient() const { return ideal_.ambient(); }

  /// Decide whether the spaces partition the monomials outside the ideal.
  ///
  /// Enumerates the box [0, B]^n with B_j = 1 + the largest j-exponent among
  /// ideal generators and space offsets. Beyond B_j every comparison against
  /// offsets and generators saturates, so membership of any monomial equals
  /// membership of its coordinatewise cap; the finite box decides the
  /// infinite partition condition.
  VerifyResult verify() const;

  /// Minimum space dimension. Empty space list: 0 over the unit ideal,
  /// domain error over a proper ideal.
  int sdepth() const;

  /// Localize with respect to variable j: spaces with j free survive with j
  /// removed, the rest vanish; the ideal is localized. Requires a valid
  /// input decomposition; the result is re-verified.
  StanleyDecomposition localize(std::size_t j) const;

  /// Equality as unordered sets of spaces over equal ideals.
  friend bool operator==(const StanleyDecomposition& a, const StanleyDecomposition& b);
  friend bool operator!=(const StanleyDecomposition& a, const StanleyDecomposition& b) {
    return !(a == b);
  }

private:
  MonomialIdeal ideal_;
  std::vector<StanleySpace> spaces_;
};

}  // namespace stanley
