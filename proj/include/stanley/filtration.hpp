#pragma once

#include <span>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

/// One step of a prime filtration: adjoining the offset monomial to the
/// current ideal must produce it, and the colon of the current ideal by the
/// offset must equal the stated prime.
struct FiltrationStep {
  Monomial offset;
  MonomialPrime prime;

  friend bool operator==(const FiltrationStep& a, const FiltrationStep& b) {
    return a.offset == b.offset && a.prime == b.prime;
  }
};

struct FiltrationVerifyResult {
  bool valid = true;
  std::size_t bad_index = 0;  // steps().size() means the chain stopped short
  std::string reason;

  bool ok() const { return valid; }
  std::string describe() const;

  static FiltrationVerifyResult good() { return {}; }
  static FiltrationVerifyResult bad(std::size_t index, std::string why) {
    return {false, index, std::move(why)};
  }
};

/// A claimed prime filtration of S/I: a strictly increasing chain from the
/// ideal to the unit ideal with cyclic prime quotients, given by its step
/// offsets and primes. Validity is checked, never assumed.
class PrimeFiltration {
public:
  PrimeFiltration(MonomialIdeal ideal, std::vector<FiltrationStep> steps);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::span<const FiltrationStep> steps() const { return steps_; }
  const VariableSet& ambient() const { return ideal_.ambient(); }

  FiltrationVerifyResult verify() const;

  /// Distinct primes appearing among the steps, in canonical order.
  std::vector<MonomialPrime> support() const;

  /// Support equals the set of minimal primes of the ideal. Requires a valid
  /// filtration. Cross-checked against the equivalent formulation: support
  /// contains the minimal primes and has no containment between elements.
  bool is_clean() const;

  /// No earlier prime is strictly contained in a later one. Requires a
  /// valid filtration.
  bool is_pretty_clean() const;

  /// Minimum of dim S/P over the steps. Requires a valid filtration.
  /// 0 for an empty step list over the unit ideal.
  int fdepth() const;

  /// The induced Stanley decomposition: one space per step, offset kept,
  /// free variables = complement of the prime. Requires a valid filtration.
  StanleyDecomposition to_decomposition() const;

  /// Localize with respect to variable j: steps whose prime contains j
  /// vanish, the remaining offsets and primes are projected, and the ideal
  /// is localized. Requires a valid filtration; the result is valid again.
  PrimeFiltration localize(std::size_t j) const;

  friend bool operator==(const PrimeFiltration& a, const PrimeFiltration& b) {
    return a.ideal_ == b.ideal_ && a.steps_ == b.steps_;
  }
  friend bool operator!=(const PrimeFiltration& a, const PrimeFiltration& b) { return !(a == b); }

private:
  void require_valid(const char* op) const;

  MonomialIdeal ideal_;
  std::vector<FiltrationStep> steps_;
};

struct FdepthResult {
  int value = 0;
  PrimeFiltration filtration;   // witness achieving the value
  std::vector<int> offset_box;  // the offset bound the search used
};

/// Maximum fdepth over the prime filtrations of S/I whose offsets stay in
/// the box [0, g + margin], for a proper nonzero ideal. Backtracking over
/// candidate offsets whose colon is prime, pruning branches that cannot
/// strictly beat the incumbent.
///
/// Offsets outside the box never change a colon ideal (comparisons against
/// generators saturate), but the restriction is still a genuine search
/// bound; the margin widens it.
FdepthResult fdepth(const MonomialIdeal& ideal, const SearchLimits& limits = {},
                    int box_margin = 0);

}  // namespace stanley
