#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// Budgets for the combinatorial searches. Exceeding one raises
/// ResourceLimitError; the work is exponential in the worst case and must
/// fail loudly rather than slowly.
struct SearchLimits {
  std::size_t max_poset_points = 5000;
  std::uint64_t max_nodes = 10'000'000;
};

/// The lattice points e with 0 <= e <= g outside the ideal, where g is the
/// componentwise lcm exponent of the minimal generators. Downward closed.
/// Points are stored in lexicographic order.
class CharacteristicPoset {
public:
  /// Requires a proper nonzero ideal.
  static CharacteristicPoset build(const MonomialIdeal& ideal,
                                   std::size_t max_points = SearchLimits{}.max_poset_points);

  /// The one-point poset {0} of the zero ideal, with g = 0. Outside the
  /// scope of build(), but the interval-to-space correspondence degenerates
  /// correctly on it (the single interval [0,0] maps to 1*K[all]).
  static CharacteristicPoset trivial(const MonomialIdeal& zero_ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::span<const int> g() const { return g_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<int>& point(std::size_t i) const { return points_[i]; }

  /// rho(d) = number of coordinates where d meets g.
  int rho(std::size_t i) const { return rho_[i]; }

  std::optional<std::size_t> index_of(std::span<const int> e) const;

private:
  CharacteristicPoset(MonomialIdeal ideal, std::vector<int> g,
                      std::vector<std::vector<int>> points);

  MonomialIdeal ideal_;
  std::vector<int> g_;
  std::vector<std::vector<int>> points_;
  std::vector<int> rho_;
};

/// Closed box [lower, upper] of lattice points, lower <= upper componentwise.
/// Inside a characteristic poset, upper being a point makes every element a
/// point (downward closure).
struct Interval {
  std::vector<int> lower;
  std::vector<int> upper;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

/// A list of intervals intended to partition a characteristic poset.
struct IntervalPartition {
  std::vector<Interval> intervals;
};

}  // namespace stanley
