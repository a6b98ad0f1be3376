#include "stanley/sdepth.hpp"

#include <algorithm>
#include <string>

#include "stanley/detail/box.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

using detail::dominates;
using detail::next_in_box;

// Exact-cover backtracking over the poset points. Every interval partition
// arises exactly once by repeatedly covering the lexicographically least
// uncovered point p with an interval [p, d]: any interval containing p has
// an uncovered lower bound c <= p, and c <= p componentwise forces c = p.
class PartitionSearch {
public:
  PartitionSearch(const CharacteristicPoset& poset, std::uint64_t max_nodes)
      : poset_(poset), max_nodes_(max_nodes), covered_(poset.size(), 0) {}

  bool try_cover(int target) {
    std::fill(covered_.begin(), covered_.end(), 0);
    chosen_.clear();
    build_candidates(target);
    return cover(target, 0);
  }

  const std::vector<Interval>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  // Admissible uppers per point at the current threshold. Skipped for huge
  // posets, where the quadratic table would dominate everything else.
  static constexpr std::size_t kForwardCheckLimit = 1500;

  void build_candidates(int target) {
    candidates_.clear();
    if (poset_.size() > kForwardCheckLimit)
      return;
    candidates_.resize(poset_.size());
    for (std::size_t q = 0; q < poset_.size(); ++q) {
      candidates_[q].clear();
      for (std::size_t d = q; d < poset_.size(); ++d)
        if (poset_.rho(d) >= target && dominates(poset_.point(d), poset_.point(q)))
          candidates_[q].push_back(d);
    }
  }

  // A point all of whose admissible uppers are covered can never be covered
  // later; placements that strand one are dead ends.
  bool no_point_stranded() const {
    if (candidates_.empty())
      return true;
    for (std::size_t q = 0; q < covered_.size(); ++q) {
      if (covered_[q])
        continue;
      bool viable = std::any_of(candidates_[q].begin(), candidates_[q].end(),
                                [&](std::size_t d) { return !covered_[d]; });
      if (!viable)
        return false;
    }
    return true;
  }

  bool cover(int target, std::size_t scan_from) {
    if (++nodes_ > max_nodes_)
      throw ResourceLimitError("search node budget exhausted");
    std::size_t first = scan_from;
    while (first < covered_.size() && covered_[first])
      ++first;
    if (first == covered_.size())
      return true;

    const std::vector<int>& p = poset_.point(first);
    std::vector<std::size_t> members;
    for (std::size_t q = first; q < poset_.size(); ++q) {
      if (poset_.rho(q) < target || covered_[q])
        continue;
      const std::vector<int>& d = poset_.point(q);
      if (!dominates(d, p))
        continue;
      if (!collect_free_interval(p, d, members))
        continue;
      for (std::size_t m : members)
        covered_[m] = 1;
      chosen_.push_back(Interval{p, d});
      if (no_point_stranded() && cover(target, first + 1))
        return true;
      chosen_.pop_back();
      for (std::size_t m : members)
        covered_[m] = 0;
    }
    return false;
  }

  // Indices of the points in [lower, upper]; fails if any is covered.
  bool collect_free_interval(const std::vector<int>& lower, const std::vector<int>& upper,
                             std::vector<std::size_t>& out) {
    out.clear();
    std::vector<int> e = lower;
    do {
      auto idx = poset_.index_of(e);
      if (!idx)
        throw Error("internal: interval element missing from a downward-closed poset");
      if (covered_[*idx])
        return false;
      out.push_back(*idx);
    } while (next_in_box(e, lower, upper));
    return true;
  }

  const CharacteristicPoset& poset_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<char> covered_;
  std::vector<Interval> chosen_;
  std::vector<std::vector<std::size_t>> candidates_;
};

}  // namespace

SdepthResult sdepth(const MonomialIdeal& ideal, const SearchLimits& limits) {
  CharacteristicPoset poset = CharacteristicPoset::build(ideal, limits.max_poset_points);
  int max_rho = 0;
  for (std::size_t i = 0; i < poset.size(); ++i)
    max_rho = std::max(max_rho, poset.rho(i));
  int t_hi = std::min<int>(static_cast<int>(ideal.ambient().size()), max_rho);

  PartitionSearch search(poset, limits.max_nodes);
  for (int t = t_hi; t >= 0; --t) {
    if (!search.try_cover(t))
      continue;
    SdepthResult result;
    result.value = t;
    result.partition.intervals = search.chosen();
    return result;
  }
  // target 0 admits the all-singletons partition; unreachable.
  throw Error("internal: no interval partition found");
}

StanleyDecomposition partition_to_decomposition(const MonomialIdeal& ideal,
                                                const IntervalPartition& partition,
                                                const SearchLimits& limits) {
  if (ideal.is_unit())
    throw DomainError("the unit ideal has no Stanley decomposition");
  CharacteristicPoset poset = ideal.is_zero()
                                  ? CharacteristicPoset::trivial(ideal)
                                  : CharacteristicPoset::build(ideal, limits.max_poset_points);
  const std::size_t n = ideal.ambient().size();
  std::span<const int> g = poset.g();

  std::vector<char> covered(poset.size(), 0);
  for (const Interval& iv : partition.intervals) {
    if (iv.lower.size() != n || iv.upper.size() != n)
      throw DomainError("interval dimension does not match the variable set");
    if (!dominates(iv.upper, iv.lower))
      throw DomainError("interval lower bound does not divide its upper bound");
    if (!poset.index_of(iv.upper))
      throw DomainError("interval upper bound is not a poset point");
    std::vector<int> e = iv.lower;
    do {
      auto idx = poset.index_of(e);
      if (!idx)
        throw DomainError("interval contains a non-poset point");
      if (covered[*idx])
        throw DomainError("intervals overlap");
      covered[*idx] = 1;
    } while (next_in_box(e, iv.lower, iv.upper));
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i])
      throw DomainError("partition does not cover the whole poset");

  std::vector<StanleySpace> spaces;
  spaces.reserve(partition.intervals.size());
  for (const Interval& iv : partition.intervals) {
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
      if (iv.upper[j] == g[j])
        free.push_back(j);
    spaces.emplace_back(Monomial(ideal.ambient(), iv.lower), std::move(free));
  }
  StanleyDecomposition result(ideal, std::move(spaces));
  VerifyResult check = result.verify();
  if (!check.ok())
    throw Error("internal: decomposition from a valid partition failed verification (" +
                check.describe() + ")");
  return result;
}

int sdepth_quotient(const MonomialIdeal& ideal, const SearchLimits& limits) {
  if (ideal.is_zero())
    return static_cast<int>(ideal.ambient().size());
  return sdepth(ideal, limits).value;
}

}  // namespace stanley
