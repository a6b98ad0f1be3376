#include "stanley/poset.hpp"

#include <algorithm>

#include "stanley/detail/box.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr unsigned long long kMaxBoxCells = 100'000'000ULL;

}  // namespace

CharacteristicPoset::CharacteristicPoset(MonomialIdeal ideal, std::vector<int> g,
                                         std::vector<std::vector<int>> points)
    : ideal_(std::move(ideal)), g_(std::move(g)), points_(std::move(points)) {
  rho_.reserve(points_.size());
  for (const auto& p : points_) {
    int r = 0;
    for (std::size_t j = 0; j < g_.size(); ++j)
      if (p[j] == g_[j])
        ++r;
    rho_.push_back(r);
  }
}

CharacteristicPoset CharacteristicPoset::build(const MonomialIdeal& ideal,
                                               std::size_t max_points) {
  if (ideal.is_unit() || ideal.is_zero())
    throw DomainError("characteristic poset requires a proper nonzero ideal");
  std::vector<int> g = ideal.generator_exponent_bound();

  unsigned long long cells = 1;
  for (int gj : g) {
    cells *= static_cast<unsigned long long>(gj) + 1;
    if (cells > kMaxBoxCells)
      throw ResourceLimitError("characteristic poset box too large");
  }

  std::vector<std::vector<int>> points;
  std::vector<int> e(g.size(), 0);
  do {
    if (!ideal.contains_exponents(e)) {
      if (points.size() >= max_points)
        throw ResourceLimitError("characteristic poset exceeds the configured point limit");
      points.push_back(e);
    }
  } while (detail::next_in_box(e, g));
  return CharacteristicPoset(ideal, std::move(g), std::move(points));
}

CharacteristicPoset CharacteristicPoset::trivial(const MonomialIdeal& zero_ideal) {
  if (!zero_ideal.is_zero())
    throw DomainError("trivial poset is defined for the zero ideal only");
  std::vector<int> g(zero_ideal.ambient().size(), 0);
  std::vector<std::vector<int>> points{g};
  return CharacteristicPoset(zero_ideal, std::move(g), std::move(points));
}

std::optional<std::size_t> CharacteristicPoset::index_of(std::span<const int> e) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), e,
                             [](const std::vector<int>& p, std::span<const int> key) {
                               return std::lexicographical_compare(p.begin(), p.end(), key.begin(),
                                                                   key.end());
                             });
  if (it == points_.end() || !std::equal(it->begin(), it->end(), e.begin(), e.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

}  // namespace stanley
