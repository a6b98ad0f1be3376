#include "stanley/decomposition.hpp"

#include <algorithm>

#include "stanley/detail/box.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr unsigned long long kMaxBoxCells = 100'000'000ULL;

}  // namespace

StanleySpace::StanleySpace(Monomial offset, std::vector<std::size_t> free_vars)
    : offset_(std::move(offset)), free_(std::move(free_vars)) {
  std::sort(free_.begin(), free_.end());
  free_.erase(std::unique(free_.begin(), free_.end()), free_.end());
  if (!free_.empty() && free_.back() >= offset_.size())
    throw DomainError("free variable index out of range");
}

bool StanleySpace::is_free(std::size_t j) const {
  return std::binary_search(free_.begin(), free_.end(), j);
}

bool StanleySpace::contains(const Monomial& u) const {
  if (u.ambient() != ambient())
    throw AmbientMismatchError("space membership: different variable sets");
  return contains_exponents(u.exponents());
}

bool StanleySpace::contains_exponents(std::span<const int> exps) const {
  auto off = offset_.exponents();
  std::size_t next_free = 0;
  for (std::size_t j = 0; j < off.size(); ++j) {
    bool free = next_free < free_.size() && free_[next_free] == j;
    if (free) {
      ++next_free;
      if (exps[j] < off[j])
        return false;
    } else if (exps[j] != off[j]) {
      return false;
    }
  }
  return true;
}

StanleySpace StanleySpace::project(std::size_t j) const {
  if (!is_free(j))
    throw DomainError("cannot localize a space along a bound variable");
  std::vector<std::size_t> mapped;
  mapped.reserve(free_.size() - 1);
  for (std::size_t v : free_)
    if (v != j)
      mapped.push_back(v > j ? v - 1 : v);
  return StanleySpace(offset_.project(j), std::move(mapped));
}

bool operator<(const StanleySpace& a, const StanleySpace& b) {
  if (a.offset_ != b.offset_)
    return lex_less(a.offset_, b.offset_);
  return a.free_ < b.free_;
}

std::string VerifyResult::describe() const {
  switch (kind) {
    case Kind::valid:
      return "Valid";
    case Kind::overlap:
      return "Overlap";
    case Kind::gap:
      return "Gap";
    case Kind::leak:
      return "Leak";
  }
  return "?";
}

StanleyDecomposition::StanleyDecomposition(MonomialIdeal ideal, std::vector<StanleySpace> spaces)
    : ideal_(std::move(ideal)), spaces_(std::move(spaces)) {
  for (const auto& s : spaces_)
    if (s.ambient() != ideal_.ambient())
      throw AmbientMismatchError("space lives over a different variable set than the ideal");
}

VerifyResult StanleyDecomposition::verify() const {
  const std::size_t n = ambient().size();
  std::vector<int> bound = ideal_.generator_exponent_bound();
  for (const auto& s : spaces_) {
    auto off = s.offset().exponents();
    for (std::size_t j = 0; j < n; ++j)
      bound[j] = std::max(bound[j], off[j]);
  }
  unsigned long long cells = 1;
  for (std::size_t j = 0; j < n; ++j) {
    bound[j] += 1;
    cells *= static_cast<unsigned long long>(bound[j]) + 1;
    if (cells > kMaxBoxCells)
      throw ResourceLimitError("verification box too large");
  }

  std::vector<int> e(n, 0);
  do {
    bool in_ideal = ideal_.contains_exponents(e);
    int covered = 0;
    for (const auto& s : spaces_) {
      if (s.contains_exponents(e)) {
        ++covered;
        if (covered > 1 && !in_ideal)
          break;
      }
    }
    auto witness = [&] { return Monomial(ambient(), e); };
    if (in_ideal && covered >= 1)
      return {VerifyResult::Kind::leak, witness()};
    if (!in_ideal && covered >= 2)
      return {VerifyResult::Kind::overlap, witness()};
    if (!in_ideal && covered == 0)
      return {VerifyResult::Kind::gap, witness()};
  } while (detail::next_in_box(e, bound));
  return VerifyResult::valid();
}

int StanleyDecomposition::sdepth() const {
  if (spaces_.empty()) {
    if (ideal_.is_unit())
      return 0;
    throw DomainError("a decomposition of a proper quotient has at least one space");
  }
  std::size_t d = spaces_.front().dimension();
  for (const auto& s : spaces_)
    d = std::min(d, s.dimension());
  return static_cast<int>(d);
}

StanleyDecomposition StanleyDecomposition::localize(std::size_t j) const {
  if (j >= ambient().size())
    throw DomainError("localize: variable index out of range");
  VerifyResult in = verify();
  if (!in.ok())
    throw DomainError("cannot localize an invalid decomposition (" + in.describe() + ")");

  std::vector<StanleySpace> image;
  for (const auto& s : spaces_)
    if (s.is_free(j))
      image.push_back(s.project(j));
  StanleyDecomposition out(ideal_.localize(j), std::move(image));

  // Localization of a valid decomposition stays valid; a failure here means
  // a bug in this module or the verifier.
  VerifyResult check = out.verify();
  if (!check.ok())
    throw Error("internal: localized decomposition failed verification (" + check.describe() +
                ")");
  return out;
}

bool operator==(const StanleyDecomposition& a, const StanleyDecomposition& b) {
  if (a.ideal_ != b.ideal_ || a.spaces_.size() != b.spaces_.size())
    return false;
  auto sa = a.spaces_;
  auto sb = b.spaces_;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace stanley
