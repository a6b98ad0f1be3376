#include "stanley/filtration.hpp"

#include <algorithm>
#include <limits>

#include "stanley/detail/box.hpp"
#include "stanley/errors.hpp"
#include "stanley/io.hpp"

namespace stanley {

std::string FiltrationVerifyResult::describe() const {
  if (valid)
    return "Valid";
  return "BadStep(" + std::to_string(bad_index) + "): " + reason;
}

PrimeFiltration::PrimeFiltration(MonomialIdeal ideal, std::vector<FiltrationStep> steps)
    : ideal_(std::move(ideal)), steps_(std::move(steps)) {
  for (const auto& s : steps_) {
    if (s.offset.ambient() != ideal_.ambient() || s.prime.ambient() != ideal_.ambient())
      throw AmbientMismatchError("filtration step lives over a different variable set");
  }
}

FiltrationVerifyResult PrimeFiltration::verify() const {
  MonomialIdeal current = ideal_;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const FiltrationStep& step = steps_[k];
    if (current.contains(step.offset))
      return FiltrationVerifyResult::bad(
          k, "offset " + io::to_string(step.offset) + " already lies in the current ideal");
    MonomialIdeal colon = current.colon(step.offset);
    if (colon != step.prime.to_ideal())
      return FiltrationVerifyResult::bad(k, "colon by " + io::to_string(step.offset) + " is " +
                                                io::to_string(colon) + ", not the stated prime " +
                                                io::to_string(step.prime));
    current = current.adjoin(step.offset);
  }
  if (!current.is_unit())
    return FiltrationVerifyResult::bad(steps_.size(), "chain stops at the proper ideal " +
                                                          io::to_string(current));
  return FiltrationVerifyResult::good();
}

void PrimeFiltration::require_valid(const char* op) const {
  FiltrationVerifyResult r = verify();
  if (!r.ok())
    throw DomainError(std::string(op) + " requires a valid filtration: " + r.describe());
}

std::vector<MonomialPrime> PrimeFiltration::support() const {
  std::vector<MonomialPrime> supp;
  supp.reserve(steps_.size());
  for (const auto& s : steps_)
    supp.push_back(s.prime);
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return supp;
}

bool PrimeFiltration::is_clean() const {
  require_valid("cleanness");
  std::vector<MonomialPrime> supp = support();
  std::vector<MonomialPrime> min;
  if (ideal_.is_zero())
    min.push_back(MonomialPrime(ideal_.ambient(), {}));
  else if (!ideal_.is_unit())
    min = ideal_.minimal_primes();
  bool equal = supp == min;

  // Equivalent formulation, kept as a consistency check on both modules:
  // no containment within the support, and the support reaches down to
  // every minimal prime.
  bool incomparable = true;
  for (std::size_t a = 0; a < supp.size() && incomparable; ++a)
    for (std::size_t b = 0; b < supp.size(); ++b)
      if (a != b && supp[a].subset_of(supp[b])) {
        incomparable = false;
        break;
      }
  bool covers_min = std::all_of(min.begin(), min.end(), [&](const MonomialPrime& p) {
    return std::find(supp.begin(), supp.end(), p) != supp.end();
  });
  if (equal != (incomparable && covers_min))
    throw Error("internal: the two cleanness formulations disagree");
  return equal;
}

bool PrimeFiltration::is_pretty_clean() const {
  require_valid("pretty cleanness");
  for (std::size_t i = 0; i < steps_.size(); ++i)
    for (std::size_t j = i + 1; j < steps_.size(); ++j) {
      const MonomialPrime& pi = steps_[i].prime;
      const MonomialPrime& pj = steps_[j].prime;
      if (pi.subset_of(pj) && pi != pj)
        return false;
    }
  return true;
}

int PrimeFiltration::fdepth() const {
  require_valid("fdepth");
  if (steps_.empty())
    return 0;  // only the unit ideal verifies with no steps
  std::size_t d = steps_.front().prime.quotient_dim();
  for (const auto& s : steps_)
    d = std::min(d, s.prime.quotient_dim());
  return static_cast<int>(d);
}

StanleyDecomposition PrimeFiltration::to_decomposition() const {
  require_valid("decomposition extraction");
  const std::size_t n = ambient().size();
  std::vector<StanleySpace> spaces;
  spaces.reserve(steps_.size());
  for (const auto& s : steps_) {
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
      if (!s.prime.contains_variable(j))
        free.push_back(j);
    spaces.emplace_back(s.offset, std::move(free));
  }
  StanleyDecomposition result(ideal_, std::move(spaces));
  VerifyResult check = result.verify();
  if (!check.ok())
    throw Error("internal: decomposition induced by a valid filtration failed verification (" +
                check.describe() + ")");
  return result;
}

PrimeFiltration PrimeFiltration::localize(std::size_t j) const {
  if (j >= ambient().size())
    throw DomainError("localize: variable index out of range");
  require_valid("localization");

  std::vector<FiltrationStep> image;
  for (const auto& s : steps_) {
    if (s.prime.contains_variable(j))
      continue;  // the quotient of this step collapses to 0
    image.push_back(FiltrationStep{s.offset.project(j), s.prime.project(j)});
  }
  PrimeFiltration out(ideal_.localize(j), std::move(image));
  FiltrationVerifyResult check = out.verify();
  if (!check.ok())
    throw Error("internal: localized filtration failed verification: " + check.describe());
  return out;
}

namespace {

class FdepthSearch {
public:
  FdepthSearch(VariableSet ambient, std::vector<int> box, std::uint64_t max_nodes)
      : ambient_(std::move(ambient)), box_(std::move(box)), max_nodes_(max_nodes) {}

  void run(const MonomialIdeal& start) {
    explore(start, std::numeric_limits<int>::max());
  }

  int best() const { return best_; }
  std::vector<FiltrationStep> take_best_steps() { return std::move(best_steps_); }

private:
  void explore(const MonomialIdeal& current, int min_dim) {
    if (++nodes_ > max_nodes_)
      throw ResourceLimitError("search node budget exhausted");
    if (current.is_unit()) {
      best_ = min_dim;  // pruning guarantees a strict improvement
      best_steps_ = stack_;
      return;
    }
    std::vector<int> a(box_.size(), 0);
    do {
      if (current.contains_exponents(a))
        continue;
      Monomial offset(ambient_, a);
      MonomialIdeal colon = current.colon(offset);
      auto prime = colon.as_prime();
      if (!prime)
        continue;
      int dim = static_cast<int>(prime->quotient_dim());
      if (std::min(min_dim, dim) <= best_)
        continue;  // cannot strictly beat the incumbent
      stack_.push_back(FiltrationStep{offset, *prime});
      explore(current.adjoin(offset), std::min(min_dim, dim));
      stack_.pop_back();
    } while (detail::next_in_box(a, box_));
  }

  VariableSet ambient_;
  std::vector<int> box_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  int best_ = -1;
  std::vector<FiltrationStep> stack_;
  std::vector<FiltrationStep> best_steps_;
};

}  // namespace

FdepthResult fdepth(const MonomialIdeal& ideal, const SearchLimits& limits, int box_margin) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("fdepth search requires a proper nonzero ideal");
  if (box_margin < 0)
    throw DomainError("offset box margin must be non-negative");

  std::vector<int> box = ideal.generator_exponent_bound();
  for (int& b : box) {
    if (b > std::numeric_limits<int>::max() - box_margin)
      throw OverflowError("offset box bound overflows");
    b += box_margin;
  }

  FdepthSearch search(ideal.ambient(), box, limits.max_nodes);
  search.run(ideal);
  if (search.best() < 0)
    throw Error("internal: no prime filtration found within the offset box");
  return FdepthResult{search.best(), PrimeFiltration(ideal, search.take_best_steps()),
                      std::move(box)};
}

}  // namespace stanley
