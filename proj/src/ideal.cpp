#include "stanley/ideal.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

// ---------------------------------------------------------------- primes

MonomialPrime::MonomialPrime(VariableSet ambient, std::vector<std::size_t> variables)
    : ambient_(std::move(ambient)), vars_(std::move(variables)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty() && vars_.back() >= ambient_.size())
    throw DomainError("prime variable index out of range");
}

bool MonomialPrime::contains_variable(std::size_t j) const {
  return std::binary_search(vars_.begin(), vars_.end(), j);
}

bool MonomialPrime::subset_of(const MonomialPrime& other) const {
  if (ambient_ != other.ambient_)
    throw AmbientMismatchError("prime comparison: different variable sets");
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

MonomialPrime MonomialPrime::project(std::size_t j) const {
  if (contains_variable(j))
    throw DomainError("cannot project a prime along one of its own variables");
  std::vector<std::size_t> mapped;
  mapped.reserve(vars_.size());
  for (std::size_t v : vars_)
    mapped.push_back(v > j ? v - 1 : v);
  return MonomialPrime(ambient_.project(j), std::move(mapped));
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(vars_.size());
  for (std::size_t v : vars_)
    gens.push_back(Monomial::variable(ambient_, v));
  return MonomialIdeal::make(ambient_, std::move(gens));
}

bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
  if (a.vars_.size() != b.vars_.size())
    return a.vars_.size() < b.vars_.size();
  return a.vars_ < b.vars_;
}

// ---------------------------------------------------------------- ideals

MonomialIdeal::MonomialIdeal(VariableSet ambient, std::vector<Monomial> canonical_gens)
    : ambient_(std::move(ambient)), gens_(std::move(canonical_gens)) {}

MonomialIdeal MonomialIdeal::zero(VariableSet ambient) {
  return MonomialIdeal(std::move(ambient), {});
}

MonomialIdeal MonomialIdeal::unit(VariableSet ambient) {
  std::vector<Monomial> g{Monomial::one(ambient)};
  return MonomialIdeal(std::move(ambient), std::move(g));
}

MonomialIdeal MonomialIdeal::make(VariableSet ambient, std::vector<Monomial> generators) {
  for (const auto& g : generators) {
    if (g.ambient() != ambient)
      throw AmbientMismatchError("generator lives over a different variable set");
    if (g.is_one())
      return unit(std::move(ambient));
  }
  // Divisors have smaller or equal degree, so after sorting by (degree, lex)
  // one forward pass finds every redundant generator.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree())
      return a.total_degree() < b.total_degree();
    return lex_less(a, b);
  });
  std::vector<Monomial> kept;
  for (const auto& g : generators) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant)
      kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
    return lex_less(a, b);
  });
  return MonomialIdeal(std::move(ambient), std::move(kept));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.ambient() != ambient_)
    throw AmbientMismatchError("membership test: different variable sets");
  return contains_exponents(u.exponents());
}

bool MonomialIdeal::contains_exponents(std::span<const int> exps) const {
  for (const auto& g : gens_) {
    bool div = true;
    auto ge = g.exponents();
    for (std::size_t j = 0; j < ge.size(); ++j) {
      if (ge[j] > exps[j]) {
        div = false;
        break;
      }
    }
    if (div)
      return true;
  }
  return false;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& a) const {
  if (a.ambient() != ambient_)
    throw AmbientMismatchError("colon: different variable sets");
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_)
    gens.push_back(g.colon_by(a));
  return make(ambient_, std::move(gens));
}

MonomialIdeal MonomialIdeal::adjoin(const Monomial& u) const {
  if (u.ambient() != ambient_)
    throw AmbientMismatchError("adjoin: different variable sets");
  std::vector<Monomial> gens(gens_.begin(), gens_.end());
  gens.push_back(u);
  return make(ambient_, std::move(gens));
}

std::optional<MonomialPrime> MonomialIdeal::as_prime() const {
  std::vector<std::size_t> vars;
  for (const auto& g : gens_) {
    if (g.total_degree() != 1)
      return std::nullopt;  // covers the unit ideal, whose generator is 1
    vars.push_back(g.support().front());
  }
  return MonomialPrime(ambient_, std::move(vars));
}

namespace {

void transversals(const std::vector<std::vector<std::size_t>>& supports,
                  std::vector<std::size_t>& chosen, std::vector<bool>& in_chosen,
                  std::vector<std::vector<std::size_t>>& found) {
  const std::vector<std::size_t>* unmet = nullptr;
  for (const auto& s : supports) {
    bool hit = std::any_of(s.begin(), s.end(), [&](std::size_t v) { return in_chosen[v]; });
    if (!hit) {
      unmet = &s;
      break;
    }
  }
  if (!unmet) {
    found.push_back(chosen);
    return;
  }
  for (std::size_t v : *unmet) {
    chosen.push_back(v);
    in_chosen[v] = true;
    transversals(supports, chosen, in_chosen, found);
    in_chosen[v] = false;
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialPrime> MonomialIdeal::minimal_primes() const {
  if (is_zero() || is_unit())
    throw DomainError("minimal primes require a proper nonzero ideal");
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(gens_.size());
  for (const auto& g : gens_)
    supports.push_back(g.support());

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::vector<bool> in_chosen(ambient_.size(), false);
  transversals(supports, chosen, in_chosen, found);

  // The branch search can emit non-minimal or duplicate transversals.
  for (auto& t : found)
    std::sort(t.begin(), t.end());
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& t : found) {
    bool has_smaller = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(t.begin(), t.end(), m.begin(), m.end());
    });
    if (!has_smaller)
      minimal.push_back(t);
  }

  std::vector<MonomialPrime> primes;
  primes.reserve(minimal.size());
  for (auto& t : minimal)
    primes.emplace_back(ambient_, std::move(t));
  std::sort(primes.begin(), primes.end());
  return primes;
}

MonomialIdeal MonomialIdeal::localize(std::size_t j) const {
  if (j >= ambient_.size())
    throw DomainError("localize: variable index out of range");
  VariableSet image = ambient_.project(j);
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_)
    gens.push_back(g.project(j));
  return make(std::move(image), std::move(gens));
}

std::vector<int> MonomialIdeal::generator_exponent_bound() const {
  std::vector<int> g(ambient_.size(), 0);
  for (const auto& gen : gens_) {
    auto e = gen.exponents();
    for (std::size_t j = 0; j < g.size(); ++j)
      g[j] = std::max(g[j], e[j]);
  }
  return g;
}

}  // namespace stanley
