#include "stanley/monomial.hpp"

#include <algorithm>
#include <limits>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

void require_same_ambient(const Monomial& u, const Monomial& v, const char* op) {
  if (u.ambient() != v.ambient())
    throw AmbientMismatchError(std::string(op) + ": operands live over different variable sets");
}

}  // namespace

Monomial::Monomial(VariableSet ambient, std::vector<int> exponents)
    : ambient_(std::move(ambient)), exps_(std::move(exponents)) {
  if (exps_.size() != ambient_.size())
    throw DomainError("exponent vector length does not match the variable set");
  for (int e : exps_)
    if (e < 0)
      throw DomainError("negative exponent");
}

Monomial Monomial::one(VariableSet ambient) {
  std::vector<int> z(ambient.size(), 0);
  return Monomial(std::move(ambient), std::move(z));
}

Monomial Monomial::variable(const VariableSet& ambient, std::size_t j, int power) {
  if (j >= ambient.size())
    throw DomainError("variable index out of range");
  if (power < 0)
    throw DomainError("negative exponent");
  std::vector<int> e(ambient.size(), 0);
  e[j] = power;
  return Monomial(ambient, std::move(e));
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (int e : exps_)
    d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0)
      s.push_back(j);
  return s;
}

Monomial Monomial::project(std::size_t j) const {
  if (j >= exps_.size())
    throw DomainError("cannot project: variable index out of range");
  std::vector<int> rest;
  rest.reserve(exps_.size() - 1);
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (k != j)
      rest.push_back(exps_[k]);
  return Monomial(ambient_.project(j), std::move(rest));
}

Monomial Monomial::colon_by(const Monomial& a) const {
  require_same_ambient(*this, a, "colon");
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < exps_.size(); ++j)
    e[j] = std::max(exps_[j] - a.exps_[j], 0);
  return Monomial(ambient_, std::move(e));
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "divides");
  for (std::size_t j = 0; j < u.exps_.size(); ++j)
    if (u.exps_[j] > v.exps_[j])
      return false;
  return true;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "gcd");
  std::vector<int> e(u.exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = std::min(u.exps_[j], v.exps_[j]);
  return Monomial(u.ambient_, std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "lcm");
  std::vector<int> e(u.exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = std::max(u.exps_[j], v.exps_[j]);
  return Monomial(u.ambient_, std::move(e));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "product");
  std::vector<int> e(u.exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (u.exps_[j] > std::numeric_limits<int>::max() - v.exps_[j])
      throw OverflowError("exponent overflow in monomial product");
    e[j] = u.exps_[j] + v.exps_[j];
  }
  return Monomial(u.ambient_, std::move(e));
}

bool lex_less(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient())
    throw AmbientMismatchError("lex_less: operands live over different variable sets");
  return std::lexicographical_compare(u.exponents().begin(), u.exponents().end(),
                                      v.exponents().begin(), v.exponents().end());
}

}  // namespace stanley
