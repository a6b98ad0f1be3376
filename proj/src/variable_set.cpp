#include "stanley/variable_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

const char* kReserved = "*^|#,()";

void check_name(const std::string& name) {
  if (name.empty())
    throw DomainError("variable name must be non-empty");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::string_view(kReserved).find(c) != std::string_view::npos)
      throw DomainError("variable name '" + name + "' contains a reserved character");
  }
}

}  // namespace

VariableSet::VariableSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VariableSet::VariableSet(std::vector<std::string> names) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    check_name(n);
    if (!seen.insert(n).second)
      throw DomainError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& VariableSet::name(std::size_t j) const {
  if (j >= names_->size())
    throw DomainError("variable index out of range");
  return (*names_)[j];
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

VariableSet VariableSet::project(std::size_t j) const {
  if (j >= names_->size())
    throw DomainError("cannot project: variable index out of range");
  std::vector<std::string> rest;
  rest.reserve(names_->size() - 1);
  for (std::size_t k = 0; k < names_->size(); ++k)
    if (k != j)
      rest.push_back((*names_)[k]);
  return VariableSet(std::move(rest));
}

}  // namespace stanley
