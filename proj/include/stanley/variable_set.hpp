#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// Ordered list of distinct variable names: the ambient polynomial ring of
/// every value in this library. Immutable and cheap to copy.
///
/// The empty set (the ring with no variables, i.e. the coefficient field
/// alone) is a legal value; it arises when the only variable of a ring is
/// localized away. Parsers require at least one variable.
class VariableSet {
public:
  VariableSet();
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t j) const;
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Ambient of the localized ring: the same names with variable j removed.
  /// Order of the remaining names is preserved.
  VariableSet project(std::size_t j) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace stanley
