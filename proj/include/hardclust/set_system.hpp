#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hardclust {

using IndexList = std::vector<std::size_t>;

/// Sets over the universe {0, ..., n-1}. Read as a hypergraph, elements are
/// vertices and sets are hyperedges. Duplicate sets are allowed.
class SetSystem {
 public:
  SetSystem() = default;
  /// Each set must be strictly increasing and in range. Empty sets are
  /// rejected unless allowEmpty is set (the dual of a system with an
  /// isolated element needs them). Throws InvalidInput.
  SetSystem(std::size_t n, std::vector<IndexList> sets, std::optional<std::size_t> uniformity = {},
            bool allowEmpty = false);

  std::size_t universeSize() const { return n_; }
  std::size_t setCount() const { return sets_.size(); }
  const IndexList& set(std::size_t i) const { return sets_[i]; }
  const std::vector<IndexList>& sets() const { return sets_; }
  std::optional<std::size_t> uniformity() const { return uniformity_; }
  bool allowsEmpty() const { return allowEmpty_; }
  bool hasEmptySet() const;

  /// Number of sets containing each element.
  std::vector<std::size_t> elementDegrees() const;
  /// For each element, the increasing list of sets containing it.
  std::vector<IndexList> incidence() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<IndexList> sets_;
  std::optional<std::size_t> uniformity_;
  bool allowEmpty_ = false;
};

}  // namespace hardclust
