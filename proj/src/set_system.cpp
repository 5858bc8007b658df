#include "hardclust/set_system.hpp"

#include <string>

#include "hardclust/error.hpp"

namespace hardclust {

SetSystem::SetSystem(std::size_t n, std::vector<IndexList> sets,
                     std::optional<std::size_t> uniformity, bool allowEmpty)
    : n_(n), sets_(std::move(sets)), uniformity_(uniformity), allowEmpty_(allowEmpty) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const auto& s = sets_[i];
    const std::string where = "set " + std::to_string(i);
    if (s.empty() && !allowEmpty_) throw InvalidInput(where + " is empty");
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] >= n_) throw InvalidInput(where + ": element " + std::to_string(s[j]) + " out of range");
      if (j > 0 && s[j] <= s[j - 1]) throw InvalidInput(where + " is not strictly increasing");
    }
    if (uniformity_ && s.size() != *uniformity_) {
      throw InvalidInput(where + " has size " + std::to_string(s.size()) + ", expected " +
                         std::to_string(*uniformity_));
    }
  }
}

bool SetSystem::hasEmptySet() const {
  for (const auto& s : sets_) {
    if (s.empty()) return true;
  }
  return false;
}

std::vector<std::size_t> SetSystem::elementDegrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& s : sets_) {
    for (std::size_t e : s) ++deg[e];
  }
  return deg;
}

std::vector<IndexList> SetSystem::incidence() const {
  std::vector<IndexList> inc(n_);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t e : sets_[i]) inc[e].push_back(i);
  }
  return inc;
}

}  // namespace hardclust
