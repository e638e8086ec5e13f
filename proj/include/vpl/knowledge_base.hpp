#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vpl/fuzzy.hpp"
#include "vpl/inference.hpp"
#include "vpl/temporal.hpp"
#include "vpl/world.hpp"

namespace vpl {

/// Everything a .vpl file describes: the two specificity orders, the fact
/// store, conditional rules, fuzzy tables and per-subject lifetimes.
struct KnowledgeBase {
  Taxonomy taxonomy;
  World world;
  std::vector<ConditionalRule> rules;
  FuzzyTable fuzzy;
  std::map<std::string, TimeInterval, std::less<>> lifetimes;

  /// Declared lifetime, or [0,100].
  TimeInterval lifetime_of(std::string_view subject) const {
    auto it = lifetimes.find(subject);
    return it == lifetimes.end() ? kDefaultLifetime : it->second;
  }
};

} // namespace vpl
