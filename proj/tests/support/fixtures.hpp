#pragma once

#include <filesystem>
#include <string>

#include "vpl/dsl.hpp"

namespace fixtures {

inline std::filesystem::path data(const std::string &name) {
  return std::filesystem::path(VPL_TEST_DATA_DIR) / name;
}

inline vpl::KnowledgeBase load(const std::string &name) { return vpl::load_file(data(name)); }

inline vpl::Sentence S(const std::string &text) { return vpl::parse_sentence(text); }

inline vpl::VerbPhrase VP(const std::string &text) {
  // Borrow the sentence parser with a throwaway subject and tense.
  return vpl::parse_sentence("x past_perfect " + text).vp;
}

} // namespace fixtures
