// Shared helpers for the unit tests.
#pragma once

#include "bhopf/verify.hpp"

#include <random>
#include <string>

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(BHOPF_FIXTURE_DIR) + "/" + name; }

inline bhopf::Presentation load(const std::string& name) { return bhopf::load_presentation(fixture(name)); }

/// Word from generator names separated by spaces.
inline bhopf::Word word(const bhopf::Presentation& p, const std::string& text) {
  bhopf::Word w;
  std::string name;
  auto flush = [&] {
    if (name.empty()) return;
    w.push_back(p.find(name).value());
    name.clear();
  };
  for (char c : text) {
    if (c == ' ') flush();
    else name += c;
  }
  flush();
  return w;
}

inline bhopf::Element elem(const bhopf::Presentation& p, const std::string& text) {
  return bhopf::parse_element(p, text);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace testing
