#pragma once

#include <string>
#include <vector>

#include "traintrack/spec_file.hpp"

namespace fixtures {

inline std::string spec_path(const std::string& name) {
  return std::string(TT_SPEC_DIR) + "/" + name;
}

inline const tt::AutoSpec& bk() {
  static tt::AutoSpec spec = tt::parse_spec_file(spec_path("bk.spec"));
  return spec;
}

inline const tt::AutoSpec& bk_inv() {
  static tt::AutoSpec spec = tt::parse_spec_file(spec_path("bk-inv.spec"));
  return spec;
}

inline const tt::AutoSpec& tribonacci() {
  static tt::AutoSpec spec = tt::parse_spec_file(spec_path("tribonacci.spec"));
  return spec;
}

inline const tt::AutoSpec& tribonacci_inv() {
  static tt::AutoSpec spec = tt::parse_spec_file(spec_path("tribonacci-inv.spec"));
  return spec;
}

inline std::vector<const tt::AutoSpec*> all_specs() {
  return {&bk(), &bk_inv(), &tribonacci(), &tribonacci_inv()};
}

// Parses a word over letters a, b, c, ... with ' for inverses.
inline tt::Word w(const std::string& text, std::size_t alphabet = 3) {
  return tt::parse_word(text, tt::default_names(alphabet));
}

}  // namespace fixtures
