#pragma once

#include <filesystem>
#include <string>

#include "synthlearn/alphabet.hh"
#include "synthlearn/machines.hh"

namespace fixtures {

inline std::filesystem::path data (const std::string& name) {
  return std::filesystem::path (SYNTHLEARN_TEST_DATA) / name;
}

inline std::filesystem::path cases (const std::string& name) {
  return std::filesystem::path (SYNTHLEARN_CASES) / name;
}

inline synthlearn::alphabet mutex_alphabet () {
  return synthlearn::alphabet ({"r1", "r2"}, {"g1", "g2"});
}

inline const char* mutex_core = "G(!g1 | !g2) & G(r1 -> F g1) & G(r2 -> F g2)";

/// Input or output valuation from a literal list such as "{r1,!r2}".
inline synthlearn::letter step (const synthlearn::alphabet& ab, const std::string& in, const std::string& out) {
  return {ab.parse_valuation (synthlearn::side::input, in), ab.parse_valuation (synthlearn::side::output, out)};
}

}  // namespace fixtures
