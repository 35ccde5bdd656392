#include "subshift/presets.hpp"

#include <algorithm>

#include "subshift/error.hpp"

namespace subshift {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fibonacci", "tribonacci", "thue-morse", "paper-example", "periodic-ab"};
  return names;
}

bool is_preset(const std::string& name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SourceSpec preset_source(const std::string& name) {
  SourceSpec spec;
  if (name == "fibonacci") {
    spec.alphabet = "ab";
    spec.rules = {{'a', "ab"}, {'b', "a"}};
  } else if (name == "tribonacci") {
    spec.alphabet = "abc";
    spec.rules = {{'a', "ab"}, {'b', "ac"}, {'c', "a"}};
  } else if (name == "thue-morse") {
    spec.alphabet = "ab";
    spec.rules = {{'a', "ab"}, {'b', "ba"}};
  } else if (name == "paper-example") {
    spec.alphabet = "abcd";
    spec.rules = {{'a', "ab"}, {'b', "cda"}, {'c', "cd"}, {'d', "abc"}};
  } else if (name == "periodic-ab") {
    spec.kind = SourceKind::Periodic;
    spec.period = "ab";
  } else {
    throw SubshiftError(ErrorKind::InvalidInput, "unknown preset \"" + name + "\"");
  }
  return spec;
}

}  // namespace subshift
