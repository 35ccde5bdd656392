#include "subshift/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subshift/error.hpp"

namespace subshift {

SourceSpec parse_source_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SubshiftError(ErrorKind::InvalidInput, std::string("source is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SubshiftError(ErrorKind::InvalidInput, "source JSON must be an object");
  }
  SourceSpec spec;
  if (doc.contains("periodic")) {
    if (!doc["periodic"].is_string()) {
      throw SubshiftError(ErrorKind::InvalidInput, "\"periodic\" must be a string");
    }
    spec.kind = SourceKind::Periodic;
    spec.period = doc["periodic"].get<std::string>();
    if (spec.period.empty()) {
      throw SubshiftError(ErrorKind::InvalidInput, "periodic word must be nonempty");
    }
    return spec;
  }
  if (!doc.contains("alphabet") || !doc.contains("rules")) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "source JSON needs either \"periodic\" or \"alphabet\" + \"rules\"");
  }
  if (!doc["alphabet"].is_string() || !doc["rules"].is_object()) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "\"alphabet\" must be a string and \"rules\" an object");
  }
  spec.kind = SourceKind::Substitutive;
  spec.alphabet = doc["alphabet"].get<std::string>();
  Alphabet alphabet(spec.alphabet);  // validates letters, throws InvalidInput
  for (const auto& [key, value] : doc["rules"].items()) {
    if (key.size() != 1 || !alphabet.contains(key[0])) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          "rule key \"" + key + "\" is not a letter of the alphabet");
    }
    if (!value.is_string()) {
      throw SubshiftError(ErrorKind::InvalidInput, "rule image for \"" + key + "\" must be a string");
    }
    spec.rules.emplace_back(key[0], value.get<std::string>());
  }
  // Alphabet order regardless of the JSON key order; the Substitution
  // constructor reports duplicates and gaps.
  std::sort(spec.rules.begin(), spec.rules.end(), [&](const auto& a, const auto& b) {
    return alphabet.rank(a.first) < alphabet.rank(b.first);
  });
  return spec;
}

SourceSpec parse_source_file(const std::string& path) {
  return parse_source_json(read_file(path));
}

std::string canonical_source(const SourceSpec& spec) {
  std::ostringstream out;
  if (spec.kind == SourceKind::Periodic) {
    out << "periodic{" << spec.period << "}";
  } else {
    out << "sub{" << spec.alphabet;
    for (const auto& [c, image] : spec.rules) out << ";" << c << ">" << image;
    out << "}";
  }
  return out.str();
}

Substitution to_substitution(const SourceSpec& spec) {
  if (spec.kind != SourceKind::Substitutive) {
    throw SubshiftError(ErrorKind::InvalidInput, "a periodic source has no substitution");
  }
  return Substitution(Alphabet(spec.alphabet), spec.rules);
}

FactorLanguage build_language(const SourceSpec& spec, std::size_t horizon) {
  if (spec.kind == SourceKind::Periodic) return build_language(spec.period, horizon);
  return build_language(to_substitution(spec), horizon);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string config_digest(const SourceSpec& spec, std::string_view params) {
  std::string payload = canonical_source(spec);
  payload += '|';
  payload += params;
  return to_hex(fnv1a64(payload));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SubshiftError(ErrorKind::InvalidInput, "cannot read \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw SubshiftError(ErrorKind::InvalidInput, "cannot write \"" + path + "\"");
  }
  out << content;
}

}  // namespace subshift
