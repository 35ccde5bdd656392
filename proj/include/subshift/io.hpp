// io.hpp -- source descriptions, JSON parsing, digests, file helpers
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/substitution.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// Declarative description of a subshift source, as read from a JSON file:
/// either {"alphabet": "ab", "rules": {"a": "ab", "b": "a"}} or
/// {"periodic": "ab"}.
struct SourceSpec {
  SourceKind kind = SourceKind::Substitutive;
  std::string alphabet;                      // substitutive
  std::vector<std::pair<char, Word>> rules;  // substitutive, alphabet order
  Word period;                               // periodic
};

/// Throws InvalidInput on malformed JSON or rule tables.
SourceSpec parse_source_json(const std::string& text);
SourceSpec parse_source_file(const std::string& path);

/// Stable one-line rendering, the anchor of config digests.
std::string canonical_source(const SourceSpec& spec);

Substitution to_substitution(const SourceSpec& spec);  ///< InvalidInput for periodic
FactorLanguage build_language(const SourceSpec& spec, std::size_t horizon);

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex(std::uint64_t value);

/// Digest identifying one run: source description plus the parameter string
/// the caller assembled (subcommand, horizon, n, seed, ...).
std::string config_digest(const SourceSpec& spec, std::string_view params);

std::string read_file(const std::string& path);  ///< InvalidInput when unreadable
void write_file(const std::string& path, const std::string& content);

}  // namespace subshift
