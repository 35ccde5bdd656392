#include "subshift/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subshift/error.hpp"
#include "subshift/extension.hpp"
#include "subshift/free_group.hpp"
#include "subshift/fundamental.hpp"
#include "subshift/io.hpp"
#include "subshift/language.hpp"
#include "subshift/presets.hpp"
#include "subshift/rauzy.hpp"
#include "subshift/return_words.hpp"
#include "subshift/verify.hpp"

namespace subshift {
namespace {

using Json = nlohmann::ordered_json;

struct CommonOpts {
  std::string sub_file;
  std::string periodic;
  std::string preset;
  std::size_t horizon = 0;  // 0 = derive from the request
  std::string out_dir;
  std::string format = "json";
  bool dot_flag = false;
  std::size_t scan_budget = 100000;
};

void add_source_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--sub", o.sub_file, "substitution JSON file");
  cmd->add_option("--periodic", o.periodic, "periodic word source");
  cmd->add_option("--preset", o.preset, "built-in preset name");
  cmd->add_option("--horizon", o.horizon, "factor-language horizon (default: derived)");
  cmd->add_option("--out", o.out_dir, "directory for artifact files (default: stdout)");
  cmd->add_option("--format", o.format, "artifact format: json|csv|dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  cmd->add_flag("--dot", o.dot_flag, "shorthand for --format dot");
  cmd->add_option("--scan-budget", o.scan_budget, "point-prefix length scanned for return words");
}

SourceSpec resolve_source(const CommonOpts& o) {
  int given = int(!o.sub_file.empty()) + int(!o.periodic.empty()) + int(!o.preset.empty());
  if (given != 1) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "exactly one of --sub, --periodic, --preset is required");
  }
  if (!o.sub_file.empty()) return parse_source_file(o.sub_file);
  if (!o.periodic.empty()) {
    SourceSpec spec;
    spec.kind = SourceKind::Periodic;
    spec.period = o.periodic;
    return spec;
  }
  return preset_source(o.preset);
}

std::string fmt(const CommonOpts& o) { return o.dot_flag ? "dot" : o.format; }

/// Derived-requirement gate: an explicit horizon below what the request needs
/// is refused with the computed number; an omitted horizon is derived.
std::size_t settle_horizon(CommonOpts& o, std::size_t needed, const char* what) {
  if (o.horizon == 0) return std::max<std::size_t>(needed, 24);
  if (o.horizon < needed) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        std::string("horizon ") + std::to_string(o.horizon) + " is below the " +
                            std::to_string(needed) + " required for " + what);
  }
  return o.horizon;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  std::size_t a = 0, b = 0;
  try {
    if (dots == std::string::npos) {
      a = b = std::stoul(text);
    } else {
      a = std::stoul(text.substr(0, dots));
      b = std::stoul(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw SubshiftError(ErrorKind::InvalidInput, "range \"" + text + "\" is not A..B");
  }
  if (a == 0 || b < a) {
    throw SubshiftError(ErrorKind::InvalidInput, "range \"" + text + "\" must satisfy 1 <= A <= B");
  }
  return {a, b};
}

/// Either streams the artifact or writes <out>/<name> and echoes the path.
void emit(const CommonOpts& o, const std::string& name, const std::string& content,
          std::ostream& out) {
  if (o.out_dir.empty()) {
    out << content;
    return;
  }
  std::string path = o.out_dir + "/" + name;
  write_file(path, content);
  out << path << "\n";
}

Json json_code_report(const std::vector<Word>& words) {
  Json j;
  CodeCheckResult code = is_code(words);
  j["is_code"] = code.is_code;
  if (!code.is_code) {
    j["ambiguous_word"] = code.ambiguous_word;
    j["factorization_a"] = code.factorization_a;
    j["factorization_b"] = code.factorization_b;
  }
  CircularCheckResult circ = check_circular_bruteforce(words, 16);
  j["circular_unambiguous"] = circ.unambiguous;
  if (!circ.unambiguous) {
    j["witness_cycle"] = circ.witness_cycle;
    j["cuts_a"] = circ.cuts_a;
    j["cuts_b"] = circ.cuts_b;
  }
  return j;
}

// ------------------------------------------------------------------- lang

int run_lang(CommonOpts& o, std::size_t max_len, std::ostream& out) {
  SourceSpec spec = resolve_source(o);
  std::size_t horizon = settle_horizon(o, std::max<std::size_t>(max_len, 1), "the factor listing");
  FactorLanguage lang = build_language(spec, horizon);
  std::string digest = config_digest(
      spec, "lang;h=" + std::to_string(horizon) + ";max-len=" + std::to_string(max_len) +
                ";format=" + fmt(o));
  if (fmt(o) == "json") {
    Json j;
    j["config"] = digest;
    j["source"] = canonical_source(spec);
    j["horizon"] = horizon;
    j["kind"] = spec.kind == SourceKind::Periodic ? "periodic" : "substitutive";
    Json complexity = Json::array();
    for (std::size_t k = 1; k <= max_len; ++k) complexity.push_back({k, lang.complexity(k)});
    j["complexity"] = complexity;
    Json factors = Json::object();
    for (std::size_t k = 1; k <= max_len; ++k) factors[std::to_string(k)] = lang.factors(k);
    j["factors"] = factors;
    emit(o, "lang.json", j.dump(2) + "\n", out);
  } else if (fmt(o) == "csv") {
    std::ostringstream csv;
    csv << "# config " << digest << "\n" << "length,word\n";
    for (std::size_t k = 1; k <= max_len; ++k) {
      for (const Word& w : lang.factors(k)) csv << k << "," << w << "\n";
    }
    emit(o, "lang.csv", csv.str(), out);
  } else {
    throw SubshiftError(ErrorKind::InvalidInput, "lang has no DOT rendering");
  }
  return 0;
}

// ------------------------------------------------------------------ rauzy

Json json_graph(const RauzyGraph& g) {
  Json j;
  j["order"] = g.order();
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["vertices"] = g.vertex_words();
  Json edges = Json::array();
  for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
    Json edge;
    edge["word"] = g.edge_word(e);
    edge["source"] = g.vertex_word(g.source(e));
    edge["target"] = g.vertex_word(g.target(e));
    if (g.has_central_labels()) edge["central"] = std::string(1, g.central_label(e));
    edges.push_back(edge);
  }
  j["edges"] = edges;
  return j;
}

int run_rauzy(CommonOpts& o, const std::string& n_text, std::ostream& out) {
  SourceSpec spec = resolve_source(o);
  auto [n_from, n_to] = parse_range(n_text);
  std::size_t horizon = settle_horizon(o, n_to + 1, "the requested graph orders");
  FactorLanguage lang = build_language(spec, horizon);
  std::string digest = config_digest(
      spec, "rauzy;h=" + std::to_string(horizon) + ";n=" + n_text + ";format=" + fmt(o));
  std::vector<RauzyGraph> graphs;
  for (std::size_t n = n_from; n <= n_to; ++n) graphs.push_back(build_rauzy(lang, n));
  bool single_file = o.out_dir.empty();
  auto name = [&](const RauzyGraph& g, const char* ext) {
    return "rauzy-" + std::to_string(g.order()) + "." + ext;
  };
  if (fmt(o) == "json") {
    if (single_file || graphs.size() == 1) {
      Json j;
      j["config"] = digest;
      if (graphs.size() == 1) {
        j.update(json_graph(graphs.front()));
        emit(o, name(graphs.front(), "json"), j.dump(2) + "\n", out);
      } else {
        Json arr = Json::array();
        for (const auto& g : graphs) arr.push_back(json_graph(g));
        j["graphs"] = arr;
        out << j.dump(2) + "\n";
      }
    } else {
      for (const auto& g : graphs) {
        Json j;
        j["config"] = digest;
        j.update(json_graph(g));
        emit(o, name(g, "json"), j.dump(2) + "\n", out);
      }
    }
  } else if (fmt(o) == "csv") {
    if (single_file) {
      std::ostringstream csv;
      csv << "# config " << digest << "\n" << "order,word,source,target,central\n";
      for (const auto& g : graphs) {
        for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
          csv << g.order() << "," << g.edge_word(e) << "," << g.vertex_word(g.source(e)) << ","
              << g.vertex_word(g.target(e)) << ","
              << (g.has_central_labels() ? std::string(1, g.central_label(e)) : std::string())
              << "\n";
        }
      }
      out << csv.str();
    } else {
      for (const auto& g : graphs) {
        std::ostringstream csv;
        csv << "# config " << digest << "\n" << "order,word,source,target,central\n";
        for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
          csv << g.order() << "," << g.edge_word(e) << "," << g.vertex_word(g.source(e)) << ","
              << g.vertex_word(g.target(e)) << ","
              << (g.has_central_labels() ? std::string(1, g.central_label(e)) : std::string())
              << "\n";
        }
        emit(o, name(g, "csv"), csv.str(), out);
      }
    }
  } else {
    for (const auto& g : graphs) {
      std::string dot = "// config " + digest + "\n" + export_dot(g);
      emit(o, name(g, "dot"), dot, out);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- returns

int run_returns(CommonOpts& o, const std::string& u, const std::string& u1, const std::string& u2,
                std::size_t window_n, const std::string& profile_text, std::ostream& out) {
  SourceSpec spec = resolve_source(o);
  int modes = int(!u.empty()) + int(!u1.empty() || !u2.empty()) + int(window_n > 0) +
              int(!profile_text.empty());
  if (modes != 1) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "pick exactly one of --u, --u1/--u2, --n, --profile");
  }
  if (!u1.empty() != !u2.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput, "--u1 and --u2 go together");
  }

  std::string mode;
  std::size_t needed = 1;
  std::pair<std::size_t, std::size_t> prange{0, 0};
  if (!u.empty()) {
    mode = "plain";
    needed = u.size();
  } else if (!u1.empty()) {
    mode = "delayed";
    needed = u1.size() + u2.size();
  } else if (window_n > 0) {
    mode = "window";
    needed = 2 * window_n;
  } else {
    mode = "profile";
    prange = parse_range(profile_text);
    needed = 2 * prange.second;
  }
  std::size_t horizon = settle_horizon(o, needed, "the requested return words");
  FactorLanguage lang = build_language(spec, horizon);
  std::string params = "returns;h=" + std::to_string(horizon) +
                       ";budget=" + std::to_string(o.scan_budget) + ";mode=" + mode;
  if (mode == "plain") params += ";u=" + u;
  if (mode == "delayed") params += ";u1=" + u1 + ";u2=" + u2;
  if (mode == "window") params += ";n=" + std::to_string(window_n);
  if (mode == "profile") params += ";range=" + profile_text;
  params += ";format=" + fmt(o);
  std::string digest = config_digest(spec, params);

  if (mode == "profile") {
    auto profile = min_return_length_profile(lang, prange.first, prange.second, o.scan_budget);
    if (fmt(o) == "json") {
      Json j;
      j["config"] = digest;
      j["mode"] = mode;
      Json rows = Json::array();
      for (const auto& [n, len] : profile) rows.push_back({n, len});
      j["min_return_lengths"] = rows;
      emit(o, "returns-profile.json", j.dump(2) + "\n", out);
    } else if (fmt(o) == "csv") {
      std::ostringstream csv;
      csv << "# config " << digest << "\n" << "n,min_length\n";
      for (const auto& [n, len] : profile) csv << n << "," << len << "\n";
      emit(o, "returns-profile.csv", csv.str(), out);
    } else {
      throw SubshiftError(ErrorKind::InvalidInput, "returns has no DOT rendering");
    }
    return 0;
  }

  ReturnWordSet rs;
  if (mode == "plain") {
    rs = return_words(lang, u, o.scan_budget);
  } else if (mode == "delayed") {
    rs = delayed_return_words(lang, u1, u2, o.scan_budget);
  } else {
    rs = return_set_at(lang, default_window(lang, window_n), o.scan_budget);
  }
  if (fmt(o) == "json") {
    Json j;
    j["config"] = digest;
    j["mode"] = mode;
    j["u1"] = rs.u1;
    j["u2"] = rs.u2;
    j["words"] = rs.words;
    j["complete"] = rs.complete;
    j["occurrences"] = rs.occurrences;
    j["max_gap"] = rs.max_gap;
    j["code"] = json_code_report(rs.words);
    emit(o, "returns.json", j.dump(2) + "\n", out);
  } else if (fmt(o) == "csv") {
    std::ostringstream csv;
    csv << "# config " << digest << "\n" << "word\n";
    for (const Word& w : rs.words) csv << w << "\n";
    emit(o, "returns.csv", csv.str(), out);
  } else {
    throw SubshiftError(ErrorKind::InvalidInput, "returns has no DOT rendering");
  }
  return 0;
}

// ------------------------------------------------------------------- tree

int run_tree(CommonOpts& o, std::size_t max_center, std::ostream& out) {
  SourceSpec spec = resolve_source(o);
  std::size_t horizon = settle_horizon(o, max_center + 2, "the tree-condition scan");
  FactorLanguage lang = build_language(spec, horizon);
  std::string digest = config_digest(
      spec, "tree;h=" + std::to_string(horizon) + ";max-center=" + std::to_string(max_center) +
                ";format=" + fmt(o));
  TreeConditionReport report = scan_tree_condition(lang, max_center);
  if (fmt(o) == "json") {
    Json j;
    j["config"] = digest;
    j["max_center_len"] = report.max_center_len;
    j["verdict"] = report.all_pass ? "pass-up-to-horizon" : "fail";
    j["centers_checked"] = report.centers_checked;
    if (!report.all_pass) {
      j["witness"] = report.witness;
      j["reason"] = to_string(report.failure);
    }
    emit(o, "tree.json", j.dump(2) + "\n", out);
  } else if (fmt(o) == "csv") {
    std::ostringstream csv;
    csv << "# config " << digest << "\n" << "length,centers_checked\n";
    for (std::size_t k = 0; k < report.centers_checked.size(); ++k) {
      csv << k << "," << report.centers_checked[k] << "\n";
    }
    emit(o, "tree.csv", csv.str(), out);
  } else {
    // The witness graph when the scan failed, the root graph otherwise.
    ExtensionGraph g = extension_graph(lang, report.all_pass ? Word{} : report.witness);
    emit(o, "tree.dot", "// config " + digest + "\n" + export_dot(g), out);
  }
  return 0;
}

// --------------------------------------------------------------------- fg

Json json_level(const SpanningTreeBasis& stb) {
  const RauzyGraph& g = stb.graph();
  Json j;
  j["n"] = g.order() / 2;
  j["order"] = g.order();
  j["base"] = stb.base_word();
  j["rank"] = stb.rank();
  Json tree = Json::array();
  for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
    if (stb.in_tree(e)) tree.push_back(g.edge_word(e));
  }
  j["tree_edges"] = tree;
  Json basis = Json::array();
  for (RauzyGraph::EdgeId e : stb.basis_edges()) basis.push_back(g.edge_word(e));
  j["basis_edges"] = basis;
  return j;
}

std::string fg_dot(const SpanningTreeBasis& stb, const std::string& digest) {
  const RauzyGraph& g = stb.graph();
  std::ostringstream out;
  out << "// config " << digest << "\n";
  out << "digraph spanning_tree_order" << g.order() << " {\n";
  for (const Word& v : g.vertex_words()) {
    out << "  \"" << (v.empty() ? "~" : v) << "\";\n";
  }
  for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  \"" << g.vertex_word(g.source(e)) << "\" -> \"" << g.vertex_word(g.target(e))
        << "\" [label=\"" << g.edge_word(e) << "\"";
    if (stb.in_tree(e)) out << " penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

int run_fg(CommonOpts& o, const std::string& n_text, std::ostream& out) {
  SourceSpec spec = resolve_source(o);
  auto [n_from, n_to] = parse_range(n_text);
  std::size_t horizon = settle_horizon(o, 2 * n_to + 1, "the requested levels");
  FactorLanguage lang = build_language(spec, horizon);
  std::string digest =
      config_digest(spec, "fg;h=" + std::to_string(horizon) + ";n=" + n_text + ";format=" + fmt(o));

  // One window tower: every base is the central restriction of the top one.
  PointWindow top = default_window(lang, n_to);
  std::vector<RauzyGraph> graphs;
  std::vector<SpanningTreeBasis> trees;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    graphs.push_back(build_rauzy(lang, 2 * n));
    trees.push_back(SpanningTreeBasis::build(graphs.back(), project(top, n).word));
  }

  if (fmt(o) == "json") {
    Json j;
    j["config"] = digest;
    Json levels = Json::array();
    for (const auto& stb : trees) levels.push_back(json_level(stb));
    j["levels"] = levels;
    Json maps = Json::array();
    for (std::size_t i = 1; i < trees.size(); ++i) {
      const SpanningTreeBasis& hi = trees[i];
      const SpanningTreeBasis& lo = trees[i - 1];
      ConnectingMap map = connecting_map(hi, lo);
      Json entry;
      entry["from_n"] = map.order_from / 2;
      entry["to_n"] = map.order_to / 2;
      Json images = Json::object();
      for (std::size_t k = 0; k < map.images.size(); ++k) {
        images[hi.graph().edge_word(hi.basis_edges()[k])] = format_word(lo, map.images[k]);
      }
      entry["images"] = images;
      auto matrix = abelianization_matrix(map);
      entry["abelianization"] = matrix;
      if (map.rank_from == map.rank_to) {
        long long d = det(matrix);
        entry["det_abs"] = d < 0 ? -d : d;
      }
      maps.push_back(entry);
    }
    j["maps"] = maps;
    Json profile = Json::array();
    for (const auto& [n, rank] : rank_profile(lang, n_from, n_to)) profile.push_back({n, rank});
    j["rank_profile"] = profile;
    emit(o, "fg.json", j.dump(2) + "\n", out);
  } else if (fmt(o) == "csv") {
    std::ostringstream csv;
    csv << "# config " << digest << "\n" << "n,rank\n";
    for (const auto& [n, rank] : rank_profile(lang, n_from, n_to)) csv << n << "," << rank << "\n";
    emit(o, "fg.csv", csv.str(), out);
  } else {
    for (const auto& stb : trees) {
      emit(o, "fg-" + std::to_string(stb.graph().order()) + ".dot", fg_dot(stb, digest), out);
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify

int run_verify(CommonOpts& o, const std::string& preset, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  if (!is_preset(preset)) {
    throw SubshiftError(ErrorKind::InvalidInput, "unknown preset \"" + preset + "\"");
  }
  SourceSpec spec = preset_source(preset);
  std::string digest = config_digest(spec, "verify;preset=" + preset + ";seed=" +
                                               std::to_string(seed) +
                                               ";budget=" + std::to_string(o.scan_budget));
  VerifyOptions vopts;
  vopts.seed = seed;
  vopts.scan_budget = o.scan_budget;
  vopts.presets = {preset};
  vopts.progress = &err;
  std::vector<CriterionResult> results = run_acceptance(vopts);
  Json j;
  j["config"] = digest;
  j["preset"] = preset;
  j["seed"] = seed;
  Json arr = Json::array();
  for (const auto& r : results) {
    Json entry;
    entry["id"] = r.id;
    entry["name"] = r.name;
    entry["applicable"] = r.applicable;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    arr.push_back(entry);
  }
  j["criteria"] = arr;
  j["all_pass"] = all_pass(results);
  emit(o, "verify-" + preset + ".json", j.dump(2) + "\n", out);
  return all_pass(results) ? 0 : 1;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"substitutive-subshift toolkit: factor languages, Rauzy graphs, "
               "return words, spanning-tree fundamental groups"};
  app.name("subshift");
  app.require_subcommand(1);

  CommonOpts lang_o, rauzy_o, returns_o, tree_o, fg_o, verify_o;
  std::size_t lang_max_len = 8;
  std::string rauzy_n = "2";
  std::string returns_u, returns_u1, returns_u2, returns_profile;
  std::size_t returns_n = 0;
  std::size_t tree_max_center = 8;
  std::string fg_n = "1";
  std::string verify_preset;
  std::uint64_t verify_seed = 1;

  CLI::App* lang = app.add_subcommand("lang", "factor language and complexity report");
  add_source_opts(lang, lang_o);
  lang->add_option("--max-len", lang_max_len, "longest factor length listed");

  CLI::App* rauzy = app.add_subcommand("rauzy", "Rauzy graph of one or more orders");
  add_source_opts(rauzy, rauzy_o);
  rauzy->add_option("--n", rauzy_n, "graph order N or range A..B");
  rauzy->add_option("--n-range", rauzy_n, "graph order range A..B");

  CLI::App* returns = app.add_subcommand("returns", "return words and code checks");
  add_source_opts(returns, returns_o);
  returns->add_option("--u", returns_u, "plain return words of this factor");
  returns->add_option("--u1", returns_u1, "left part for delayed return words");
  returns->add_option("--u2", returns_u2, "right part for delayed return words");
  returns->add_option("--n", returns_n, "window half-length for the default window");
  returns->add_option("--profile", returns_profile, "min-return-length profile over n range A..B");

  CLI::App* tree = app.add_subcommand("tree", "extension-graph tree-condition scan");
  add_source_opts(tree, tree_o);
  tree->add_option("--max-center", tree_max_center, "longest center length scanned");

  CLI::App* fg = app.add_subcommand("fg", "spanning-tree bases and connecting maps");
  add_source_opts(fg, fg_o);
  fg->add_option("--n", fg_n, "window half-length N or range A..B");
  fg->add_option("--n-range", fg_n, "window half-length range A..B");

  CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_option("preset", verify_preset, "preset to verify")->required();
  verify->add_option("--seed", verify_seed, "seed for the randomized suites");
  verify->add_option("--scan-budget", verify_o.scan_budget, "point-prefix scan budget");
  verify->add_option("--out", verify_o.out_dir, "directory for the report file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("subshift");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lang->parsed()) return run_lang(lang_o, lang_max_len, out);
    if (rauzy->parsed()) return run_rauzy(rauzy_o, rauzy_n, out);
    if (returns->parsed()) {
      return run_returns(returns_o, returns_u, returns_u1, returns_u2, returns_n, returns_profile,
                         out);
    }
    if (tree->parsed()) return run_tree(tree_o, tree_max_center, out);
    if (fg->parsed()) return run_fg(fg_o, fg_n, out);
    if (verify->parsed()) return run_verify(verify_o, verify_preset, verify_seed, out, err);
  } catch (const SubshiftError& e) {
    err << "error: " << e.what() << "\n";
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace subshift
