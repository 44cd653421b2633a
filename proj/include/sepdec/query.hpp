#ifndef SEPDEC_QUERY_HPP
#define SEPDEC_QUERY_HPP

// Query documents and reports.
//
// Query: {"alphabet": ["a","b"],
//         "languages": {name: {"regex": "..."} | {"dfa": {...}}},
//         "task": "separate" | "cover" | "member" | "imprint",
//         "level": "st_half" | "st1" | "pol_at" | "st2" | "dd_half" | "dd1",
//         "args": [name, ...],
//         "options": {...}}
//
// Reports are JSON objects with sorted keys, so equal inputs give equal
// bytes. Timing is only reported when asked for.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepdec/decide.hpp"
#include "sepdec/io.hpp"
#include "sepdec/oracles.hpp"

namespace sepdec {

enum class Task { Separate, Cover, Member, Imprint };

inline std::string_view to_string(Task t) {
  switch (t) {
    case Task::Separate: return "separate";
    case Task::Cover: return "cover";
    case Task::Member: return "member";
    case Task::Imprint: return "imprint";
  }
  return "";
}

struct QueryOptions {
  Guards guards;
  bool dump_pol = false;
  bool dump_bpol = false;
  bool trace = false;
  bool timing = false;
  bool overlap_precheck = true;
  bool trim_initial = false;
  /// Replaces the level's basis: "st0", "dd0", "at", "custom:<path>", or an
  /// inline monoid dump.
  std::optional<Json> basis;
  std::size_t k = 2;  // k-subword oracle
};

struct QuerySpec {
  Alphabet alphabet;
  std::map<std::string, Dfa> languages;
  Task task = Task::Separate;
  Level level = Level::St1;
  std::vector<std::string> args;
  QueryOptions options;
  /// Relative custom basis paths are resolved against this directory.
  std::filesystem::path base_dir;
};

namespace detail {

inline bool read_bool(const Json& j, const std::string& pointer) {
  if (!j.is_boolean()) throw SchemaError(pointer, "expected a boolean");
  return j.get<bool>();
}

inline std::uint64_t read_count(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1)
    throw SchemaError(pointer, "expected a positive integer");
  return j.get<std::uint64_t>();
}

inline QueryOptions parse_options(const Json& j, const std::string& pointer) {
  QueryOptions o;
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string p = io::child(pointer, key);
    if (key == "dump_pol") o.dump_pol = read_bool(value, p);
    else if (key == "dump_bpol") o.dump_bpol = read_bool(value, p);
    else if (key == "trace") o.trace = read_bool(value, p);
    else if (key == "timing") o.timing = read_bool(value, p);
    else if (key == "overlap_precheck") o.overlap_precheck = read_bool(value, p);
    else if (key == "trim_initial") o.trim_initial = read_bool(value, p);
    else if (key == "max_monoid") o.guards.max_monoid = read_count(value, p);
    else if (key == "max_n") {
      o.guards.max_n = read_count(value, p);
      if (o.guards.max_n > kHardMaxRatingBase)
        throw SchemaError(p, "at most " + std::to_string(kHardMaxRatingBase) + " is supported");
    } else if (key == "max_frontier") o.guards.max_frontier = read_count(value, p);
    else if (key == "wall_ms") o.guards.wall_ms = static_cast<std::int64_t>(read_count(value, p));
    else if (key == "k") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
          value.get<std::uint64_t>() > oracles::kMaxSubwordLength)
        throw SchemaError(p, "expected an integer between 0 and " +
                                 std::to_string(oracles::kMaxSubwordLength));
      o.k = value.get<std::size_t>();
    } else if (key == "basis") {
      if (!value.is_string() && !value.is_object())
        throw SchemaError(p, "expected a basis name, \"custom:<path>\", or a monoid object");
      o.basis = value;
    } else {
      throw SchemaError(p, "unknown option");
    }
  }
  return o;
}

inline Dfa parse_language(const Json& j, const Alphabet& alphabet, const std::string& pointer) {
  if (!j.is_object() || j.size() != 1 || !(j.contains("regex") || j.contains("dfa")))
    throw SchemaError(pointer, "expected {\"regex\": ...} or {\"dfa\": ...}");
  if (j.contains("dfa")) return io::dfa_from_json(j["dfa"], alphabet, io::child(pointer, "dfa"));
  const std::string p = io::child(pointer, "regex");
  if (!j["regex"].is_string()) throw SchemaError(p, "expected a string");
  try {
    return to_min_dfa(parse_regex(j["regex"].get<std::string>(), alphabet), alphabet);
  } catch (const ParseError& e) {
    throw SchemaError(p, e.what(), e.position());
  } catch (const AlphabetError& e) {
    throw SchemaError(p, e.what());
  }
}

}  // namespace detail

inline QuerySpec parse_query(const Json& j, std::filesystem::path base_dir = {}) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  for (const auto& [key, unused] : j.items())
    if (key != "alphabet" && key != "languages" && key != "task" && key != "level" &&
        key != "args" && key != "options")
      throw SchemaError(io::child("", key), "unknown field");

  QuerySpec q;
  q.base_dir = std::move(base_dir);
  q.alphabet = io::alphabet_from_json(io::require(j, "alphabet", ""), "/alphabet");

  const Json& langs = io::require(j, "languages", "");
  if (!langs.is_object()) throw SchemaError("/languages", "expected an object");
  for (const auto& [name, value] : langs.items())
    q.languages.emplace(name, detail::parse_language(value, q.alphabet,
                                                     io::child("/languages", name)));

  const Json& task = io::require(j, "task", "");
  bool known = false;
  for (Task t : {Task::Separate, Task::Cover, Task::Member, Task::Imprint})
    if (task.is_string() && task.get<std::string>() == to_string(t)) {
      q.task = t;
      known = true;
    }
  if (!known) throw SchemaError("/task", "expected one of separate, cover, member, imprint");

  const Json& level = io::require(j, "level", "");
  try {
    if (!level.is_string()) throw Error("");
    q.level = parse_level(level.get<std::string>());
  } catch (const Error&) {
    throw SchemaError("/level", "expected one of st_half, st1, pol_at, st2, dd_half, dd1");
  }

  const Json& args = io::require(j, "args", "");
  if (!args.is_array()) throw SchemaError("/args", "expected an array of language names");
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string p = io::child("/args", i);
    if (!args[i].is_string()) throw SchemaError(p, "expected a language name");
    if (!q.languages.count(args[i].get<std::string>()))
      throw SchemaError(p, "unknown language '" + args[i].get<std::string>() + "'");
    q.args.push_back(args[i].get<std::string>());
  }
  auto arity = [&](bool ok, const char* what) {
    if (!ok) throw SchemaError("/args", std::string("task ") + std::string(to_string(q.task)) +
                                            " needs " + what);
  };
  switch (q.task) {
    case Task::Separate: arity(q.args.size() == 2, "exactly two languages"); break;
    case Task::Member: arity(q.args.size() == 1, "exactly one language"); break;
    case Task::Cover: arity(q.args.size() >= 2, "a language and at least one other"); break;
    case Task::Imprint: arity(!q.args.empty(), "at least one language"); break;
  }

  if (j.contains("options")) q.options = detail::parse_options(j["options"], "/options");
  if (q.task == Task::Cover && !closed_under_complement(q.level))
    throw SchemaError("/level", "covering requires a Boolean level (st1, st2, dd1)");
  return q;
}

inline Basis resolve_basis(const QuerySpec& q) {
  const QueryOptions& o = q.options;
  if (!o.basis) return builtin_basis(level_basis(q.level), q.alphabet);
  if (o.basis->is_object())
    return from_morphism(io::monoid_from_json(*o.basis, q.alphabet, "/options/basis",
                                              o.guards.max_monoid));
  const std::string name = o.basis->get<std::string>();
  if (name == "st0" || name == "dd0" || name == "at") return builtin_basis(name, q.alphabet);
  const std::string prefix = "custom:";
  if (name.rfind(prefix, 0) != 0)
    throw SchemaError("/options/basis", "unknown basis '" + name + "'");
  std::filesystem::path path = name.substr(prefix.size());
  if (path.is_relative()) path = q.base_dir / path;
  std::ifstream in(path);
  if (!in) throw SchemaError("/options/basis", "cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/options/basis", path.string() + ": " + e.what());
  }
  try {
    return from_morphism(io::monoid_from_json(doc, q.alphabet, "", o.guards.max_monoid),
                         "custom");
  } catch (const SchemaError& e) {
    throw SchemaError("/options/basis", path.string() + "#" + e.what());
  }
}

namespace detail {

inline DecideOptions decide_options(const QueryOptions& o) {
  DecideOptions d;
  d.guards = o.guards;
  d.overlap_precheck = o.overlap_precheck;
  d.trim_initial = o.trim_initial;
  return d;
}

inline void add_dumps(Json& report, const QuerySpec& q, const Verdict& v, const Basis& basis) {
  const QueryOptions& o = q.options;
  if (!o.dump_pol && !o.dump_bpol) return;
  report["monoid"] = io::monoid_to_json(v.eta);
  RatingMap rho(v.eta, o.guards.max_n);
  if (o.dump_bpol) {
    if (v.bpol) {
      report["bpol"] = io::bpol_dump(*v.bpol, basis);
    } else {
      BPolOptions bo;
      bo.guards = o.guards;
      bo.trim_initial = o.trim_initial;
      report["bpol"] = io::bpol_dump(bpol_imprint(basis, rho, bo), basis);
    }
  }
  if (o.dump_pol) {
    if (v.pol && v.alpha) {
      report["pol"] = io::pol_dump(*v.pol, *v.alpha);
    } else {
      CompatibleMorphism alpha = compatible_morphism(v.eta, basis, o.guards.max_monoid);
      PolOptions po;
      po.guards = o.guards;
      report["pol"] = io::pol_dump(pol_saturate(alpha, basis, rho, po), alpha);
    }
  }
}

inline Json report_of(const QuerySpec& q, const Verdict& v, const Basis& basis) {
  const Diagnostics& d = v.diagnostics;
  const bool pol = level_operator(q.level) == Operator::Pol;
  Json r;
  r["task"] = to_string(q.task);
  r["level"] = to_string(q.level);
  r["basis"] = basis.name();
  r["verdict"] = to_string(v.answer);
  if (v.bad_value) {
    r["bad_value"] = io::to_json(*v.bad_value);
    r["bad_value_witnesses"] = io::witnesses(*v.bad_value, v.eta);
  }
  r["sizes"] = {{"monoid", pol && d.pointed_size ? d.pointed_size : d.monoid_size},
                {"rating_base", d.monoid_size},
                {"classes", d.classes}};
  r["iterations"] = {{"outer", d.outer_iterations},
                     {"frontier", d.frontier_sizes.empty() ? 0 : d.frontier_sizes.back()},
                     {"pol_processed", d.pol_processed}};
  r["overlap_precheck"] = d.overlap_precheck;
  if (q.options.trace)
    r["trace"] = {{"frontier_sizes", d.frontier_sizes}, {"set_sizes", d.set_sizes}};
  add_dumps(r, q, v, basis);
  return r;
}

inline std::vector<Dfa> arg_languages(const QuerySpec& q) {
  std::vector<Dfa> out;
  for (const std::string& name : q.args) out.push_back(q.languages.at(name));
  return out;
}

inline Json imprint_report(const QuerySpec& q, const Basis& basis) {
  const std::vector<Dfa> langs = arg_languages(q);
  JointRecognizer joint = joint_transition_monoid(langs, q.options.guards.max_monoid);
  RatingMap rho(joint.morphism, q.options.guards.max_n);
  Json r;
  r["task"] = "imprint";
  r["level"] = to_string(q.level);
  r["basis"] = basis.name();
  r["verdict"] = "Computed";
  r["monoid"] = io::monoid_to_json(joint.morphism);
  Json accepting = Json::array();
  for (const ElementSet& f : joint.accepting) accepting.push_back(io::to_json(to_rating(f)));
  r["accepting"] = accepting;
  if (level_operator(q.level) == Operator::BPol) {
    BPolOptions bo;
    bo.guards = q.options.guards;
    bo.trim_initial = q.options.trim_initial;
    BPolStats stats;
    SatSet p = bpol_imprint(basis, rho, bo, &stats);
    r["imprint"] = io::bpol_dump(p, basis);
    r["sizes"] = {{"monoid", joint.morphism.size()},
                  {"rating_base", joint.morphism.size()},
                  {"classes", basis.num_classes()}};
    r["iterations"] = {{"outer", stats.outer_iterations},
                       {"frontier", stats.frontier_sizes.empty() ? 0 : stats.frontier_sizes.back()},
                       {"pol_processed", 0}};
    if (q.options.trace)
      r["trace"] = {{"frontier_sizes", stats.frontier_sizes}, {"set_sizes", stats.set_sizes}};
  } else {
    CompatibleMorphism alpha =
        compatible_morphism(joint.morphism, basis, q.options.guards.max_monoid);
    PolOptions po;
    po.guards = q.options.guards;
    PolStats stats;
    PointedImprint p = pol_saturate(alpha, basis, rho, po, &stats);
    r["imprint"] = io::pol_dump(p, alpha);
    r["sizes"] = {{"monoid", alpha.morphism.size()},
                  {"rating_base", joint.morphism.size()},
                  {"classes", basis.num_classes()}};
    r["iterations"] = {{"outer", 0}, {"frontier", 0}, {"pol_processed", stats.processed}};
  }
  return r;
}

}  // namespace detail

/// Runs a parsed query and returns its report.
inline Json run_query(const QuerySpec& q) {
  const auto start = std::chrono::steady_clock::now();
  const Basis basis = resolve_basis(q);
  const LevelSpec level{level_operator(q.level), basis};
  const DecideOptions o = detail::decide_options(q.options);
  const std::vector<Dfa> langs = detail::arg_languages(q);

  Json report;
  switch (q.task) {
    case Task::Separate:
      report = detail::report_of(q, separation(langs[0], langs[1], level, o), basis);
      break;
    case Task::Member:
      report = detail::report_of(q, membership(langs[0], level, o), basis);
      break;
    case Task::Cover: {
      std::span<const Dfa> rest(langs.begin() + 1, langs.end());
      report = detail::report_of(q, covering(langs[0], rest, level, o), basis);
      break;
    }
    case Task::Imprint:
      report = detail::imprint_report(q, basis);
      break;
  }
  if (q.options.timing)
    report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

/// Oracles on the query's languages: "j-trivial" and "upward-closed" on the
/// first argument, "k-subword" on the first two (with options.k).
inline Json run_oracle(const QuerySpec& q, const std::string& name) {
  const std::vector<Dfa> langs = detail::arg_languages(q);
  Json r{{"oracle", name}};
  if (name == "j-trivial") {
    r["result"] = oracles::is_j_trivial(transition_monoid(langs[0], q.options.guards.max_monoid)
                                            .morphism.target());
  } else if (name == "upward-closed") {
    r["result"] = oracles::is_upward_closed(langs[0]);
  } else if (name == "k-subword") {
    if (langs.size() < 2) throw SchemaError("/args", "k-subword needs two languages");
    r["k"] = q.options.k;
    r["result"] = oracles::k_subword_separable(langs[0], langs[1], q.options.k);
  } else {
    throw SchemaError("", "unknown oracle '" + name + "' (j-trivial, upward-closed, k-subword)");
  }
  return r;
}

/// Exit status of a run: 0 for a verdict, 2 for bad input, 3 for a guard
/// breach, 1 for anything else.
struct Outcome {
  int exit_code = 0;
  Json report;
};

/// Maps the in-flight exception to an error report.
inline Outcome error_outcome(std::exception_ptr e) {
  Json err;
  int code = 1;
  try {
    std::rethrow_exception(e);
  } catch (const SchemaError& x) {
    code = 2;
    err = {{"kind", "input"}, {"pointer", x.pointer()}, {"message", x.what()}};
    if (x.position()) err["position"] = *x.position();
  } catch (const Json::parse_error& x) {
    code = 2;
    err = {{"kind", "input"}, {"position", x.byte}, {"message", x.what()}};
  } catch (const GuardError& x) {
    code = 3;
    err = {{"kind", "guard"}, {"guard", x.guard()}, {"message", x.what()}};
  } catch (const UnsupportedError& x) {
    code = 2;
    err = {{"kind", "input"}, {"message", x.what()}};
  } catch (const AlphabetError& x) {
    code = 2;
    err = {{"kind", "input"}, {"message", x.what()}};
  } catch (const std::exception& x) {
    err = {{"kind", "internal"}, {"message", x.what()}};
  }
  return {code, Json{{"error", err}}};
}

/// Parses, applies `overrides` (merged into the document before
/// validation), and runs. `oracle` selects an oracle instead of the task.
inline Outcome run_document(const std::string& text, const std::filesystem::path& base_dir,
                            const Json& overrides = Json::object(),
                            const std::string& oracle = "") {
  try {
    Json doc = Json::parse(text);
    if (doc.is_object()) doc.merge_patch(overrides);
    QuerySpec q = parse_query(doc, base_dir);
    return {0, oracle.empty() ? run_query(q) : run_oracle(q, oracle)};
  } catch (...) {
    return error_outcome(std::current_exception());
  }
}

inline Outcome run_file(const std::filesystem::path& path, const Json& overrides = Json::object(),
                        const std::string& oracle = "") {
  std::ifstream in(path);
  if (!in) {
    return {2, Json{{"error", {{"kind", "input"}, {"message", "cannot read " + path.string()}}}}};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_document(buffer.str(), path.parent_path(), overrides, oracle);
}

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
inline std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace sepdec

#endif  // SEPDEC_QUERY_HPP
