#ifndef NCCOOP_IO_HPP
#define NCCOOP_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nccoop/errors.hpp"
#include "nccoop/probability.hpp"
#include "nccoop/rational.hpp"

namespace nccoop {

using json = nlohmann::ordered_json;

// Moment table:
//   {"vars":["a","b"],
//    "moments":[{"word":["a"],"value":"1/2"},{"word":["a","b"],"value":"0/1"}]}
// Cumulant sequence (kappa_1, kappa_2, ...):
//   {"cumulants":["0/1","1/1","0/1"]}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

inline Rat rat_field(const json& j, std::string_view what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

}  // namespace detail

inline MomentFunctional parse_moments(std::string_view text) {
  const json doc = detail::parse_json(text);
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("moments"))
    throw parse_error("moment file needs \"vars\" and \"moments\"");
  if (!doc["vars"].is_array() || !doc["moments"].is_array())
    throw parse_error("\"vars\" and \"moments\" must be arrays");

  std::vector<Variable> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) throw parse_error("variable names must be strings");
    vars.push_back(Variable{v.get<std::string>()});
  }
  std::vector<std::pair<Monomial, Rat>> entries;
  for (const auto& entry : doc["moments"]) {
    if (!entry.is_object() || !entry.contains("word") || !entry.contains("value") || !entry["word"].is_array())
      throw parse_error("each moment needs a \"word\" array and a \"value\"");
    Monomial m;
    for (const auto& f : entry["word"]) {
      if (!f.is_string()) throw parse_error("monomial factors must be variable names");
      m.factors.push_back(Variable{f.get<std::string>()});
    }
    entries.emplace_back(std::move(m), detail::rat_field(entry["value"], "moment value"));
  }
  return MomentFunctional::from_table(std::move(vars), entries);
}

inline MomentFunctional load_moments(const std::string& path) { return parse_moments(detail::read_file(path)); }

/// Table-backed functionals only; the unit entry is written explicitly.
inline json moments_to_json(const MomentFunctional& E) {
  if (E.is_generative()) throw validation_error("generative functionals have no finite table");
  json doc;
  doc["vars"] = json::array();
  for (const auto& v : E.variables()) doc["vars"].push_back(v.name);
  doc["moments"] = json::array();
  doc["moments"].push_back({{"word", json::array()}, {"value", "1/1"}});
  for (const auto& [m, value] : E.table()) {
    json word = json::array();
    for (const auto& v : m.factors) word.push_back(v.name);
    doc["moments"].push_back({{"word", word}, {"value", format_rat(value)}});
  }
  return doc;
}

inline void save_moments(const MomentFunctional& E, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write '" + path + "'");
  out << moments_to_json(E).dump(2) << '\n';
}

/// kappa_1..kappa_N from a cumulant sequence document.
inline std::vector<Rat> parse_cumulant_sequence(std::string_view text) {
  const json doc = detail::parse_json(text);
  if (!doc.is_object() || !doc.contains("cumulants") || !doc["cumulants"].is_array())
    throw parse_error("cumulant file needs a \"cumulants\" array");
  std::vector<Rat> out;
  for (const auto& v : doc["cumulants"]) out.push_back(detail::rat_field(v, "cumulant value"));
  if (out.empty()) throw validation_error("cumulant sequence is empty");
  return out;
}

inline std::vector<Rat> load_cumulant_sequence(const std::string& path) {
  return parse_cumulant_sequence(detail::read_file(path));
}

/// {"kind":"free","N":3,"args":["a","a","a"],"value":"p/q"}
inline json cumulant_record(std::string_view kind, const std::vector<Variable>& args, const Rat& value) {
  json rec;
  rec["kind"] = kind;
  rec["N"] = args.size();
  rec["args"] = json::array();
  for (const auto& v : args) rec["args"].push_back(v.name);
  rec["value"] = format_rat(value);
  return rec;
}

}  // namespace nccoop

#endif  // NCCOOP_IO_HPP
