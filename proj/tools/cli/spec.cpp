#include "spec.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace operadkit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw ParseError(source + ": " + field + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& source, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(source, where.empty() ? key : where + "." + key, "missing");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& source, const std::string& field) {
  if (!j.is_string()) fail(source, field, "expected a string");
  return j.get<std::string>();
}

std::size_t as_count(const json& j, const std::string& source, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(source, field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational as_rational(const json& j, const std::string& source, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(source, field, e.what());
    }
  }
  fail(source, field, "coefficients must be integers or \"p/q\" strings");
}

std::size_t as_index(const json& j, const std::vector<std::string>& labels, const std::string& source,
                     const std::string& field) {
  std::size_t idx = 0;
  if (j.is_string()) {
    const auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
    if (it == labels.end()) fail(source, field, "unknown label \"" + j.get<std::string>() + "\"");
    idx = static_cast<std::size_t>(it - labels.begin());
  } else {
    idx = as_count(j, source, field);
  }
  if (idx >= labels.size()) {
    fail(source, field, "index " + std::to_string(idx) + " out of range 0.." + std::to_string(labels.size() - 1));
  }
  return idx;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

OperationSpec parse_operation(const json& j, const AlgebraSpec& alg, const std::string& source,
                              const std::string& where) {
  OperationSpec op;
  op.name = as_string(member(j, "name", source, where), source, where + ".name");
  op.arity = as_count(member(j, "arity", source, where), source, where + ".arity");
  if (op.arity < 1) fail(source, where + ".arity", "arity must be at least 1");
  if (j.contains("component")) {
    op.component = as_count(j.at("component"), source, where + ".component");
    if (*op.component < 1 || *op.component > op.arity) fail(source, where + ".component", "component outside 1..arity");
  }
  if (j.contains("omega")) {
    const json& w = j.at("omega");
    if (w.is_string()) {
      op.omega.push_back(w.get<std::string>());
    } else if (w.is_array()) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        op.omega.push_back(as_string(w[k], source, where + ".omega[" + std::to_string(k) + "]"));
      }
    } else {
      fail(source, where + ".omega", "expected a label or a list of labels");
    }
  }
  if (j.contains("weight")) op.weight = as_rational(j.at("weight"), source, where + ".weight");
  const json& entries = member(j, "entries", source, where);
  if (!entries.is_array()) fail(source, where + ".entries", "expected a list");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string field = where + ".entries[" + std::to_string(e) + "]";
    const json& row = entries[e];
    if (!row.is_array() || row.size() != op.arity + 2) {
      fail(source, field, "expected " + std::to_string(op.arity) + " inputs, an output and a coefficient");
    }
    Entry entry;
    for (std::size_t k = 0; k < op.arity; ++k) {
      entry.inputs.push_back(as_index(row[k], alg.labels, source, field + "[" + std::to_string(k) + "]"));
    }
    entry.output = as_index(row[op.arity], alg.labels, source, field + "[" + std::to_string(op.arity) + "]");
    entry.value = as_rational(row[op.arity + 1], source, field + "[" + std::to_string(op.arity + 1) + "]");
    op.entries.push_back(std::move(entry));
  }
  return op;
}

}  // namespace

std::vector<const OperationSpec*> AlgebraSpec::find(const std::string& op_name) const {
  std::vector<const OperationSpec*> out;
  for (const auto& op : operations) {
    if (op.name == op_name) out.push_back(&op);
  }
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
}

AlgebraSpec parse_algebra(const json& j, const std::string& source) {
  AlgebraSpec alg;
  alg.source = source;
  alg.name = j.contains("name") ? as_string(j.at("name"), source, "name") : source;
  const std::size_t dim = as_count(member(j, "dimension", source, ""), source, "dimension");
  if (dim < 1) fail(source, "dimension", "must be at least 1");
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_array() || l.size() != dim) fail(source, "labels", "expected one label per basis element");
    for (std::size_t k = 0; k < l.size(); ++k) alg.labels.push_back(as_string(l[k], source, "labels[" + std::to_string(k) + "]"));
    if (std::set<std::string>(alg.labels.begin(), alg.labels.end()).size() != dim) fail(source, "labels", "labels must be distinct");
  } else {
    for (std::size_t k = 0; k < dim; ++k) alg.labels.push_back("e" + std::to_string(k));
  }
  if (j.contains("grading")) {
    const json& g = j.at("grading");
    if (!g.is_array() || g.size() != dim) fail(source, "grading", "expected one degree per basis element");
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g[k].is_number_integer()) fail(source, "grading[" + std::to_string(k) + "]", "expected an integer");
      alg.grading.push_back(g[k].get<int>());
    }
  }
  const json& ops = member(j, "operations", source, "");
  if (!ops.is_array()) fail(source, "operations", "expected a list");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    alg.operations.push_back(parse_operation(ops[k], alg, source, "operations[" + std::to_string(k) + "]"));
  }
  return alg;
}

SemigroupSpec parse_semigroup(const json& j, const std::string& source) {
  SemigroupSpec s;
  s.source = source;
  const json& el = member(j, "elements", source, "");
  if (!el.is_array() || el.empty()) fail(source, "elements", "expected a nonempty list");
  for (std::size_t k = 0; k < el.size(); ++k) s.elements.push_back(as_string(el[k], source, "elements[" + std::to_string(k) + "]"));
  const json& t = member(j, "table", source, "");
  if (!t.is_array() || t.size() != s.elements.size()) fail(source, "table", "expected one row per element");
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::string row_field = "table[" + std::to_string(r) + "]";
    if (!t[r].is_array() || t[r].size() != s.elements.size()) fail(source, row_field, "expected one entry per element");
    s.table.emplace_back();
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      const std::string field = row_field + "[" + std::to_string(c) + "]";
      std::string v;
      if (t[r][c].is_number_integer()) {
        v = s.elements.at(as_index(t[r][c], s.elements, source, field));
      } else {
        v = as_string(t[r][c], source, field);
        if (std::find(s.elements.begin(), s.elements.end(), v) == s.elements.end()) {
          fail(source, field, "\"" + v + "\" is not an element (table must be closed)");
        }
      }
      s.table.back().push_back(v);
    }
  }
  try {
    if (!validate_semigroup(s.elements, s.table)) fail(source, "table", "multiplication is not associative");
  } catch (const std::invalid_argument& e) {
    fail(source, "table", e.what());
  }
  return s;
}

InputSet parse_inputs(const std::vector<std::filesystem::path>& paths) {
  InputSet set;
  for (const auto& path : paths) {
    const std::string source = path.string();
    std::ifstream in(path);
    if (!in) throw ParseError(source + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    const json j = parse_json_text(buf.str(), source);
    const std::string kind = as_string(member(j, "kind", source, ""), source, "kind");
    if (kind == "algebra") {
      set.algebras.push_back(parse_algebra(j, source));
    } else if (kind == "semigroup") {
      set.semigroups.push_back(parse_semigroup(j, source));
    } else {
      fail(source, "kind", "expected \"algebra\" or \"semigroup\"");
    }
  }
  return set;
}

json to_json(const AlgebraSpec& spec) {
  json ops = json::array();
  for (const auto& op : spec.operations) {
    json o;
    o["name"] = op.name;
    o["arity"] = op.arity;
    if (op.component) o["component"] = *op.component;
    if (!op.omega.empty()) o["omega"] = op.omega;
    if (op.weight) o["weight"] = to_string(*op.weight);
    json entries = json::array();
    for (const auto& e : op.entries) {
      json row = json::array();
      for (std::size_t x : e.inputs) row.push_back(x);
      row.push_back(e.output);
      row.push_back(to_string(e.value));
      entries.push_back(std::move(row));
    }
    o["entries"] = std::move(entries);
    ops.push_back(std::move(o));
  }
  json j;
  j["kind"] = "algebra";
  j["name"] = spec.name;
  j["dimension"] = spec.dimension();
  j["labels"] = spec.labels;
  if (!spec.grading.empty()) j["grading"] = spec.grading;
  j["operations"] = std::move(ops);
  return j;
}

json to_json(const SemigroupSpec& spec) {
  json j;
  j["kind"] = "semigroup";
  j["elements"] = spec.elements;
  j["table"] = spec.table;
  return j;
}

}  // namespace operadkit::cli
