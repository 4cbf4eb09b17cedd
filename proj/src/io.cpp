#include "bcodec/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace bcodec::io {

using nlohmann::json;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string format_entry(int v) { return std::to_string(v); }
std::string format_entry(double v) { return format_real(v); }

template <class Entry>
std::string tableau_json(const Tableau<Entry>& t) {
  std::string out = "{\"shape\":[";
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t.rows()[i].size());
  }
  out += "],\"rows\":[";
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    const auto& row = t.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += format_entry(row[j]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

template <class Entry>
std::vector<std::vector<Entry>> parse_rows(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"rows\" array");
  }
  std::vector<std::vector<Entry>> rows;
  try {
    rows = doc["rows"].get<std::vector<std::vector<Entry>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (doc.contains("shape")) {
    std::vector<int> shape;
    try {
      shape = doc["shape"].get<std::vector<int>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    bool agrees = shape.size() == rows.size();
    for (std::size_t i = 0; agrees && i < rows.size(); ++i) {
      agrees = shape[i] == static_cast<int>(rows[i].size());
    }
    if (!agrees) throw Error(ErrorCode::ParseError, "\"shape\" disagrees with \"rows\"");
  }
  return rows;
}

}  // namespace

std::string to_json(const StandardTableau& t) { return tableau_json(t); }
std::string to_json(const RealTableau& t) { return tableau_json(t); }

std::string to_json(const Nerve& nerve) {
  json cells = json::array();
  for (const Cell& c : nerve.cells) cells.push_back({c.row, c.col});
  const Cell end = nerve.cells.empty() ? Cell{} : nerve.cells.back();
  json doc = {{"cells", cells}, {"values", nerve.values}, {"endpoint", {end.row, end.col}}};
  return doc.dump();
}

StandardTableau parse_standard_tableau(const std::string& json_text) {
  return StandardTableau(parse_rows<int>(json_text));
}

RealTableau parse_real_tableau(const std::string& json_text) {
  return RealTableau(parse_rows<double>(json_text));
}

std::vector<double> read_reals(std::istream& in) {
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error(ErrorCode::ParseError, "not a real number: " + token);
    out.push_back(v);
  }
  return out;
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "trial,seed,n";
  if (!result.records.empty()) {
    for (const auto& [name, value] : result.records.front().measurements) out << ',' << name;
  }
  out << '\n';
  for (const auto& rec : result.records) {
    out << rec.trial << ',' << rec.seed << ',' << rec.n;
    for (const auto& [name, value] : rec.measurements) out << ',' << format_real(value);
    out << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentResult& result) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& rec : result.records) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.measurements) m[name] = value;
    doc.push_back({{"trial", rec.trial}, {"seed", rec.seed}, {"n", rec.n}, {"measurements", m}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace bcodec::io
