#include "cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#ifndef MEC_VERSION
#define MEC_VERSION "0.0.0"
#endif

namespace mec::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::kParse, msg); }

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    parse_error(std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<double> real_row(const json& row, std::size_t row_index, const char* what) {
  if (!row.is_array()) {
    std::ostringstream os;
    os << what << " row " << row_index + 1 << " is not an array";
    parse_error(os.str());
  }
  std::vector<double> out;
  out.reserve(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_number()) {
      std::ostringstream os;
      os << what << " row " << row_index + 1 << ", column " << j + 1 << ": not a number";
      parse_error(os.str());
    }
    out.push_back(row[j].get<double>());
  }
  return out;
}

std::vector<std::string> string_list(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const json& arr = doc.at(key);
  if (!arr.is_array()) parse_error(std::string("\"") + key + "\" must be an array");
  for (const json& v : arr) {
    if (!v.is_string()) parse_error(std::string("\"") + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::size_t positive_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    parse_error(where + ": expected a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Collection parse_collection(std::istream& in) {
  const json doc = parse_json(in);
  const json& rows = require(doc, "distributions");
  if (!rows.is_array() || rows.empty()) parse_error("\"distributions\" must be a nonempty array");
  Collection col;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> masses = real_row(rows[i], i, "distribution");
    // Entry-level faults get a 1-based column; sum faults only a row.
    std::optional<std::size_t> column;
    for (std::size_t j = 0; j < masses.size() && !column; ++j) {
      if (!std::isfinite(masses[j]) || masses[j] < -kNegativeClamp) column = j;
    }
    try {
      col.distributions.emplace_back(masses);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "distribution row " << i + 1;
      if (column) os << ", column " << *column + 1;
      os << ": " << to_string(e.code()) << ": " << e.what();
      parse_error(os.str());
    }
  }
  col.labels = string_list(doc, "labels");
  if (!col.labels.empty() && col.labels.size() != col.distributions.size()) {
    parse_error("\"labels\" must name every distribution");
  }
  col.ground_set = string_list(doc, "ground_set");
  return col;
}

Collection read_collection(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_collection(in);
}

void write_coupling(std::ostream& out, const Coupling& c) {
  out << "{\n";
  out << "  \"format\": \"mec-coupling\",\n";
  out << "  \"version\": \"" << MEC_VERSION << "\",\n";
  out << "  \"m\": " << c.num_inputs() << ",\n";
  out << "  \"n\": " << c.n << ",\n";
  out << "  \"truncation\": ";
  if (c.truncation) {
    out << *c.truncation;
  } else {
    out << "null";
  }
  out << ",\n  \"q\": [";
  for (std::size_t z = 0; z < c.q.size(); ++z) {
    out << (z ? ", " : "") << format_real(c.q[z]);
  }
  out << "],\n  \"maps\": [";
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t z = 0; z < c.maps[i].size(); ++z) {
      out << (z ? ", " : "") << c.maps[i][z] + 1;
    }
    out << "]";
  }
  out << "\n  ],\n  \"provenance\": [";
  for (std::size_t z = 0; z < c.origin.size(); ++z) {
    out << (z ? ", " : "") << "[" << c.origin[z].rank + 1 << ", " << c.origin[z].stick + 1
        << "]";
  }
  out << "]\n}\n";
}

Coupling parse_coupling(std::istream& in) {
  const json doc = parse_json(in);
  Coupling c;
  const json& m_json = require(doc, "m");
  const json& n_json = require(doc, "n");
  const std::size_t m = positive_index(m_json, "\"m\"");
  c.n = positive_index(n_json, "\"n\"");
  if (doc.contains("truncation") && !doc.at("truncation").is_null()) {
    c.truncation = positive_index(doc.at("truncation"), "\"truncation\"");
  }

  std::vector<double> q = real_row(require(doc, "q"), 0, "q");
  try {
    c.q = Pmf(std::move(q), Pmf::Rescale::kNo);
  } catch (const Error& e) {
    parse_error(std::string("q: ") + e.what());
  }
  const std::size_t k = c.q.size();

  const json& maps = require(doc, "maps");
  if (!maps.is_array() || maps.size() != m) {
    std::ostringstream os;
    os << "\"maps\" must hold m = " << m << " rows";
    parse_error(os.str());
  }
  for (std::size_t i = 0; i < m; ++i) {
    const json& row = maps[i];
    if (!row.is_array() || row.size() != k) {
      std::ostringstream os;
      os << "maps row " << i + 1 << " must have one label per cell (" << k << ")";
      parse_error(os.str());
    }
    std::vector<std::size_t> labels;
    labels.reserve(k);
    for (std::size_t z = 0; z < k; ++z) {
      std::ostringstream where;
      where << "maps row " << i + 1 << ", column " << z + 1;
      const std::size_t label = positive_index(row[z], where.str());
      if (label > c.n) parse_error(where.str() + ": label exceeds n");
      labels.push_back(label - 1);
    }
    c.maps.push_back(std::move(labels));
  }

  if (doc.contains("provenance")) {
    const json& prov = doc.at("provenance");
    if (!prov.is_array() || prov.size() != k) parse_error("\"provenance\" must cover every cell");
    for (std::size_t z = 0; z < k; ++z) {
      const json& pair = prov[z];
      if (!pair.is_array() || pair.size() != 2) {
        parse_error("provenance entries must be [rank, stick] pairs");
      }
      c.origin.push_back({positive_index(pair[0], "provenance rank") - 1,
                          positive_index(pair[1], "provenance stick") - 1});
    }
  } else {
    c.origin.assign(k, CellOrigin{0, 0});
  }
  return c;
}

Coupling read_coupling(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_coupling(in);
}

JointTable parse_joint(std::istream& in) {
  const json doc = parse_json(in);
  const json& rows = require(doc, "joint");
  if (!rows.is_array() || rows.empty()) parse_error("\"joint\" must be a nonempty array");
  JointTable table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.push_back(real_row(rows[i], i, "joint"));
    if (table.back().size() != table.front().size()) {
      std::ostringstream os;
      os << "joint row " << i + 1 << " has " << table.back().size() << " columns, expected "
         << table.front().size();
      parse_error(os.str());
    }
  }
  return table;
}

JointTable read_joint(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_joint(in);
}

}  // namespace mec::cli
