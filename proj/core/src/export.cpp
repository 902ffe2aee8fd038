#include "cobweb/export.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cobweb {

using nlohmann::json;
// ordered_json keeps keys in insertion order so output is stable and readable.
using nlohmann::ordered_json;

namespace {

std::string join_rows(const IntMatrix& m, char sep) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << sep;
      os << m(r, c).get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_dense(const IntMatrix& m) { return join_rows(m, ' '); }

std::string to_csv(const IntMatrix& m) { return join_rows(m, ','); }

std::string to_json(const IntMatrix& m) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  if (m.rows() == m.cols()) {
    doc["size"] = m.rows();
  } else {
    doc["rows_count"] = m.rows();
    doc["cols_count"] = m.cols();
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

IntMatrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("matrix JSON needs a \"rows\" array");
  }
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion) {
    throw std::invalid_argument("unsupported matrix JSON schema " + doc["schema"].dump());
  }
  const auto& rows = doc["rows"];
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.at(0).size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      const auto& cell = rows[i][j];
      if (cell.is_string()) {
        const auto& s = cell.get_ref<const std::string&>();
        if (mpz_set_str(m(i, j).get_mpz_t(), s.c_str(), 10) != 0) {
          throw std::invalid_argument("matrix entry '" + s + "' is not a decimal integer");
        }
      } else if (cell.is_number_integer()) {
        m(i, j) = Integer(std::to_string(cell.get<long long>()));
      } else {
        throw std::invalid_argument("matrix entries must be integers");
      }
    }
  }
  if (doc.contains("size") && (!doc["size"].is_number_unsigned() || doc["size"].get<std::size_t>() != r ||
                               (r > 0 && c != r))) {
    throw std::invalid_argument("declared size disagrees with rows");
  }
  return m;
}

std::string to_json(const CobwebTruncation& t) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["max_level"] = t.max_level();
  doc["vertices"] = t.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string to_json(const ChainCountReport& r) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["n"] = r.to_level;
  doc["k"] = r.from_level;
  doc["per_source"] = r.per_source.get_str();
  doc["total"] = r.total.get_str();
  doc["fibonomial"] = r.fibonomial.get_str();
  return doc.dump() + "\n";
}

}  // namespace cobweb
