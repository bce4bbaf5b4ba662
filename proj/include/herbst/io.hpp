#pragma once

#include "herbst/errors.hpp"
#include "herbst/matrix.hpp"
#include "herbst/number.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace herbst::io {

using nlohmann::json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInteger json_integer(const json &v, const std::string &where) {
  if (v.is_number_integer()) return BigInteger(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return BigInteger(v.get<std::uint64_t>());
  if (v.is_string()) {
    const auto &s = v.get_ref<const std::string &>();
    if (is_integer_literal(s)) return parse_integer(s);
  }
  throw Error(ErrorKind::ParseError, where + ": expected an integer, got " + v.dump());
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    auto pos = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::ParseError,
                "malformed JSON at line " + std::to_string(pos.first) + ", column " +
                    std::to_string(pos.second),
                pos);
  }
}

} // namespace detail

inline IntMatrix matrix_from_json(const json &j, const std::string &where = "matrix") {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, where + ": expected a list of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto &row = j[i];
    if (!row.is_array())
      throw Error(ErrorKind::ParseError, where + ": row " + std::to_string(i) + " is not a list");
    IntVector r;
    for (std::size_t k = 0; k < row.size(); ++k)
      r.push_back(detail::json_integer(row[k], where + "[" + std::to_string(i) + "][" +
                                                   std::to_string(k) + "]"));
    if (!rows.empty() && r.size() != rows.front().size())
      throw Error(ErrorKind::ParseError, where + ": row " + std::to_string(i) + " has " +
                                             std::to_string(r.size()) + " entries, expected " +
                                             std::to_string(rows.front().size()));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

/// Integer entries as decimal strings.
inline json matrix_to_json(const IntMatrix &m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Rational entries as "p/q" (or "p") strings.
inline json matrix_to_json(const RatMatrix &m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline RatMatrix rat_matrix_from_json(const json &j, std::size_t cols_if_empty = 0) {
  std::vector<RatVector> rows;
  for (const auto &row : j) {
    RatVector r;
    for (const auto &x : row) r.push_back(parse_rational(x.get<std::string>()));
    rows.push_back(std::move(r));
  }
  return RatMatrix::from_rows(rows, cols_if_empty);
}

template <class T>
json vector_to_json(const std::vector<T> &v) {
  json out = json::array();
  for (const auto &x : v) out.push_back(to_string(x));
  return out;
}

/// CSV: one row per gauge factor, integer cells separated by commas. Blank
/// lines and lines starting with '#' are skipped.
inline IntMatrix parse_csv_matrix(std::string_view text) {
  std::vector<IntVector> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::string_view t = detail::trim(line);
    if (!t.empty() && t.front() != '#') {
      IntVector row;
      std::size_t cell_start = 0;
      while (cell_start <= line.size()) {
        std::size_t comma = line.find(',', cell_start);
        if (comma == std::string_view::npos) comma = line.size();
        std::string_view cell = detail::trim(line.substr(cell_start, comma - cell_start));
        if (!is_integer_literal(cell)) {
          std::size_t col = cell_start + 1;
          throw Error(ErrorKind::ParseError,
                      "line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                          ": expected an integer, got '" + std::string(cell) + "'",
                      std::pair{line_no, col});
        }
        row.push_back(parse_integer(cell));
        cell_start = comma + 1;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": row has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(rows.front().size()),
                    std::pair{line_no, std::size_t{1}});
      rows.push_back(std::move(row));
    }
    start = end + 1;
  }
  return IntMatrix::from_rows(rows);
}

/// JSON ({"Q": [[...]]} or a bare list of rows) when the text starts with '{'
/// or '[', CSV otherwise. Inline matrices may separate rows with ';'.
inline IntMatrix parse_matrix(std::string_view text) {
  std::string_view t = detail::trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
    json j = detail::parse_json(text);
    if (j.is_object()) {
      if (!j.contains("Q")) throw Error(ErrorKind::ParseError, "JSON input has no \"Q\" field");
      return matrix_from_json(j["Q"], "Q");
    }
    return matrix_from_json(j, "Q");
  }
  std::string csv(text);
  for (auto &ch : csv)
    if (ch == ';') ch = '\n';
  return parse_csv_matrix(csv);
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A JSON list of exponent vectors.
inline std::vector<IntVector> parse_monomials(std::string_view text) {
  json j = detail::parse_json(text);
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "monomials: expected a list of exponent vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array())
      throw Error(ErrorKind::ParseError, "monomial " + std::to_string(i) + " is not a list");
    IntVector m;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      m.push_back(detail::json_integer(j[i][k], "monomial " + std::to_string(i)));
    out.push_back(std::move(m));
  }
  return out;
}

/// "5,6" -> {5, 6}
inline std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::string_view t = detail::trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t comma = t.find(',', start);
    if (comma == std::string_view::npos) comma = t.size();
    std::string_view cell = detail::trim(t.substr(start, comma - start));
    if (cell.empty() || !is_integer_literal(cell) || cell.front() == '-')
      throw Error(ErrorKind::ParseError, "bad column index '" + std::string(cell) + "'");
    out.push_back(static_cast<std::size_t>(std::stoull(std::string(cell))));
    start = comma + 1;
  }
  return out;
}

/// "1,-2/3" -> {1, -2/3}
inline RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::string_view t = detail::trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t comma = t.find(',', start);
    if (comma == std::string_view::npos) comma = t.size();
    out.push_back(parse_rational(detail::trim(t.substr(start, comma - start))));
    start = comma + 1;
  }
  return out;
}

} // namespace herbst::io
