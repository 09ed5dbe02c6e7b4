#pragma once

// File formats (all indices 1-based):
//
//   list, canonical:  {"n": 3, "swaps": [[1, 2, 1], [1, 3, 1], [2, 3, 1]]}
//                     triples [i, j, count] with i < j and count >= 1,
//                     sorted, no repeated pair, no other fields.
//   list, matrix:     n lines of n non-negative integers; symmetric with a
//                     zero diagonal. Blank lines and lines starting with '#'
//                     are ignored.
//   tangle:           {"n": 3, "perms": [[1, 2, 3], [2, 1, 3]]}
//                     each row is a wire order (the wire at each position).

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangle/permutation.hpp"
#include "tangle/solve_report.hpp"
#include "tangle/swap_list.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

inline void reject_unknown_fields(const json& doc, std::initializer_list<const char*> known, const char* what) {
  if (!doc.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError(std::string(what) + ": unknown field '" + key + "'");
  }
  for (const char* k : known)
    if (!doc.contains(k)) throw ParseError(std::string(what) + ": missing field '" + k + "'");
}

inline std::int64_t read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

inline int read_order(const json& doc, const char* what) {
  auto n = read_int(doc.at("n"), std::string(what) + " field 'n'");
  if (n < 1 || n > 4096) throw ParseError(std::string(what) + " field 'n': must be between 1 and 4096");
  return static_cast<int>(n);
}

inline SwapList parse_list_json(const std::string& text) {
  json doc = parse_json(text, "list");
  reject_unknown_fields(doc, {"n", "swaps"}, "list");
  const int n = read_order(doc, "list");
  const json& swaps = doc.at("swaps");
  if (!swaps.is_array()) throw ParseError("list field 'swaps': expected an array");
  SwapList list(n);
  for (std::size_t k = 0; k < swaps.size(); ++k) {
    const std::string where = "list swaps[" + std::to_string(k) + "]";
    const json& t = swaps[k];
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ": expected [i, j, count]");
    auto i = read_int(t[0], where + "[0]");
    auto j = read_int(t[1], where + "[1]");
    auto c = read_int(t[2], where + "[2]");
    if (i < 1 || j > n || i >= j) throw ParseError(where + ": need 1 <= i < j <= n");
    if (c < 1 || c > std::numeric_limits<Count>::max()) throw ParseError(where + ": count must be positive");
    if (list.at(static_cast<Wire>(i - 1), static_cast<Wire>(j - 1)) != 0)
      throw ParseError(where + ": pair listed twice");
    list.set(static_cast<Wire>(i - 1), static_cast<Wire>(j - 1), static_cast<Count>(c));
  }
  return list;
}

inline SwapList parse_list_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> line_no;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0)
        throw ParseError("matrix line " + std::to_string(number) + ": '" + token + "' is not a non-negative integer");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    line_no.push_back(number);
  }
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw ParseError("matrix: no rows");
  SwapList list(n);
  for (int i = 0; i < n; ++i) {
    const std::string where = "matrix line " + std::to_string(line_no[i]);
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError(where + ": expected " + std::to_string(n) + " entries, found " + std::to_string(rows[i].size()));
    if (rows[i][i] != 0) throw ParseError(where + ": diagonal entry must be 0");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw ParseError("matrix line " + std::to_string(line_no[i]) + ": entry " + std::to_string(j + 1) +
                         " differs from its mirror on line " + std::to_string(line_no[j]));
      if (rows[i][j] > std::numeric_limits<Count>::max())
        throw ParseError("matrix line " + std::to_string(line_no[i]) + ": entry too large");
      list.set(i, j, static_cast<Count>(rows[i][j]));
    }
  return list;
}

}  // namespace detail

/// Accepts either the canonical JSON form or the matrix form.
inline SwapList parse_list(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return detail::parse_list_json(text);
  return detail::parse_list_matrix(text);
}

inline std::string serialize_list(const SwapList& list) {
  std::ostringstream out;
  out << "{\"n\": " << list.order() << ", \"swaps\": [";
  bool first = true;
  for (const auto& [p, c] : list.entries()) {
    out << (first ? "" : ", ") << '[' << p.lo + 1 << ", " << p.hi + 1 << ", " << c << ']';
    first = false;
  }
  out << "]}\n";
  return out.str();
}

inline std::string serialize_list_matrix(const SwapList& list) {
  std::ostringstream out;
  for (Wire i = 0; i < list.order(); ++i) {
    for (Wire j = 0; j < list.order(); ++j) out << (j ? " " : "") << list.at(i, j);
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json tangle_to_json(const Tangle& t) {
  nlohmann::json perms = nlohmann::json::array();
  for (const auto& p : t.permutations()) {
    nlohmann::json row = nlohmann::json::array();
    for (Wire w : p.wire_order()) row.push_back(w + 1);
    perms.push_back(std::move(row));
  }
  return {{"n", t.order()}, {"perms", std::move(perms)}};
}

inline std::string serialize_tangle(const Tangle& t) {
  std::ostringstream out;
  out << "{\"n\": " << t.order() << ", \"perms\": [";
  for (int k = 0; k < t.height(); ++k) {
    out << (k ? ",\n  " : "\n  ") << '[';
    const auto& order = t.permutations()[k].wire_order();
    for (std::size_t p = 0; p < order.size(); ++p) out << (p ? ", " : "") << order[p] + 1;
    out << ']';
  }
  out << "\n]}\n";
  return out.str();
}

inline Tangle tangle_from_json(const nlohmann::json& doc) {
  detail::reject_unknown_fields(doc, {"n", "perms"}, "tangle");
  const int n = detail::read_order(doc, "tangle");
  const auto& rows = doc.at("perms");
  if (!rows.is_array() || rows.empty()) throw ParseError("tangle field 'perms': expected a non-empty array");
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string where = "tangle perms[" + std::to_string(k) + "]";
    if (!rows[k].is_array() || static_cast<int>(rows[k].size()) != n)
      throw ParseError(where + ": expected " + std::to_string(n) + " wires");
    std::vector<Wire> order;
    for (std::size_t p = 0; p < rows[k].size(); ++p) {
      auto w = detail::read_int(rows[k][p], where + "[" + std::to_string(p) + "]");
      if (w < 1 || w > n) throw ParseError(where + ": wire out of range");
      order.push_back(static_cast<Wire>(w - 1));
    }
    try {
      perms.push_back(Permutation::from_wire_order(std::move(order)));
    } catch (const std::invalid_argument&) {
      throw ParseError(where + ": not a permutation");
    }
  }
  try {
    return Tangle(std::move(perms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tangle: ") + e.what());
  }
}

inline Tangle parse_tangle(const std::string& text) { return tangle_from_json(detail::parse_json(text, "tangle")); }

inline nlohmann::json report_to_json(const SolveReport& report, std::string_view algo) {
  nlohmann::json doc{{"algo", algo},
                     {"verdict", to_string(report.verdict)},
                     {"elapsed_ms", report.elapsed_ms},
                     {"states_explored", report.states_explored},
                     {"states_stored", report.states_stored}};
  if (report.tangle) {
    doc["height"] = report.tangle->height();
    doc["tangle"] = tangle_to_json(*report.tangle);
  }
  return doc;
}

}  // namespace tangle
