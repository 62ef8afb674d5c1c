#ifndef SPRINGER_JSON_IO_HPP
#define SPRINGER_JSON_IO_HPP

// Wire formats.
//
// Matrix:  {"p": int, "e": int, "n": int, "entries": [[x, ...], ...]}
//          x is an integer in [0, p) for e = 1 and a pair [c0, c1] for e = 2.
// Entry lists on the command line: "1,0,1"; an F_{p^2} entry is "c0:c1".

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/field.hpp"
#include "springer/matrix.hpp"
#include "springer/witt.hpp"

namespace springer {

using Json = nlohmann::ordered_json;

/// Malformed input; what() names the offending location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json entry_to_json(const Field& f, Coords c) {
  if (f.degree() == 1) return c.c0;
  return Json::array({c.c0, c.c1});
}

inline Json matrix_to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(entry_to_json(m.field(), m.raw(i, j)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["p"] = m.field().p();
  j["e"] = m.field().degree();
  j["n"] = m.size();
  j["entries"] = std::move(rows);
  return j;
}

inline Json witt_to_json(const WittVector& w) {
  Json a = Json::array();
  for (const auto& e : w.entries()) a.push_back(entry_to_json(w.field(), e.coords()));
  return a;
}

namespace detail {

inline std::uint32_t reduced_coordinate(const Json& v, const Field& f, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where + ": expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < 0 || x >= static_cast<std::int64_t>(f.p()))
    throw FormatError(where + ": " + std::to_string(x) + " is not a reduced residue mod " + std::to_string(f.p()));
  return static_cast<std::uint32_t>(x);
}

inline std::int64_t required_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  if (!j[key].is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return j[key].get<std::int64_t>();
}

}  // namespace detail

inline Coords entry_from_json(const Json& v, const Field& f, const std::string& where) {
  if (f.degree() == 1) return {detail::reduced_coordinate(v, f, where), 0};
  if (!v.is_array() || v.size() != 2) throw FormatError(where + ": expected a pair [c0, c1]");
  return {detail::reduced_coordinate(v[0], f, where + "[0]"), detail::reduced_coordinate(v[1], f, where + "[1]")};
}

inline FpMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("matrix: expected a JSON object");
  auto p = detail::required_int(j, "p");
  auto e = detail::required_int(j, "e");
  auto n = detail::required_int(j, "n");
  if (p < 2 || p > Field::kMaxPrime || !is_prime(static_cast<std::uint64_t>(p)))
    throw FormatError("field \"p\": " + std::to_string(p) + " is not a supported prime");
  if (e != 1 && e != 2) throw FormatError("field \"e\": must be 1 or 2");
  if (n < 1) throw FormatError("field \"n\": must be positive");
  Field f(static_cast<std::uint32_t>(p), static_cast<unsigned>(e));
  if (!j.contains("entries") || !j["entries"].is_array()) throw FormatError("field \"entries\": expected an array");
  const Json& rows = j["entries"];
  auto size = static_cast<std::size_t>(n);
  if (rows.size() != size)
    throw FormatError("entries: expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  FpMatrix m(f, size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string where = "entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != size)
      throw FormatError(where + ": expected a row of " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < size; ++k)
      m.set_raw(i, k, entry_from_json(rows[i][k], f, where + "[" + std::to_string(k) + "]"));
  }
  return m;
}

inline FpMatrix matrix_from_string(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw FormatError(origin + ": invalid JSON at byte " + std::to_string(err.byte));
  }
  try {
    return matrix_from_json(j);
  } catch (const FormatError& err) {
    throw FormatError(origin + ": " + err.what());
  }
}

/// Parses "1,0,2" (or "1:2,0:1" over F_{p^2}); entries are reduced mod p.
inline std::vector<FieldScalar> parse_entry_list(const std::string& text, const Field& f) {
  std::vector<FieldScalar> out;
  std::size_t pos = 0;
  std::size_t index = 0;
  auto parse_int = [&](const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (tok.empty() || used != tok.size())
      throw FormatError("entry " + std::to_string(index) + ": '" + tok + "' is not an integer");
    return v;
  };
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(f, parse_int(tok));
    } else {
      if (f.degree() != 2) throw FormatError("entry " + std::to_string(index) + ": pair entries need --e 2");
      Coords c{f.reduce(parse_int(tok.substr(0, colon))), f.reduce(parse_int(tok.substr(colon + 1)))};
      out.emplace_back(f, c);
    }
    ++index;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (tok.empty() || used != tok.size() || tok[0] == '-')
      throw FormatError("'" + tok + "' is not a non-negative integer");
    out.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace springer

#endif  // SPRINGER_JSON_IO_HPP
