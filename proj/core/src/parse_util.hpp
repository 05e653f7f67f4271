#pragma once

// Internal helpers for the line-oriented text formats. Not installed.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "flatavoid/errors.hpp"
#include "flatavoid/gf2.hpp"

namespace flatavoid::detail {

// Reads the next non-blank line, stripping trailing CR/whitespace.
// `lineno` tracks the 1-based number of the line returned.
inline bool next_content_line(std::istream& in, std::string& out, int& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) {
      out = line;
      return true;
    }
  }
  return false;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream iss(s);
  std::vector<std::string> out;
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::uint64_t parse_uint(const std::string& s, int lineno,
                                const char* what) {
  std::uint64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || p != last || s.empty())
    throw parse_error(lineno,
                      std::string("invalid ") + what + " '" + s + "'");
  return value;
}

// Parses "<key>=<nonnegative int>" or raises parse_error.
inline std::uint64_t parse_kv_uint(const std::string& tok,
                                   const std::string& key, int lineno) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw parse_error(lineno,
                      "expected '" + key + "=<value>', got '" + tok + "'");
  return parse_uint(tok.substr(prefix.size()), lineno, key.c_str());
}

inline BitVector parse_bits(const std::string& s, std::size_t want_len,
                            int lineno, const char* what) {
  for (char ch : s)
    if (ch != '0' && ch != '1')
      throw parse_error(lineno,
                        std::string(what) + " must consist of 0s and 1s");
  if (s.size() != want_len)
    throw parse_error(lineno, std::string(what) + " has length " +
                                  std::to_string(s.size()) + ", expected " +
                                  std::to_string(want_len));
  return BitVector::from_string(s);
}

}  // namespace flatavoid::detail
