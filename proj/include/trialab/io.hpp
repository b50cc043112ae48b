// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trialab/altmap.hpp"
#include "trialab/binfun.hpp"
#include "trialab/error.hpp"

namespace trialab::io {

namespace detail {

/// Non-empty, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Binary-function text format:
///   bf <m>
///   <index> <re> <im>     (2^m lines, index ascending from 0)
/// Element e_i is the index bit of weight 2^(m-1-i). '#' starts a comment line.
inline RawVector read_vector(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) detail::fail(0, "missing 'bf <m>' header");
  std::istringstream header(lines[0].second);
  std::string tag;
  long long m = -1;
  std::string extra;
  if (!(header >> tag >> m) || tag != "bf" || m < 0 || (header >> extra)) {
    detail::fail(lines[0].first, "expected 'bf <m>'");
  }
  const std::size_t length = checked_length(static_cast<std::size_t>(m));
  if (lines.size() - 1 != length) {
    throw Error(ErrorKind::WrongLength, "expected " + std::to_string(length) + " entries, found " +
                                            std::to_string(lines.size() - 1));
  }
  std::vector<Complex> values(length);
  for (std::size_t k = 0; k < length; ++k) {
    std::istringstream row(lines[k + 1].second);
    long long index = -1;
    double re = 0.0;
    double im = 0.0;
    if (!(row >> index >> re >> im) || (row >> extra)) detail::fail(lines[k + 1].first, "expected '<index> <re> <im>'");
    if (index != static_cast<long long>(k)) detail::fail(lines[k + 1].first, "indices must ascend from 0");
    values[k] = Complex{re, im};
  }
  return RawVector(static_cast<std::size_t>(m), std::move(values));
}

inline void write_vector(std::ostream& out, const RawVector& v) {
  out << "bf " << v.m() << '\n';
  for (std::size_t k = 0; k < v.size(); ++k) {
    out << k << ' ' << detail::format_double(v[k].real()) << ' ' << detail::format_double(v[k].imag()) << '\n';
  }
}

/// Reads a binary function; strict mode rejects a non-unit empty-set entry,
/// otherwise the vector is divided through by it.
inline BinaryFunction read_binary_function(std::istream& in, bool normalize = false, double tol = kDefaultTol) {
  const RawVector raw = read_vector(in);
  if (normalize) return BinaryFunction::normalize(raw, tol);
  return BinaryFunction::make(raw.m(), std::vector<Complex>(raw.values().begin(), raw.values().end()), tol);
}

/// Dimap text format:
///   adm <ndarts>
///   edge <label> <tail_dart> <head_dart>
///   vertex <dart> <dart> ...            (clockwise rotation)
inline DimapSpec read_dimap_spec(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) detail::fail(0, "missing 'adm <ndarts>' header");
  std::istringstream header(lines[0].second);
  std::string tag;
  long long ndarts = -1;
  std::string extra;
  if (!(header >> tag >> ndarts) || tag != "adm" || ndarts < 0 || (header >> extra)) {
    detail::fail(lines[0].first, "expected 'adm <ndarts>'");
  }
  DimapSpec spec;
  std::set<int> darts;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream row(lines[k].second);
    std::string kind;
    row >> kind;
    if (kind == "edge") {
      DimapEdge edge;
      if (!(row >> edge.label >> edge.tail >> edge.head) || (row >> extra)) {
        detail::fail(lines[k].first, "expected 'edge <label> <tail_dart> <head_dart>'");
      }
      darts.insert(edge.tail);
      darts.insert(edge.head);
      spec.edges.push_back(std::move(edge));
    } else if (kind == "vertex") {
      std::vector<int> rot;
      std::string token;
      while (row >> token) {
        int dart = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), dart);
        if (ec != std::errc{} || ptr != token.data() + token.size()) detail::fail(lines[k].first, "bad dart '" + token + "'");
        rot.push_back(dart);
      }
      spec.vertices.push_back(std::move(rot));
    } else {
      detail::fail(lines[k].first, "unknown record '" + kind + "'");
    }
  }
  if (static_cast<long long>(darts.size()) != ndarts || static_cast<long long>(2 * spec.edges.size()) != ndarts) {
    detail::fail(lines[0].first, "header declares " + std::to_string(ndarts) + " darts but edges use " +
                                     std::to_string(darts.size()));
  }
  return spec;
}

/// Parses and validates; invalid maps are rejected with InvalidMap.
inline AlternatingDimap read_dimap(std::istream& in) { return AlternatingDimap::build(read_dimap_spec(in)); }

inline void write_dimap(std::ostream& out, const AlternatingDimap& g) {
  const DimapSpec spec = g.spec();
  out << "adm " << 2 * spec.edges.size() << '\n';
  for (const auto& e : spec.edges) out << "edge " << e.label << ' ' << e.tail << ' ' << e.head << '\n';
  for (const auto& rot : spec.vertices) {
    out << "vertex";
    for (int d : rot) out << ' ' << d;
    out << '\n';
  }
}

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return reader(in);
}

template <typename Writer>
void write_file(const std::string& path, Writer writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  writer(out);
}

inline std::string to_string(const RawVector& v) {
  std::ostringstream out;
  write_vector(out, v);
  return out.str();
}

inline std::string to_string(const AlternatingDimap& g) {
  std::ostringstream out;
  write_dimap(out, g);
  return out.str();
}

}  // namespace trialab::io
