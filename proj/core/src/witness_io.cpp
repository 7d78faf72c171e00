// SPDX-License-Identifier: Apache-2.0
#include "subadd/witness_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subadd {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string header_value(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("witness: missing '" + key + "' line");
  if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("witness: expected '" + key + "', got '" + line + "'");
  return line.substr(key.size() + 1);
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument(std::string("witness: bad ") + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

EpsVector parse_factor(const std::string& text, std::size_t length) {
  EpsVector::Entries entries;
  if (!text.empty()) {
    for (const auto& item : split(text, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("witness: entry without ':' in '" + item + "'");
      const std::size_t coord = parse_count(item.substr(0, colon), "coordinate");
      if (!entries.emplace(coord, EpsPolynomial::parse(item.substr(colon + 1))).second) {
        throw std::invalid_argument("witness: repeated coordinate in '" + text + "'");
      }
    }
  }
  return EpsVector(length, std::move(entries));
}

}  // namespace

void write_witness(std::ostream& out, const SpanWitness& w) {
  out << "ambient-shape";
  for (auto d : w.ambient.dims()) out << ' ' << d;
  out << '\n' << "mode " << w.mode << '\n' << "size " << w.family.size() << '\n';
  for (const auto& z : w.family) {
    for (std::size_t j = 0; j < z.factors.size(); ++j) {
      if (j) out << ';';
      bool first = true;
      for (const auto& [coord, p] : z.factors[j].entries()) {
        out << (first ? "" : ",") << coord << ':' << p.str();
        first = false;
      }
    }
    out << '\n';
  }
}

std::string witness_text(const SpanWitness& w) {
  std::ostringstream s;
  write_witness(s, w);
  return s.str();
}

SpanWitness read_witness(std::istream& in) {
  SpanWitness w;
  std::istringstream dims_text(header_value(in, "ambient-shape"));
  std::vector<std::size_t> dims;
  std::size_t d;
  while (dims_text >> d) dims.push_back(d);
  if (!dims_text.eof()) throw std::invalid_argument("witness: malformed ambient-shape");
  w.ambient = Shape(std::move(dims));
  w.mode = parse_count(header_value(in, "mode"), "mode");
  const std::size_t size = parse_count(header_value(in, "size"), "size");
  std::string line;
  while (w.family.size() < size && std::getline(in, line)) {
    const auto parts = split(line, ';');
    if (parts.size() != w.ambient.order()) {
      throw std::invalid_argument("witness: element " + std::to_string(w.family.size()) + " has " +
                                  std::to_string(parts.size()) + " factors, expected " +
                                  std::to_string(w.ambient.order()));
    }
    RankOneEpsTensor z;
    for (std::size_t j = 0; j < parts.size(); ++j) z.factors.push_back(parse_factor(parts[j], w.ambient[j]));
    w.family.push_back(std::move(z));
  }
  if (w.family.size() != size) throw std::invalid_argument("witness: fewer elements than 'size' announces");
  return w;
}

}  // namespace subadd
