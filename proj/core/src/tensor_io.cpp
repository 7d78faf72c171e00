// SPDX-License-Identifier: Apache-2.0
#include "subadd/tensor_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subadd {

namespace {

template <class Scalar>
void write_generic(std::ostream& out, const SparseTensor<Scalar>& t, const char* ring) {
  out << "order " << t.order() << '\n' << "dims";
  for (auto d : t.shape().dims()) out << ' ' << d;
  out << '\n' << "scalar-ring " << ring << '\n';
  for (const auto& [idx, value] : t.entries()) {
    for (std::size_t j = 0; j < idx.size(); ++j) out << (j ? " " : "") << idx[j];
    out << " : " << value.str() << '\n';
  }
}

std::string expect_line(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("tensor dump: missing '" + key + "' line");
  if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("tensor dump: expected '" + key + "', got '" + line + "'");
  return line.substr(key.size() + 1);
}

template <class Scalar, class Parse>
SparseTensor<Scalar> read_entries(std::istream& in, const Shape& shape, Parse parse) {
  EntryAccumulator<Scalar> acc(shape);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(" : ");
    if (colon == std::string::npos) throw std::invalid_argument("tensor dump: malformed entry '" + line + "'");
    std::istringstream coords(line.substr(0, colon));
    MultiIndex idx;
    std::size_t c;
    while (coords >> c) idx.push_back(c);
    if (!coords.eof()) throw std::invalid_argument("tensor dump: bad coordinates in '" + line + "'");
    acc.add(idx, parse(line.substr(colon + 3)));
  }
  return std::move(acc).build();
}

}  // namespace

void write_tensor(std::ostream& out, const RationalTensor& t) { write_generic(out, t, "Q"); }
void write_tensor(std::ostream& out, const EpsTensor& t) { write_generic(out, t, "Q[e]"); }

std::string dump_tensor(const RationalTensor& t) {
  std::ostringstream s;
  write_tensor(s, t);
  return s.str();
}

std::string dump_tensor(const EpsTensor& t) {
  std::ostringstream s;
  write_tensor(s, t);
  return s.str();
}

AnyTensor read_tensor(std::istream& in) {
  const std::size_t order = std::stoul(expect_line(in, "order"));
  std::istringstream dims_text(expect_line(in, "dims"));
  std::vector<std::size_t> dims;
  std::size_t d;
  while (dims_text >> d) dims.push_back(d);
  if (dims.size() != order) throw std::invalid_argument("tensor dump: dims do not match order");
  const Shape shape(std::move(dims));
  const std::string ring = expect_line(in, "scalar-ring");
  if (ring == "Q") return read_entries<Rational>(in, shape, [](const std::string& s) { return Rational::parse(s); });
  if (ring == "Q[e]") {
    return read_entries<EpsPolynomial>(in, shape, [](const std::string& s) { return EpsPolynomial::parse(s); });
  }
  throw std::invalid_argument("tensor dump: unknown scalar ring '" + ring + "'");
}

}  // namespace subadd
