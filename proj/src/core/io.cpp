/*
   Copyright 2026 The modgal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace modgal {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::parse, source + ": " + field + ": " + msg);
}

mpz_class read_integer(const json& j, const std::string& source, const std::string& field) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) field_error(source, field, "malformed integer \"" + s + "\"");
    return v;
  }
  field_error(source, field, "expected an integer");
}

long read_small(const json& j, const std::string& source, const std::string& field) {
  mpz_class v = read_integer(j, source, field);
  if (!v.fits_slong_p()) field_error(source, field, "integer out of range");
  return v.get_si();
}

void write_integer(std::ostringstream& os, const mpz_class& v) {
  if (v.fits_slong_p())
    os << v.get_si();
  else
    os << '"' << v.get_str() << '"';
}

void write_entry(std::ostringstream& os, const CycNum& x) {
  os << '[';
  bool first = true;
  for (unsigned i = 0; i < x.degree(); ++i) {
    mpq_class c = x.coefficient(i);
    if (sgn(c) == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << '[';
    write_integer(os, c.get_num());
    os << ", ";
    write_integer(os, c.get_den());
    os << ", " << i << ']';
  }
  os << ']';
}

}  // namespace

ModularData parse_modular_data(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                      ": parse error: " + e.what());
  }
  if (!doc.is_object()) field_error(source, "<root>", "expected an object");
  for (const char* key : {"conductor", "rank", "t", "s"})
    if (!doc.contains(key)) field_error(source, key, "missing field");

  const long n = read_small(doc["conductor"], source, "conductor");
  if (n < 1) field_error(source, "conductor", "must be positive");
  const long r = read_small(doc["rank"], source, "rank");
  if (r < 1) field_error(source, "rank", "must be positive");
  const auto rank = static_cast<std::size_t>(r);

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_array() || jl.size() != rank) field_error(source, "labels", "expected " + std::to_string(rank) + " strings");
    for (std::size_t i = 0; i < rank; ++i) {
      if (!jl[i].is_string()) field_error(source, "labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(jl[i].get<std::string>());
    }
  }

  const json& jt = doc["t"];
  if (!jt.is_array() || jt.size() != rank) field_error(source, "t", "expected " + std::to_string(rank) + " integers");
  std::vector<long> t;
  for (std::size_t i = 0; i < rank; ++i) t.push_back(read_small(jt[i], source, "t[" + std::to_string(i) + "]"));

  const json& js = doc["s"];
  if (!js.is_array() || js.size() != rank) field_error(source, "s", "expected " + std::to_string(rank) + " rows");
  CycMatrix s(rank, rank, static_cast<unsigned>(n));
  for (std::size_t i = 0; i < rank; ++i) {
    const std::string rf = "s[" + std::to_string(i) + "]";
    if (!js[i].is_array() || js[i].size() != rank) field_error(source, rf, "expected " + std::to_string(rank) + " entries");
    for (std::size_t j = 0; j < rank; ++j) {
      const std::string ef = rf + "[" + std::to_string(j) + "]";
      const json& je = js[i][j];
      if (!je.is_array()) field_error(source, ef, "expected a list of [num, den, exp] terms");
      std::vector<mpq_class> coeffs(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < je.size(); ++k) {
        const std::string tf = ef + "[" + std::to_string(k) + "]";
        const json& term = je[k];
        if (!term.is_array() || term.size() != 3) field_error(source, tf, "expected [num, den, exp]");
        mpz_class num = read_integer(term[0], source, tf + "[0]");
        mpz_class den = read_integer(term[1], source, tf + "[1]");
        if (den == 0) field_error(source, tf + "[1]", "zero denominator");
        long e = read_small(term[2], source, tf + "[2]") % n;
        if (e < 0) e += n;
        mpq_class c(num, den);
        c.canonicalize();
        coeffs[static_cast<std::size_t>(e)] += c;
      }
      s(i, j) = CycNum::from_coefficients(static_cast<unsigned>(n), coeffs);
    }
  }

  std::size_t unit = 0;
  if (doc.contains("unit_index")) {
    long u = read_small(doc["unit_index"], source, "unit_index");
    if (u < 0 || u >= r) field_error(source, "unit_index", "out of range");
    unit = static_cast<std::size_t>(u);
  }
  try {
    return ModularData(static_cast<unsigned>(n), std::move(labels), std::move(s), std::move(t), unit);
  } catch (const Error& e) {
    throw Error(ErrorCode::parse, source + ": " + e.what());
  }
}

ModularData load_modular_data(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_modular_data(buf.str(), path);
}

std::string serialize_modular_data(const ModularData& m) {
  std::ostringstream os;
  const std::size_t r = m.rank();
  os << "{\n  \"conductor\": " << m.conductor() << ",\n  \"rank\": " << r << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < r; ++i) os << (i ? ", " : "") << json(m.label(i)).dump();
  os << "],\n  \"t\": [";
  for (std::size_t i = 0; i < r; ++i) os << (i ? ", " : "") << m.t(i);
  os << "],\n  \"s\": [\n";
  for (std::size_t i = 0; i < r; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < r; ++j) {
      if (j) os << ", ";
      write_entry(os, m.s(i, j));
    }
    os << (i + 1 < r ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_modular_data(const ModularData& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << serialize_modular_data(m);
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

}  // namespace modgal
