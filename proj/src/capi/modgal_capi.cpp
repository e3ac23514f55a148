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

#include "modgal/modgal.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "families.hpp"
#include "galois_action.hpp"
#include "io.hpp"
#include "modular_data.hpp"
#include "pointed.hpp"
#include "report.hpp"
#include "tables.hpp"

struct modgal_data {
  modgal::ModularData m;
};

namespace {

thread_local std::string g_last_error;

modgal_status set_error(modgal_status st, std::string msg) {
  g_last_error = std::move(msg);
  return st;
}

modgal_status from_code(modgal::ErrorCode c) {
  return static_cast<modgal_status>(static_cast<int>(c));
}

// Runs f, translating exceptions into status codes and the thread-local message.
template <class F>
modgal_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return MODGAL_OK;
  } catch (const modgal::Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MODGAL_E_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MODGAL_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(MODGAL_E_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

modgal_data* wrap(modgal::ModularData m) { return new modgal_data{std::move(m)}; }

#define MODGAL_REQUIRE(p)                                                           \
  do {                                                                              \
    if (!(p)) return set_error(MODGAL_E_NULL_ARGUMENT, "null argument: " #p);        \
  } while (0)

std::string validation_text(const modgal::ValidationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    std::size_t bad = 0;
    for (const auto& i : r.issues)
      if (i.check == c) ++bad;
    os << c << ": " << (bad ? "FAIL" : "ok") << "\n";
  }
  for (const auto& c : r.skipped) os << c << ": skipped\n";
  for (const auto& i : r.issues) {
    os << "  [" << i.check << "] " << i.message << "\n";
  }
  os << (r.passed() ? "valid" : "invalid") << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* modgal_version(void) { return MODGAL_VERSION; }

const char* modgal_status_string(modgal_status status) {
  switch (status) {
    case MODGAL_OK: return "ok";
    case MODGAL_E_INVALID_ARGUMENT: return "invalid argument";
    case MODGAL_E_CONDUCTOR_MISMATCH: return "conductor mismatch";
    case MODGAL_E_DIVISION_BY_ZERO: return "division by zero";
    case MODGAL_E_NOT_A_UNIT: return "not a unit";
    case MODGAL_E_NOT_REAL: return "not real";
    case MODGAL_E_PARSE: return "parse error";
    case MODGAL_E_IO: return "i/o error";
    case MODGAL_E_INVALID_DATA: return "invalid data";
    case MODGAL_E_LIMIT_EXCEEDED: return "limit exceeded";
    case MODGAL_E_INTERNAL: return "internal error";
    case MODGAL_E_NULL_ARGUMENT: return "null argument";
    case MODGAL_E_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* modgal_last_error(void) { return g_last_error.c_str(); }

void modgal_string_free(char* s) { std::free(s); }

modgal_status modgal_data_load(const char* path, modgal_data** out) {
  MODGAL_REQUIRE(path);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(modgal::load_modular_data(path)); });
}

modgal_status modgal_data_parse(const char* text, const char* source, modgal_data** out) {
  MODGAL_REQUIRE(text);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(modgal::parse_modular_data(text, source ? source : "<input>")); });
}

modgal_status modgal_data_fixture(const char* name, modgal_data** out) {
  MODGAL_REQUIRE(name);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(modgal::fixture(name)); });
}

modgal_status modgal_data_product(const modgal_data* a, const modgal_data* b, modgal_data** out) {
  MODGAL_REQUIRE(a);
  MODGAL_REQUIRE(b);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(modgal::deligne_product(a->m, b->m)); });
}

modgal_status modgal_data_pointed(const char* group, const char* form, modgal_data** out) {
  MODGAL_REQUIRE(group);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto a = modgal::FiniteAbelianGroup::parse(group);
    auto q = form ? modgal::QuadraticFormSpec::parse(form, a.rank()) : modgal::default_form(a);
    if (auto why = modgal::form_defect(a, q); !why.empty())
      throw modgal::Error(modgal::ErrorCode::invalid_argument, why);
    *out = wrap(modgal::build_pointed(a, q));
  });
}

void modgal_data_free(modgal_data* data) { delete data; }

modgal_status modgal_data_rank(const modgal_data* data, size_t* out) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(out);
  *out = data->m.rank();
  return MODGAL_OK;
}

modgal_status modgal_data_conductor(const modgal_data* data, unsigned* out) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(out);
  *out = data->m.conductor();
  return MODGAL_OK;
}

modgal_status modgal_data_serialize(const modgal_data* data, char** out) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = dup_string(modgal::serialize_modular_data(data->m)); });
}

modgal_status modgal_data_save(const modgal_data* data, const char* path) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(path);
  return guarded([&] { modgal::save_modular_data(data->m, path); });
}

modgal_status modgal_fixture_list(char** out) {
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::string s;
    for (const auto& f : modgal::fixture_catalog()) s += f.name + "\t" + f.provenance + "\n";
    *out = dup_string(s);
  });
}

modgal_status modgal_validate(const modgal_data* data, int* passed, char** text) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(passed);
  return guarded([&] {
    auto r = modgal::validate(data->m);
    *passed = r.passed() ? 1 : 0;
    if (text) *text = dup_string(validation_text(r));
  });
}

modgal_status modgal_orbit_count(const modgal_data* data, size_t* out) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(out);
  return guarded([&] { *out = modgal::GaloisAction(data->m).orbits().size(); });
}

modgal_status modgal_report(const modgal_data* data, const char* source, size_t max_rank, int json, int* passed,
                            char** out) {
  MODGAL_REQUIRE(data);
  MODGAL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto r = modgal::analyze(data->m, source ? source : "<input>", max_rank);
    if (passed) *passed = r.passed ? 1 : 0;
    *out = dup_string(json ? modgal::render_json(r) : modgal::render_text(r));
  });
}

modgal_status modgal_cyclic_subgroup_count(const char* group, unsigned long long* out) {
  MODGAL_REQUIRE(group);
  MODGAL_REQUIRE(out);
  return guarded([&] { *out = modgal::cyclic_subgroup_count(modgal::FiniteAbelianGroup::parse(group)); });
}

modgal_status modgal_pointed_orbits(const char* group, const char* form, size_t max_order,
                                    unsigned long long* orbit_count, int* agrees, char** text) {
  MODGAL_REQUIRE(group);
  MODGAL_REQUIRE(orbit_count);
  MODGAL_REQUIRE(agrees);
  return guarded([&] {
    auto a = modgal::FiniteAbelianGroup::parse(group);
    if (a.order() > max_order)
      throw modgal::Error(modgal::ErrorCode::limit_exceeded,
                          "group order " + std::to_string(a.order()) + " exceeds the bound " +
                              std::to_string(max_order) + "; use --count-only or raise --max-order");
    auto q = form ? modgal::QuadraticFormSpec::parse(form, a.rank()) : modgal::default_form(a);
    if (auto why = modgal::form_defect(a, q); !why.empty())
      throw modgal::Error(modgal::ErrorCode::invalid_argument, why);
    auto m = modgal::build_pointed(a, q);
    modgal::GaloisAction g(m);
    auto expected = modgal::cyclic_subgroup_count(a);
    *orbit_count = g.orbits().size();
    *agrees = (*orbit_count == expected) ? 1 : 0;
    if (text) {
      std::ostringstream os;
      os << "group: " << a.to_string() << "\n"
         << "form: " << q.to_string() << "\n"
         << "conductor: " << m.conductor() << "\n"
         << "orbits: " << *orbit_count << "\n"
         << "cyclic subgroups: " << expected << "\n";
      for (const auto& orb : g.orbits()) {
        os << "  {";
        for (std::size_t i = 0; i < orb.size(); ++i) os << (i ? ", " : "") << m.label(orb[i]);
        os << "}\n";
      }
      os << (*agrees ? "agree" : "DISAGREE") << "\n";
      *text = dup_string(os.str());
    }
  });
}

modgal_status modgal_tables_check(unsigned long level, int* passed, char** text) {
  MODGAL_REQUIRE(passed);
  return guarded([&] {
    auto scope = level == 0 ? modgal::TableScope::standard() : modgal::TableScope::dividing(level);
    auto r = modgal::verify_tables(scope);
    *passed = r.failed() == 0 ? 1 : 0;
    if (text) *text = dup_string(modgal::format_tables_report(r));
  });
}

}  // extern "C"
