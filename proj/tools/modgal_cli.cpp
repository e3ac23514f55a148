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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "modgal/modgal.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

int report_error(modgal_status st) {
  const char* msg = modgal_last_error();
  std::cerr << "modgal: " << modgal_status_string(st);
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  return kInputError;
}

// Owns a C string returned by the library.
struct CString {
  char* p = nullptr;
  ~CString() { modgal_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Data {
  modgal_data* p = nullptr;
  ~Data() { modgal_data_free(p); }
};

int write_out(const modgal_data* d, const std::string& out) {
  if (out.empty() || out == "-") {
    CString s;
    if (auto st = modgal_data_serialize(d, &s.p)) return report_error(st);
    std::cout << s.str();
    return kPass;
  }
  if (auto st = modgal_data_save(d, out.c_str())) return report_error(st);
  return kPass;
}

int cmd_validate(const std::string& path) {
  Data d;
  if (auto st = modgal_data_load(path.c_str(), &d.p)) return report_error(st);
  int passed = 0;
  CString text;
  if (auto st = modgal_validate(d.p, &passed, &text.p)) return report_error(st);
  std::cout << text.str();
  return passed ? kPass : kCheckFailure;
}

int cmd_report(const std::string& path, std::size_t max_rank, bool json) {
  Data d;
  if (auto st = modgal_data_load(path.c_str(), &d.p)) return report_error(st);
  int passed = 0;
  CString out;
  if (auto st = modgal_report(d.p, path.c_str(), max_rank, json ? 1 : 0, &passed, &out.p)) return report_error(st);
  std::cout << out.str();
  return passed ? kPass : kCheckFailure;
}

int cmd_pointed(const std::string& group, const std::string& form, bool count_only, std::size_t max_order) {
  if (count_only) {
    unsigned long long n = 0;
    if (auto st = modgal_cyclic_subgroup_count(group.c_str(), &n)) return report_error(st);
    std::cout << n << "\n";
    return kPass;
  }
  unsigned long long n = 0;
  int agrees = 0;
  CString text;
  if (auto st = modgal_pointed_orbits(group.c_str(), form.empty() ? nullptr : form.c_str(), max_order, &n, &agrees,
                                      &text.p))
    return report_error(st);
  std::cout << text.str();
  return agrees ? kPass : kCheckFailure;
}

int cmd_tables(unsigned long level) {
  int passed = 0;
  CString text;
  if (auto st = modgal_tables_check(level, &passed, &text.p)) return report_error(st);
  std::cout << text.str();
  return passed ? kPass : kCheckFailure;
}

int cmd_product(const std::string& a, const std::string& b, const std::string& out) {
  Data da, db, dp;
  if (auto st = modgal_data_load(a.c_str(), &da.p)) return report_error(st);
  if (auto st = modgal_data_load(b.c_str(), &db.p)) return report_error(st);
  if (auto st = modgal_data_product(da.p, db.p, &dp.p)) return report_error(st);
  return write_out(dp.p, out);
}

int cmd_fixture(const std::string& name, bool list, const std::string& out) {
  if (list || name.empty()) {
    CString s;
    if (auto st = modgal_fixture_list(&s.p)) return report_error(st);
    std::cout << s.str();
    return kPass;
  }
  Data d;
  if (auto st = modgal_data_fixture(name.c_str(), &d.p)) return report_error(st);
  return write_out(d.p, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois actions on modular data"};
  app.set_version_flag("--version", std::string(modgal_version()));
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Validate a modular data file");
  validate->add_option("file", path, "Modular data file")->required();

  std::size_t max_rank = 64;
  bool json = false;
  auto* report = app.add_subcommand("report", "Orbit, subcategory and diagnosis report");
  report->add_option("file", path, "Modular data file")->required();
  report->add_option("--max-rank", max_rank, "Rank bound for subcategory enumeration")->capture_default_str();
  report->add_flag("--json", json, "Machine-readable output");

  std::string group, form;
  bool count_only = false;
  std::size_t max_order = 128;
  auto* pointed = app.add_subcommand("pointed", "Orbits of pointed modular data C(A,q)");
  pointed->add_option("group", group, "Invariant factors, e.g. 2,30,30")->required();
  pointed->add_option("--form", form, "Gram exponents, rows separated by ';'");
  pointed->add_flag("--count-only", count_only, "Count cyclic subgroups without building data");
  pointed->add_option("--max-order", max_order, "Largest group order built in full")->capture_default_str();

  unsigned long level = 0;
  auto* tables = app.add_subcommand("tables", "Verify encoded t-spectrum rows");
  tables->add_option("--check", level, "Check rows whose level divides N (0: standard scope)")->capture_default_str();

  std::string a, b, out;
  auto* product = app.add_subcommand("product", "Deligne product of two files");
  product->add_option("a", a, "First factor")->required();
  product->add_option("b", b, "Second factor")->required();
  product->add_option("-o,--output", out, "Output file (default stdout)");

  std::string name;
  bool list = false;
  auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture");
  fixture->add_option("name", name, "Fixture name");
  fixture->add_flag("--list", list, "List fixture names");
  fixture->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  if (*validate) return cmd_validate(path);
  if (*report) return cmd_report(path, max_rank, json);
  if (*pointed) return cmd_pointed(group, form, count_only, max_order);
  if (*tables) return cmd_tables(level);
  if (*product) return cmd_product(a, b, out);
  if (*fixture) return cmd_fixture(name, list, out);
  return kInputError;
}
