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

#include "report.hpp"

#include <sstream>

#include "galois_action.hpp"

namespace modgal {

namespace {

using nlohmann::ordered_json;

ordered_json labels_of(const ModularData& m, const IndexSet& s) {
  ordered_json out = ordered_json::array();
  for (std::size_t x : s) out.push_back(m.label(x));
  return out;
}

ordered_json check_json(const CheckReport& c) {
  return ordered_json{{"passed", c.passed}, {"cases", c.cases}, {"failures", c.failures}};
}

std::string orbit_shape(const GaloisAction& g) {
  std::string s;
  for (const auto& o : g.orbits()) s += (s.empty() ? "" : "+") + std::to_string(o.size());
  return s;
}

}  // namespace

AnalysisReport analyze(const ModularData& m, const std::string& source, std::size_t max_rank) {
  AnalysisReport rep;
  ordered_json& j = rep.json;
  j["source"] = source;
  j["conductor"] = m.conductor();
  j["rank"] = m.rank();
  j["labels"] = m.labels();

  const ValidationReport v = validate(m);
  ordered_json issues = ordered_json::array();
  for (const auto& i : v.issues) issues.push_back({{"check", i.check}, {"message", i.message}});
  j["validation"] = {{"passed", v.passed()}, {"checks", v.checks}, {"skipped", v.skipped}, {"issues", issues}};
  rep.valid = v.passed();
  if (!rep.valid) {
    j["passed"] = false;
    return rep;
  }

  const CategoryView view(m);
  const GaloisAction& g = view.galois();
  ordered_json partition = ordered_json::array();
  for (const auto& o : g.orbits()) partition.push_back(labels_of(m, o));
  j["orbits"] = {{"count", g.orbits().size()},
                 {"shape", orbit_shape(g)},
                 {"transitive", g.is_transitive()},
                 {"partition", partition}};

  const FusionSubcategory pt = pointed_part(view), ad = adjoint_part(view);
  j["pointed_part"] = labels_of(m, pt.members);
  j["adjoint_part"] = labels_of(m, ad.members);

  bool ok = true;
  ordered_json checks;

  std::vector<FusionSubcategory> subs;
  const bool enumerate = m.rank() <= max_rank;
  if (enumerate) {
    subs = all_subcategories(view, max_rank);
    ordered_json lattice = ordered_json::array();
    for (const auto& d : subs)
      lattice.push_back({{"members", labels_of(m, d.members)},
                         {"integral", is_integral(view, d)},
                         {"symmetric", is_symmetric(view, d)},
                         {"galois_closed", is_galois_closed(view, d)},
                         {"centralizer", labels_of(m, centralizer(view, d).members)}});
    j["subcategories"] = {{"enumerated", true}, {"count", subs.size()}, {"lattice", lattice}};

    const CheckReport closure = check_theorem_galois_closure(view, subs);
    const CheckReport lat = check_subcategory_lattice(view, subs);
    CheckReport degree("orbit_intersection_degree");
    for (const auto& d : subs) {
      const CheckReport c = counting2_degree_check(view, d);
      degree.cases += c.cases;
      for (const auto& f : c.failures) degree.fail(f);
    }
    checks["galois_closure_iff_integral_centralizer"] = check_json(closure);
    checks["subcategory_lattice"] = check_json(lat);
    checks["orbit_intersection_degree"] = check_json(degree);
    ok = ok && closure.passed && lat.passed && degree.passed;
  } else {
    j["subcategories"] = {{"enumerated", false},
                          {"reason", "rank " + std::to_string(m.rank()) + " exceeds bound " + std::to_string(max_rank)}};
  }

  const OrbitBoundReport bound = check_orbit_lower_bound(view);
  ordered_json primes = ordered_json::array();
  for (const auto& [p, a] : bound.prime_powers) primes.push_back({p, a});
  checks["orbit_lower_bound"] = {{"passed", bound.passed},
                                 {"pointed_rank", bound.pointed_rank},
                                 {"prime_powers", primes},
                                 {"bound", bound.bound},
                                 {"orbit_count", bound.orbit_count}};
  ok = ok && bound.passed;

  CheckReport field("orbit_field_degree");
  for (std::size_t x = 0; x < m.rank(); ++x) {
    ++field.cases;
    const unsigned deg = static_cast<unsigned>(g.units().size() / fixing_subgroup(m, x).size());
    if (deg != g.orbit_of(x).size())
      field.fail(m.label(x) + ": [L_X:Q] = " + std::to_string(deg) + " but |O_X| = " +
                 std::to_string(g.orbit_of(x).size()));
  }
  checks["orbit_field_degree"] = check_json(field);
  ok = ok && field.passed;

  const SquareTwistReport sq = square_twist_consistency(m, g);
  checks["square_twist_consistency"] = {{"passed", sq.passed}, {"failures", sq.failures}};
  const DimsRatioReport dr = dims_ratio_check(m, g);
  checks["dims_ratio"] = {{"passed", dr.passed}, {"cases", dr.checked}, {"failures", dr.failures}};
  ok = ok && sq.passed && dr.passed;
  j["checks"] = checks;

  j["pseudoinvertibles"] = labels_of(m, pseudoinvertibles(view));
  j["orbitwise_pseudoinvertible"] = orbitwise_pseudoinvertible(view);

  if (g.orbits().size() == 2 && enumerate) {
    const TwoOrbitDiagnosis d = two_orbit_diagnosis(view, subs);
    j["diagnosis"] = {{"clause", to_string(d.clause)},
                      {"summary", d.summary},
                      {"factor", labels_of(m, d.factor)},
                      {"transitive_factor", labels_of(m, d.transitive)}};
  } else if (g.is_transitive()) {
    j["diagnosis"] = {{"clause", "transitive"}, {"summary", "transitive"}};
  }
  j["passed"] = ok;
  rep.passed = ok;
  return rep;
}

std::string render_json(const AnalysisReport& r) { return r.json.dump(2) + "\n"; }

std::string render_text(const AnalysisReport& r) {
  const auto& j = r.json;
  std::ostringstream os;
  os << "source: " << j["source"].get<std::string>() << "\n";
  os << "conductor " << j["conductor"].get<unsigned>() << ", rank " << j["rank"].get<std::size_t>() << "\n";
  os << "validation: " << (r.valid ? "pass" : "FAIL") << "\n";
  for (const auto& i : j["validation"]["issues"])
    os << "  " << i["check"].get<std::string>() << ": " << i["message"].get<std::string>() << "\n";
  for (const auto& s : j["validation"]["skipped"]) os << "  skipped: " << s.get<std::string>() << "\n";
  if (!r.valid) return os.str();

  const auto& o = j["orbits"];
  os << "orbits: " << o["count"].get<std::size_t>() << " (" << o["shape"].get<std::string>() << ")";
  if (o["transitive"].get<bool>()) os << " transitive";
  os << "\n";
  for (const auto& part : o["partition"]) {
    os << "  {";
    bool first = true;
    for (const auto& l : part) {
      os << (first ? "" : ",") << l.get<std::string>();
      first = false;
    }
    os << "}\n";
  }
  os << "pointed part rank " << j["pointed_part"].size() << ", adjoint part rank " << j["adjoint_part"].size()
     << "\n";
  if (j["subcategories"]["enumerated"].get<bool>())
    os << "fusion subcategories: " << j["subcategories"]["count"].get<std::size_t>() << "\n";
  else
    os << "fusion subcategories: not enumerated (" << j["subcategories"]["reason"].get<std::string>() << ")\n";
  for (const auto& [name, c] : j["checks"].items()) {
    os << "check " << name << ": " << (c["passed"].get<bool>() ? "pass" : "FAIL");
    if (name == "orbit_lower_bound")
      os << " (|Orb| = " << c["orbit_count"].get<std::size_t>() << " >= " << c["bound"].get<std::size_t>() << ")";
    os << "\n";
    if (c.contains("failures"))
      for (const auto& f : c["failures"]) os << "  " << f.get<std::string>() << "\n";
  }
  os << "orbitwise pseudoinvertible: " << (j["orbitwise_pseudoinvertible"].get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("diagnosis"))
    os << "diagnosis: " << j["diagnosis"]["summary"].get<std::string>() << " [" << j["diagnosis"]["clause"].get<std::string>()
       << "]\n";
  os << "result: " << (r.passed ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace modgal
