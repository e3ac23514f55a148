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

#ifndef MODGAL_REPORT_HPP
#define MODGAL_REPORT_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include "modular_data.hpp"
#include "subcategories.hpp"

namespace modgal {

struct AnalysisReport {
  nlohmann::ordered_json json;
  bool valid = false;
  bool passed = false;
};

// Validation, orbits, pointed/adjoint parts, subcategory lattice (rank <=
// max_rank), theorem checks and, with two orbits, the diagnosis.
AnalysisReport analyze(const ModularData& m, const std::string& source, std::size_t max_rank = kDefaultMaxRank);

std::string render_json(const AnalysisReport& r);
std::string render_text(const AnalysisReport& r);

}  // namespace modgal

#endif
