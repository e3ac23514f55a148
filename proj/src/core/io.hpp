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

#ifndef MODGAL_IO_HPP
#define MODGAL_IO_HPP

#include <string>

#include "modular_data.hpp"

namespace modgal {

// Text format:
//   {"conductor": N, "rank": r, "labels": [...], "t": [e_0, ...],
//    "s": [[entry, ...], ...]}
// with each entry a list of terms [num, den, exp] meaning sum num/den zeta_N^exp.
// Integers that do not fit in 64 bits are written as decimal strings.
ModularData parse_modular_data(const std::string& text, const std::string& source = "<input>");
ModularData load_modular_data(const std::string& path);
std::string serialize_modular_data(const ModularData& m);
void save_modular_data(const ModularData& m, const std::string& path);

}  // namespace modgal

#endif
