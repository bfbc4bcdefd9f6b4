/*
   Copyright 2026 The grmin Authors

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

/**
 * @file io.hpp
 * @brief JSON views of reports and function tables, plus file helpers.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "grmin/bounds.hpp"
#include "grmin/codes.hpp"
#include "grmin/constructions.hpp"

namespace grmin {

/// {verdict, method, checked, witnesses:[{v, reason}], elapsed_ms}
nlohmann::json report_to_json(const MinimalityReport& rep);

nlohmann::json bound_report_to_json(const BoundReport& rep);

nlohmann::json condition_report_to_json(const ConditionReport& rep);

/// Named-rule serialization: {family, m, ring, params}.
nlohmann::json function_to_json(const FunctionTable& f);

std::string family_name(FunctionFamily family);
FunctionFamily family_from_name(const std::string& name);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace grmin
