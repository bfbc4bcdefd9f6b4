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

#include "grmin/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grmin {

nlohmann::json report_to_json(const MinimalityReport& rep) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back({{"v", w.message.to_string()}, {"reason", w.reason}});
    return nlohmann::json{
        {"verdict", rep.verdict},
        {"method", rep.method == CheckMethod::criterion ? "criterion" : "bruteforce"},
        {"checked", rep.checked},
        {"witnesses", witnesses},
        {"elapsed_ms", rep.elapsed.count()},
    };
}

nlohmann::json bound_report_to_json(const BoundReport& rep) {
    nlohmann::json j{
        {"m", rep.m},
        {"p", rep.p},
        {"n", rep.n},
        {"ell", rep.ell},
        {"lower", rep.lower.lower.to_string()},
        {"strict", rep.lower.strict},
        {"first_admissible", rep.lower.lower.first_admissible(rep.lower.strict)},
        {"lambda0_length", rep.lambda0_length},
    };
    if (rep.k2) j["k2_exact"] = *rep.k2;
    return j;
}

nlohmann::json condition_report_to_json(const ConditionReport& rep) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json je{{"name", e.name}, {"pass", e.pass}};
        if (e.counterexample) je["counterexample"] = e.counterexample->to_string();
        if (!e.detail.empty()) je["detail"] = e.detail;
        entries.push_back(std::move(je));
    }
    return nlohmann::json{
        {"all_pass", rep.all_pass()},
        {"conditions", entries},
        {"notes", rep.notes},
    };
}

std::string family_name(FunctionFamily family) {
    switch (family) {
        case FunctionFamily::thm43: return "thm43";
        case FunctionFamily::thm46: return "thm46";
        case FunctionFamily::poly: return "poly";
        case FunctionFamily::table: return "table";
    }
    throw std::logic_error("unknown family");
}

FunctionFamily family_from_name(const std::string& name) {
    if (name == "thm43") return FunctionFamily::thm43;
    if (name == "thm46") return FunctionFamily::thm46;
    if (name == "poly") return FunctionFamily::poly;
    if (name == "table") return FunctionFamily::table;
    throw std::invalid_argument("unknown function family: " + name);
}

nlohmann::json function_to_json(const FunctionTable& f) {
    nlohmann::json params = nlohmann::json::object();
    params["domain"] =
        f.domain() == DomainMode::all_nonzero ? "all_nonzero" : "root_words_only";
    if (f.poly()) params["poly"] = f.poly()->to_string();
    if (f.family() == FunctionFamily::table) {
        // explicit tables ship their value list, one entry per domain point in
        // lexicographic order, each in the GRCODE coefficient notation
        nlohmann::json values = nlohmann::json::array();
        const RingContext& R = f.context();
        uint64_t total = 1;
        for (size_t i = 0; i < f.m(); ++i) total *= R.size();
        for (uint64_t xi = 1; xi < total; ++xi) {
            RingVector x = RingVector::from_lex_index(R, f.m(), xi);
            if (!f.in_domain(x)) continue;
            values.push_back(R.element(f.value_idx(x.indices())).to_string());
        }
        params["values"] = std::move(values);
    }
    return nlohmann::json{
        {"family", family_name(f.family())},
        {"m", f.m()},
        {"ring", f.context().descriptor()},
        {"params", params},
    };
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << contents;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace grmin
