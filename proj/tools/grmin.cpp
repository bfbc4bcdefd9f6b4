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

// grmin: construct and verify minimal linear codes over Galois rings.
//
// Exit codes: 0 verdict-true / successful construction, 1 verdict-false,
// 2 usage or validation errors.  Data goes to stdout, progress to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "grmin/bounds.hpp"
#include "grmin/codes.hpp"
#include "grmin/constructions.hpp"
#include "grmin/io.hpp"

using nlohmann::json;

namespace {

struct RingArgs {
    uint64_t p = 2;
    unsigned n = 2;
    unsigned ell = 1;
    std::vector<uint64_t> h;

    grmin::RingContext make() const {
        std::optional<std::vector<uint64_t>> hh;
        if (!h.empty()) hh = h;
        return grmin::RingContext(p, n, ell, hh);
    }
};

void add_ring_options(CLI::App* cmd, RingArgs& args) {
    cmd->set_help_flag("--help", "print help");  // frees --h for the polynomial
    cmd->add_option("--p", args.p, "prime p");
    cmd->add_option("--n", args.n, "nilpotency exponent n");
    cmd->add_option("--ell", args.ell, "extension degree ell");
    cmd->add_option("--h", args.h, "defining polynomial coefficients, constant first")
        ->delimiter(',');
}

grmin::SweepScope parse_scope(const std::string& s) {
    if (s == "root" || s == "root_words_only") return grmin::SweepScope::root_words_only;
    if (s == "all" || s == "all_nonzero") return grmin::SweepScope::all_nonzero;
    throw CLI::ValidationError("--scope", "expected root|all");
}

int report_exit(const grmin::MinimalityReport& rep) { return rep.verdict ? 0 : 1; }

void print_report_text(const grmin::MinimalityReport& rep) {
    std::cout << "verdict: " << (rep.verdict ? "minimal" : "not minimal") << "\n"
              << "method: "
              << (rep.method == grmin::CheckMethod::criterion ? "criterion" : "bruteforce")
              << "\nchecked: " << rep.checked << "\nelapsed_ms: " << rep.elapsed.count()
              << "\n";
    for (const auto& w : rep.witnesses)
        std::cout << "witness: " << w.message.to_string() << "  (" << w.reason << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal linear codes over Galois rings GR(p^n, ell)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool as_json = false;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "emit JSON reports on stdout");
    app.add_option("--threads", threads, "worker threads for criterion sweeps")
        ->check(CLI::Range(1u, 64u));

    // ring ------------------------------------------------------------------
    auto* ring_cmd = app.add_subcommand("ring", "inspect a ring: censuses and Teichmuller set");
    RingArgs ring_args;
    add_ring_options(ring_cmd, ring_args);

    // construct --------------------------------------------------------------
    auto* construct_cmd = app.add_subcommand("construct", "build a named generator multiset");
    RingArgs construct_ring;
    add_ring_options(construct_cmd, construct_ring);
    std::string construct_family = "lambda0";
    size_t construct_m = 2;
    std::string construct_out;
    construct_cmd->add_option("--family", construct_family, "construction family (lambda0)");
    construct_cmd->add_option("--m", construct_m, "dimension m");
    construct_cmd->add_option("--out", construct_out, "write GRCODE file here");

    // check -------------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "minimality of a GRCODE file");
    std::string check_in, check_method = "criterion", check_scope = "all";
    check_cmd->add_option("--in", check_in, "GRCODE file")->required();
    check_cmd->add_option("--method", check_method, "criterion|bruteforce|both");
    check_cmd->add_option("--scope", check_scope, "root|all (criterion sweeps)");

    // cf ----------------------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("cf", "build a function-based code and optionally check it");
    RingArgs cf_ring;
    add_ring_options(cf_cmd, cf_ring);
    std::string cf_family = "thm46";
    size_t cf_m = 4;
    std::string cf_poly, cf_out, cf_check = "none";
    bool cf_restrict = false;
    cf_cmd->add_option("--family", cf_family, "thm43|thm46|poly");
    cf_cmd->add_option("--m", cf_m, "arity m (code dimension is m+1)");
    cf_cmd->add_option("--poly", cf_poly, "monomial sum, e.g. 'x1*x2*x3 + x4*x5*x6'");
    cf_cmd->add_flag("--restrict-rootwords", cf_restrict, "restrict the domain to root words");
    cf_cmd->add_option("--check", cf_check, "none|criterion|bruteforce|both");
    cf_cmd->add_option("--out", cf_out, "write GRCODE file here");

    // bounds --------------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "length bound report");
    RingArgs bounds_ring;
    add_ring_options(bounds_cmd, bounds_ring);
    size_t bounds_m = 2;
    bounds_cmd->add_option("--m", bounds_m, "dimension m");

    // search-k2 -------------------------------------------------------------------
    auto* k2_cmd = app.add_subcommand("search-k2", "exhaustive minimal-length search, m = 2");
    RingArgs k2_ring;
    add_ring_options(k2_cmd, k2_ring);
    size_t k2_max = 6;
    std::string k2_out;
    k2_cmd->add_option("--k-max", k2_max, "largest length to try");
    k2_cmd->add_option("--out", k2_out, "write the witness GRCODE here");

    // verify-file --------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify-file", "parse and round-trip a GRCODE file");
    std::string verify_in;
    verify_cmd->add_option("--in", verify_in, "GRCODE file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        grmin::Budget budget = grmin::Budget::from_env();

        if (ring_cmd->parsed()) {
            grmin::RingContext ctx = ring_args.make();
            uint64_t units = ctx.enumerate(grmin::EnumKind::units).size();
            uint64_t zd = ctx.enumerate(grmin::EnumKind::zero_divisors).size();
            json vals = json::object();
            for (unsigned r = 1; r + 1 <= ctx.n(); ++r)
                vals[std::to_string(r)] =
                    ctx.enumerate(grmin::EnumKind::valuation_exactly, r).size();
            json teich = json::array();
            for (const auto& t : ctx.enumerate(grmin::EnumKind::teichmuller))
                teich.push_back(t.to_string());
            json j{{"ring", ctx.descriptor()},
                   {"size", ctx.size()},
                   {"q", ctx.q()},
                   {"units", units},
                   {"nonzero_zero_divisors", zd},
                   {"valuation_classes", vals},
                   {"teichmuller", teich}};
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << ctx.descriptor() << "\nsize: " << ctx.size() << "\nunits: " << units
                          << "\nnonzero zero divisors: " << zd << "\nteichmuller:";
                for (const auto& t : teich) std::cout << ' ' << t.get<std::string>();
                std::cout << "\n";
            }
            return 0;
        }

        if (construct_cmd->parsed()) {
            if (construct_family != "lambda0")
                throw CLI::ValidationError("--family", "unknown construction family");
            grmin::RingContext ctx = construct_ring.make();
            grmin::GeneratorMultiset gens = grmin::lambda0(ctx, construct_m);
            std::string text = grmin::grcode_write(gens);
            if (!construct_out.empty()) grmin::write_file(construct_out, text);
            json j{{"family", construct_family},
                   {"ring", ctx.descriptor()},
                   {"m", gens.m()},
                   {"k", gens.k()}};
            if (as_json) std::cout << j.dump(2) << "\n";
            else if (construct_out.empty()) std::cout << text;
            else std::cout << "wrote " << construct_out << " (k=" << gens.k() << ")\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            grmin::GrcodeFile file = grmin::grcode_read(grmin::read_file(check_in));
            grmin::LinearCode code = grmin::build_code(file.code);
            grmin::SweepScope scope = parse_scope(check_scope);
            if (check_method == "criterion" || check_method == "bruteforce") {
                grmin::MinimalityReport rep =
                    check_method == "criterion"
                        ? grmin::is_minimal_code_criterion(code, scope, threads)
                        : grmin::is_minimal_code_bruteforce(code, budget);
                if (as_json) std::cout << grmin::report_to_json(rep).dump(2) << "\n";
                else print_report_text(rep);
                return report_exit(rep);
            }
            if (check_method != "both")
                throw CLI::ValidationError("--method", "expected criterion|bruteforce|both");
            grmin::MinimalityReport rc = grmin::is_minimal_code_criterion(code, scope, threads);
            grmin::MinimalityReport rb = grmin::is_minimal_code_bruteforce(code, budget);
            bool agree = rc.verdict == rb.verdict;
            if (as_json) {
                json j{{"verdict", rc.verdict && rb.verdict},
                       {"agree", agree},
                       {"criterion", grmin::report_to_json(rc)},
                       {"bruteforce", grmin::report_to_json(rb)}};
                std::cout << j.dump(2) << "\n";
            } else {
                print_report_text(rc);
                print_report_text(rb);
                std::cout << "methods agree: " << (agree ? "yes" : "no") << "\n";
            }
            if (!agree) return 2;
            return rc.verdict ? 0 : 1;
        }

        if (cf_cmd->parsed()) {
            grmin::RingContext ctx = cf_ring.make();
            grmin::FunctionFamily family = grmin::family_from_name(cf_family);
            std::optional<grmin::MonomialPoly> poly;
            if (family == grmin::FunctionFamily::poly)
                poly = grmin::MonomialPoly::parse(ctx, cf_m, cf_poly);
            grmin::DomainMode domain = cf_restrict ? grmin::DomainMode::root_words_only
                                                   : grmin::DomainMode::all_nonzero;
            grmin::FunctionTable f =
                grmin::FunctionTable::canonical(family, ctx, cf_m, domain, std::move(poly));
            grmin::ConditionSet cset = family == grmin::FunctionFamily::thm43
                                           ? grmin::ConditionSet::thm43
                                           : family == grmin::FunctionFamily::thm46
                                                 ? grmin::ConditionSet::thm46
                                                 : grmin::ConditionSet::poly;
            grmin::ConditionReport conditions = grmin::check_function_conditions(f, cset);
            grmin::GeneratorMultiset gens = grmin::build_function_code(f);
            grmin::LinearCode code = grmin::build_code(gens);
            if (!cf_out.empty()) grmin::write_file(cf_out, grmin::grcode_write(gens));

            json j{{"function", grmin::function_to_json(f)},
                   {"conditions", grmin::condition_report_to_json(conditions)},
                   {"k", gens.k()},
                   {"dimension", gens.m()}};
            int exit_code = conditions.all_pass() ? 0 : 1;
            if (cf_check != "none") {
                if (cf_check == "criterion" || cf_check == "both") {
                    grmin::MinimalityReport rep = grmin::is_minimal_code_criterion(
                        code, grmin::SweepScope::all_nonzero, threads);
                    j["criterion"] = grmin::report_to_json(rep);
                    if (!rep.verdict) exit_code = 1;
                }
                if (cf_check == "bruteforce" || cf_check == "both") {
                    grmin::MinimalityReport rep = grmin::is_minimal_code_bruteforce(code, budget);
                    j["bruteforce"] = grmin::report_to_json(rep);
                    if (!rep.verdict) exit_code = 1;
                }
            }
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "[" << gens.k() << "," << gens.m() << "] code over "
                          << ctx.descriptor() << "\nconditions: "
                          << (conditions.all_pass() ? "pass" : "FAIL") << "\n";
                if (j.contains("criterion"))
                    std::cout << "criterion verdict: "
                              << (j["criterion"]["verdict"].get<bool>() ? "minimal"
                                                                        : "not minimal")
                              << "\n";
                if (j.contains("bruteforce"))
                    std::cout << "bruteforce verdict: "
                              << (j["bruteforce"]["verdict"].get<bool>() ? "minimal"
                                                                         : "not minimal")
                              << "\n";
            }
            return exit_code;
        }

        if (bounds_cmd->parsed()) {
            grmin::RingContext ctx = bounds_ring.make();
            grmin::BoundReport rep = grmin::make_bound_report(ctx, bounds_m);
            json j = grmin::bound_report_to_json(rep);
            if (as_json) std::cout << j.dump(2) << "\n";
            else
                std::cout << "lower bound: " << rep.lower.lower.to_string()
                          << (rep.lower.strict ? " (strict)" : " (non-strict)")
                          << "\nfirst admissible length: "
                          << rep.lower.lower.first_admissible(rep.lower.strict)
                          << "\nlambda0 length: " << rep.lambda0_length << "\n";
            return 0;
        }

        if (k2_cmd->parsed()) {
            grmin::RingContext ctx = k2_ring.make();
            grmin::K2SearchResult res = grmin::exhaustive_k2_search(ctx, k2_max, budget);
            json j{{"ring", ctx.descriptor()},
                   {"k_max", k2_max},
                   {"found", res.found},
                   {"examined", res.examined},
                   {"formula", grmin::k2_exact(ctx)}};
            if (res.found) {
                j["k"] = res.k;
                std::string text = grmin::grcode_write(*res.witness);
                if (!k2_out.empty()) grmin::write_file(k2_out, text);
                else j["witness"] = text;
            }
            if (as_json) std::cout << j.dump(2) << "\n";
            else if (res.found)
                std::cout << "smallest minimal length <= " << k2_max << ": " << res.k << "\n";
            else
                std::cout << "no minimal [k,2] code for k <= " << k2_max << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::string text = grmin::read_file(verify_in);
            grmin::GrcodeFile file = grmin::grcode_read(text);
            std::string again = grmin::grcode_write(file.code);
            if (again != text) {
                std::cerr << "round-trip serialization differs from input\n";
                return 2;
            }
            grmin::LinearCode code = grmin::build_code(file.code);
            json j{{"ring", file.ring->descriptor()},
                   {"m", code.m()},
                   {"k", code.k()},
                   {"roundtrip", "identical"}};
            if (as_json) std::cout << j.dump(2) << "\n";
            else
                std::cout << "valid GRCODE: [" << code.k() << "," << code.m() << "] over "
                          << file.ring->descriptor() << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
