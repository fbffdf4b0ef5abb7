/**************************************************************************
 * cli.cpp
 *
 * Copyright 2026 The gfqldpc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "gfqldpc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfqldpc/code.hpp"
#include "gfqldpc/decoder.hpp"
#include "gfqldpc/errors.hpp"
#include "gfqldpc/oracle.hpp"
#include "gfqldpc/radius.hpp"
#include "gfqldpc/rng.hpp"
#include "gfqldpc/sim.hpp"

namespace gfqldpc {

namespace {

using njson = nlohmann::ordered_json;

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::uint32_t(std::stoul(token)));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " '" + token + "'");
        }
    }
    if (values.empty())
        throw std::invalid_argument(std::string("empty ") + what + " list");
    return values;
}

std::string hash_hex(std::uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string trace_jsonl(const std::vector<TraceEvent>& trace) {
    std::ostringstream out;
    for (const TraceEvent& ev : trace) {
        njson j{{"position", ev.position + 1},
                {"old", ev.old_value},
                {"new", ev.new_value},
                {"threshold", ev.threshold},
                {"syndrome_weight_after", ev.syndrome_weight_after}};
        if (ev.true_error_weight_after)
            j["true_error_weight_after"] = *ev.true_error_weight_after;
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string records_jsonl(const std::vector<SimRecord>& records) {
    std::ostringstream out;
    for (const SimRecord& r : records) {
        njson phases = njson::array();
        for (const auto& [theta, count] : r.phase_replacements)
            phases.push_back(njson{{"threshold", theta}, {"replacements", count}});
        njson j{{"weight", r.weight},
                {"trial", r.trial},
                {"success", r.success},
                {"replacements", r.replacements},
                {"passes", r.passes},
                {"final_syndrome_weight", r.final_syndrome_weight},
                {"phase_replacements", phases},
                {"pattern_hash", hash_hex(r.pattern_hash)}};
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string records_summary_csv(const std::vector<std::uint32_t>& weights, std::uint32_t trials,
                                const std::vector<SimRecord>& records) {
    std::ostringstream out;
    out << "weight,trials,successes,success_rate\n";
    for (std::size_t w = 0; w < weights.size(); ++w) {
        std::uint32_t successes = 0;
        for (std::uint32_t t = 0; t < trials; ++t)
            successes += records[w * trials + t].success;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%u,%u,%u,%.6f\n", weights[w], trials, successes,
                      double(successes) / trials);
        out << buf;
    }
    return out.str();
}

// options shared by subcommands that need a code from either a file or
// inline sampling parameters
struct CodeSource {
    std::string path;
    CodeParams params{};
    std::uint64_t code_seed = 0;

    void attach(CLI::App* cmd, bool inline_allowed) {
        cmd->add_option("--code", path, "code file to load");
        if (inline_allowed) {
            cmd->add_option("--n", params.length, "code length (with --ell/--n0/--q)");
            cmd->add_option("--ell", params.var_degree, "checks per symbol");
            cmd->add_option("--n0", params.check_degree, "symbols per check");
            cmd->add_option("--q", params.field_order, "field order");
            cmd->add_option("--modulus", params.modulus,
                            "reduction polynomial for q = 2^m (0 = default)");
            cmd->add_option("--code-seed", code_seed, "seed for inline sampling");
        }
    }

    LdpcCode resolve() const {
        const bool inline_given = params.length || params.var_degree || params.check_degree ||
                                  params.field_order;
        if (!path.empty() && inline_given)
            throw std::invalid_argument("give either --code or inline parameters, not both");
        if (!path.empty())
            return load_code(path);
        if (inline_given)
            return sample_regular_code(params, code_seed);
        throw std::invalid_argument("a code is required: --code or --n/--ell/--n0/--q");
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"single- and multi-threshold majority decoding of regular LDPC codes "
                 "over GF(q)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format;
    app.add_option("--seed", seed, "seed for any randomized step");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "output format: csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    int rc = 0;

    // ---- gen-code ------------------------------------------------------
    auto* gen = app.add_subcommand("gen-code", "draw a random regular code and write it");
    gen->fallthrough();
    CodeParams gen_params{};
    gen->add_option("--n", gen_params.length, "code length")->required();
    gen->add_option("--ell", gen_params.var_degree, "checks per symbol")->required();
    gen->add_option("--n0", gen_params.check_degree, "symbols per check")->required();
    gen->add_option("--q", gen_params.field_order, "field order")->required();
    gen->add_option("--modulus", gen_params.modulus,
                    "reduction polynomial for q = 2^m (0 = default)");
    gen->callback([&] {
        write_text(serialize_code(sample_regular_code(gen_params, seed)), out_path);
    });

    // ---- decode ---------------------------------------------------------
    auto* dec = app.add_subcommand("decode", "decode one word with a threshold schedule");
    dec->fallthrough();
    std::string dec_code, dec_word, dec_thresholds = "0", dec_reference, dec_trace;
    dec->add_option("--code", dec_code, "code file")->required();
    dec->add_option("--word", dec_word, "received word file")->required();
    dec->add_option("--thresholds", dec_thresholds, "schedule, e.g. 0,1,2 (default 0)");
    dec->add_option("--reference", dec_reference, "sent word, enables true-error tracking");
    dec->add_option("--trace", dec_trace, "write replacement events as JSON lines");
    dec->callback([&] {
        LdpcCode code = load_code(dec_code);
        Word word = load_word(dec_word, code.length(), code.params().field_order);
        ThresholdSchedule schedule = ThresholdSchedule::parse(dec_thresholds);
        std::optional<Word> reference;
        if (!dec_reference.empty())
            reference = load_word(dec_reference, code.length(), code.params().field_order);
        DecodeResult res =
            decode_multi(code, word, schedule, reference ? &*reference : nullptr);
        if (!dec_trace.empty())
            write_text(trace_jsonl(res.trace), dec_trace);
        if (!out_path.empty())
            save_word(res.word, out_path);
        njson summary{{"failure", res.failure},
                      {"final_syndrome_weight", compute_syndrome(code, res.word).weight},
                      {"replacements", res.replacements},
                      {"passes", res.passes}};
        std::cout << summary.dump() << '\n';
        rc = res.failure ? 1 : 0;
    });

    // ---- simulate -------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "decode random errors per weight and record "
                                               "outcomes");
    sim->fallthrough();
    CodeSource sim_code;
    sim_code.attach(sim, true);
    std::string sim_weights, sim_thresholds = "0";
    std::uint32_t sim_trials = 0;
    sim->add_option("--weights", sim_weights, "error weights, e.g. 1,2,3")->required();
    sim->add_option("--trials", sim_trials, "trials per weight")->required();
    sim->add_option("--thresholds", sim_thresholds, "schedule (default 0)");
    sim->callback([&] {
        LdpcCode code = sim_code.resolve();
        SimConfig cfg{parse_uint_list(sim_weights, "weight"), sim_trials,
                      ThresholdSchedule::parse(sim_thresholds), seed};
        std::vector<SimRecord> records = run_simulation(code, cfg);
        if (format == "csv")
            write_text(records_summary_csv(cfg.weights, cfg.trials, records), out_path);
        else
            write_text(records_jsonl(records), out_path);
        for (const SimRecord& r : records)
            if (!r.success)
                rc = 1;
    });

    // ---- compare --------------------------------------------------------
    auto* cmp = app.add_subcommand("compare", "run several schedules on identical errors");
    cmp->fallthrough();
    CodeSource cmp_code;
    cmp_code.attach(cmp, true);
    std::string cmp_weights;
    std::uint32_t cmp_trials = 0;
    std::vector<std::string> cmp_schedules;
    cmp->add_option("--weights", cmp_weights, "error weights, e.g. 1,2,3")->required();
    cmp->add_option("--trials", cmp_trials, "trials per weight")->required();
    cmp->add_option("--schedules", cmp_schedules, "schedules, e.g. --schedules 0 0,1,2")
        ->required()
        ->expected(2, -1);
    cmp->callback([&] {
        LdpcCode code = cmp_code.resolve();
        SimConfig base{parse_uint_list(cmp_weights, "weight"), cmp_trials,
                       ThresholdSchedule{std::vector<std::uint32_t>{0}}, seed};
        std::vector<ThresholdSchedule> schedules;
        for (const std::string& s : cmp_schedules)
            schedules.push_back(ThresholdSchedule::parse(s));
        ScheduleComparison result = compare_schedules(code, base, schedules);

        std::ostringstream csv;
        csv << "# schedules:";
        for (const ThresholdSchedule& s : result.schedules)
            csv << " [" << s.str() << "]";
        csv << "\nweight,trials";
        for (std::size_t s = 0; s < result.schedules.size(); ++s)
            csv << ",successes_" << s + 1 << ",rate_" << s + 1;
        csv << '\n';
        for (std::size_t w = 0; w < result.weights.size(); ++w) {
            csv << result.weights[w] << ',' << result.trials;
            for (std::size_t s = 0; s < result.schedules.size(); ++s) {
                char buf[48];
                std::snprintf(buf, sizeof buf, ",%u,%.6f", result.successes[s][w],
                              double(result.successes[s][w]) / result.trials);
                csv << buf;
            }
            csv << '\n';
        }
        write_text(csv.str(), out_path);
    });

    // ---- radius ---------------------------------------------------------
    auto* rad = app.add_subcommand("radius", "decoding-radius calculus: tables and stage "
                                             "sequences");
    rad->fallthrough();
    std::string rad_table, rad_thresholds;
    std::uint32_t rad_ell = 0;
    double rad_wstar = 1.0;
    rad->add_option("--table", rad_table,
                    "builtin:q16, builtin:q64, or a CSV of R,ell,omega_star rows");
    rad->add_option("--ell", rad_ell, "variable degree for a stage sequence");
    rad->add_option("--thresholds", rad_thresholds, "schedule for the stage sequence");
    rad->add_option("--wstar", rad_wstar, "certified starting weight (default 1)");
    rad->callback([&] {
        if (!rad_table.empty()) {
            std::vector<RadiusRow> rows;
            if (rad_table == "builtin:q16")
                rows = builtin_radius_rows_q16();
            else if (rad_table == "builtin:q64")
                rows = builtin_radius_rows_q64();
            else
                rows = load_radius_rows(rad_table);
            write_text(radius_table_csv(radius_table(rows)), out_path);
            return;
        }
        if (rad_ell == 0 || rad_thresholds.empty())
            throw std::invalid_argument("need --table, or --ell with --thresholds");
        ThresholdSchedule schedule = ThresholdSchedule::parse(rad_thresholds);
        std::vector<double> w = w_sequence(rad_wstar, schedule, rad_ell);
        if (format == "csv") {
            std::ostringstream csv;
            csv << "stage,threshold,w\n0,," << w[0] << '\n';
            for (std::size_t i = 1; i < w.size(); ++i)
                csv << i << ',' << schedule.thetas()[i - 1] << ',' << w[i] << '\n';
            write_text(csv.str(), out_path);
        } else {
            njson j{{"ell", rad_ell},
                    {"thresholds", schedule.thetas()},
                    {"w_star", rad_wstar},
                    {"w_sequence", w},
                    {"guaranteed_weight", w.back()}};
            write_text(j.dump() + "\n", out_path);
        }
    });

    // ---- verify ---------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "brute-force checks of the decoding guarantees");
    ver->fallthrough();
    ver->require_subcommand(1);

    auto* vl = ver->add_subcommand("lemma2", "replacement guarantee on random error patterns");
    vl->fallthrough();
    std::string vl_code;
    std::uint32_t vl_theta = 0, vl_samples = 0, vl_max_weight = 5;
    vl->add_option("--code", vl_code, "code file")->required();
    vl->add_option("--theta", vl_theta, "threshold the guarantee is tested at")->required();
    vl->add_option("--samples", vl_samples, "number of random error patterns")->required();
    vl->add_option("--max-weight", vl_max_weight, "weights drawn uniformly from 1..this");
    vl->callback([&] {
        LdpcCode code = load_code(vl_code);
        std::uint64_t pass = 0, vacuous = 0, fail = 0;
        for (std::uint32_t k = 0; k < vl_samples; ++k) {
            SplitMix64 head(derive_stream(seed, 0, k));
            std::uint32_t weight = 1 + std::uint32_t(head.below(vl_max_weight));
            Word error =
                sample_error_word(code.length(), code.field(), weight, seed, weight, k);
            switch (verify_lemma2(code, vl_theta, error)) {
            case Verdict::pass: ++pass; break;
            case Verdict::vacuous: ++vacuous; break;
            case Verdict::fail: ++fail; break;
            }
        }
        njson j{{"samples", vl_samples}, {"theta", vl_theta},  {"max_weight", vl_max_weight},
                {"pass", pass},          {"vacuous", vacuous}, {"fail", fail}};
        write_text(j.dump() + "\n", out_path);
        rc = fail > 0 ? 3 : 0;
    });

    auto* vr = ver->add_subcommand("radius", "exhaustive certification plus in-radius "
                                             "correction check");
    vr->fallthrough();
    std::string vr_code, vr_thresholds = "0";
    std::uint32_t vr_wmax = 0;
    vr->add_option("--code", vr_code, "code file")->required();
    vr->add_option("--wmax", vr_wmax, "largest error weight to enumerate")->required();
    vr->add_option("--thresholds", vr_thresholds, "schedule for the correction check");
    vr->callback([&] {
        LdpcCode code = load_code(vr_code);
        ThresholdSchedule schedule = ThresholdSchedule::parse(vr_thresholds);
        const std::uint64_t budget = enumeration_budget();
        RadiusCertificate cert = certify_code_radius(code, vr_wmax, budget);
        njson j{{"max_weight", cert.max_weight},
                {"min_syndrome_weight", cert.min_syndrome_weight},
                {"certified_weight", cert.certified_weight},
                {"patterns_enumerated", cert.patterns_enumerated}};
        if (cert.certified_weight > 0) {
            CorrectionCheck chk =
                verify_guaranteed_correction(code, cert.certified_weight, schedule, budget);
            j["guaranteed_weight"] = chk.guaranteed_weight;
            j["enumerated_weight"] = chk.enumerated_weight;
            j["patterns_tested"] = chk.patterns_tested;
            j["pass"] = chk.patterns_tested - chk.failures;
            j["vacuous"] = chk.patterns_tested == 0 ? 1 : 0;
            j["fail"] = chk.failures;
            rc = chk.failures > 0 ? 3 : 0;
        } else {
            j["guaranteed_weight"] = 0.0;
            j["enumerated_weight"] = 0;
            j["patterns_tested"] = 0;
            j["pass"] = 0;
            j["vacuous"] = 1;
            j["fail"] = 0;
        }
        write_text(j.dump() + "\n", out_path);
    });

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("gfqldpc");
        for (const std::string& a : args)
            argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? std::size_t(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace gfqldpc
