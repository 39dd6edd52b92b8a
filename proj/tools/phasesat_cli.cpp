// Copyright 2026 The phasesat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reference_checks.hpp"
#include "phasesat/error.hpp"
#include "phasesat/fisher.hpp"
#include "phasesat/io.hpp"
#include "phasesat/optimal.hpp"
#include "phasesat/saturation.hpp"
#include "phasesat/scan.hpp"

namespace fs = std::filesystem;
using namespace phasesat;

namespace {

enum Exit : int {
    kOk = 0,
    kVerificationFailed = 1,
    kConfigError = 2,
    kNonConvergent = 3,
    kConstructionFailed = 4,
    kWeakCommutativity = 5,
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LimitNonConvergent:
        case ErrorKind::LimitUnavailable:
        case ErrorKind::StepTooLarge: return kNonConvergent;
        case ErrorKind::WeakCommutativityViolated: return kWeakCommutativity;
        case ErrorKind::InternalInconsistency: return kVerificationFailed;
        default: return kConfigError;
    }
}

// Accepts plain numbers and multiples of pi: "pi", "-pi/2", "3*pi/4", "0.5pi".
double parse_angle(std::string s) {
    std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw Error(ErrorKind::ParseError, "bad number '" + s + "'");
        return v;
    }
    std::string head = s.substr(0, pos);
    std::string tail = s.substr(pos + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    double factor = 1.0;
    if (head == "-") factor = -1.0;
    else if (head == "+" || head.empty()) factor = 1.0;
    else factor = std::stod(head);
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') throw Error(ErrorKind::ParseError, "bad angle '" + s + "'");
        divisor = std::stod(tail.substr(1));
    }
    return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(parse_angle(token));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::ParseError, "bad number '" + token + "'");
        }
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty list");
    return out;
}

// Writes through a temporary file so a failed run never leaves partial output.
void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const fs::path tmp = path + ".partial";
    {
        std::ofstream out(tmp);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
        out << text;
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw Error(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
        }
    }
    fs::rename(tmp, path);
}

struct Common {
    std::string model = "mzi3";
    std::string theta;
    std::string out;
    std::string format;  // empty: csv for scan, json otherwise
    Tolerances tol;
    LimitPolicy policy;
    std::string steps;

    ModelPtr load_model() const { return load_model_spec(model).build(); }

    std::vector<double> load_theta(const ParametricState& m) const {
        if (theta.empty()) throw Error(ErrorKind::InvalidArgument, "--theta is required");
        std::vector<double> t = parse_list(theta);
        if (t.size() != m.parameter_count()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "model has " + std::to_string(m.parameter_count()) + " phases, --theta gave " +
                            std::to_string(t.size()));
        }
        return t;
    }

    void finish() {
        if (!steps.empty()) {
            const std::vector<double> s = parse_list(steps);
            if (s.size() != 3) throw Error(ErrorKind::InvalidArgument, "--limit-steps takes three values");
            for (std::size_t i = 0; i < 3; ++i) policy.steps[i] = s[i];
        }
    }
};

void add_common(CLI::App& app, Common& c) {
    app.add_option("--model", c.model, "Builtin model (mzi3, mzi4) or model JSON file")->capture_default_str();
    app.add_option("--theta", c.theta, "Comma-separated phases; 'pi' multiples allowed")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--out", c.out, "Output path (default stdout)");
    app.add_option("--format", c.format, "csv (scan only) or json")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol-hermitian", c.tol.hermitian)->capture_default_str();
    app.add_option("--tol-unitary", c.tol.unitary)->capture_default_str();
    app.add_option("--tol-normalization", c.tol.normalization)->capture_default_str();
    app.add_option("--tol-completeness", c.tol.completeness)->capture_default_str();
    app.add_option("--tol-gram-drop", c.tol.gram_drop)->capture_default_str();
    app.add_option("--tol-eps-orth", c.tol.eps_orth)->capture_default_str();
    app.add_option("--tol-first-order", c.tol.first_order_zero)->capture_default_str();
    app.add_option("--tol-saturation", c.tol.saturation)->capture_default_str();
    app.add_option("--tol-gap", c.tol.gap)->capture_default_str();
    app.add_option("--tol-weak-comm", c.tol.weak_commutativity)->capture_default_str();
    app.add_option("--p-floor", c.policy.p_floor)->capture_default_str();
    app.add_option("--limit-convergence", c.policy.convergence)->capture_default_str();
    app.add_option("--limit-steps", c.steps, "Three Richardson step sizes");
    app.add_flag("--audit-directions", c.policy.audit_directions, "Also evaluate limits along other directions");
}

int cmd_compute(const Common& c) {
    const ModelPtr model = c.load_model();
    const std::vector<double> theta = c.load_theta(*model);
    const FisherPair pair = fisher_pair(*model, theta, ProjectorSet::fock(model->basis()), c.policy, c.tol);
    Json j = to_json(pair);
    j["model"] = to_json(load_model_spec(c.model));
    write_output(c.out, j.dump(2) + "\n");
    return kOk;
}

struct ScanArgs {
    std::vector<std::size_t> resolution;
    std::string range;
    std::string range1;
    std::string range2;
    std::vector<std::size_t> axes;
    std::string fixed;
    std::string summary;
    unsigned threads = 0;
};

std::array<double, 2> parse_range(const std::string& text) {
    const std::vector<double> r = parse_list(text);
    if (r.size() != 2) throw Error(ErrorKind::InvalidArgument, "a range is 'lo,hi'");
    return {r[0], r[1]};
}

int cmd_scan(const Common& c, const ScanArgs& a) {
    const ModelPtr model = c.load_model();
    ScanConfig cfg;
    cfg.policy = c.policy;
    cfg.tol = c.tol;
    cfg.threads = a.threads;
    if (!a.resolution.empty()) {
        if (a.resolution.size() > 2) throw Error(ErrorKind::InvalidArgument, "--resolution takes one or two values");
        cfg.resolution = {a.resolution[0], a.resolution.back()};
    }
    if (!a.range.empty()) {
        const auto r = parse_range(a.range);
        cfg.lo = {r[0], r[0]};
        cfg.hi = {r[1], r[1]};
    }
    const std::string* axis_ranges[2] = {&a.range1, &a.range2};
    for (int axis = 0; axis < 2; ++axis) {
        if (axis_ranges[axis]->empty()) continue;
        const auto r = parse_range(*axis_ranges[axis]);
        cfg.lo[axis] = r[0];
        cfg.hi[axis] = r[1];
    }
    if (!a.axes.empty()) {
        if (a.axes.size() != 2) throw Error(ErrorKind::InvalidArgument, "--axes takes exactly two indices");
        cfg.axes = {a.axes[0], a.axes[1]};
    }
    if (!a.fixed.empty()) cfg.fixed = parse_list(a.fixed);
    cfg.validate(model->parameter_count());

    const GridResult result = run_scan(*model, cfg);
    Json summary = scan_summary(result);
    summary["model"] = to_json(load_model_spec(c.model));

    if (c.format == "csv") {
        std::ostringstream csv;
        write_scan_csv(csv, result);
        const std::string summary_path = !a.summary.empty() ? a.summary
                                         : (c.out.empty() || c.out == "-") ? std::string()
                                                                           : c.out + ".summary.json";
        write_output(c.out, csv.str());
        try {
            if (!summary_path.empty()) write_output(summary_path, summary.dump(2) + "\n");
        } catch (...) {
            if (!c.out.empty() && c.out != "-") fs::remove(c.out);
            throw;
        }
        if (!c.out.empty() && c.out != "-") {
            std::cout << "cells " << result.cells.size() << " min_gap " << format_double(result.min_gap)
                      << " max_gap " << format_double(result.max_gap) << " zero_gap_cells "
                      << result.zero_gap_cells.size() << "\n";
        }
    } else {
        Json cells = Json::array();
        for (const GridCell& cell : result.cells) {
            Json p = to_json(cell.pair);
            p["verdict"] = cell.saturates ? "Saturates" : "DoesNotSaturate";
            cells.push_back(std::move(p));
        }
        summary["cell_results"] = std::move(cells);
        write_output(c.out, summary.dump(2) + "\n");
    }
    return kOk;
}

int cmd_check_saturation(const Common& c, const std::string& projectors) {
    const ModelPtr model = c.load_model();
    const std::vector<double> theta = c.load_theta(*model);
    const ProjectorSet set = projectors == "fock"
                                 ? ProjectorSet::fock(model->basis())
                                 : projector_set_from_json(read_json_file(projectors), model->basis(), c.tol);
    const SaturationReport report = check_saturation(*model, theta, set, c.policy, c.tol);
    write_output(c.out, to_json(report).dump(2) + "\n");
    return kOk;
}

int cmd_construct(const Common& c, const std::string& variant, double mix) {
    const ModelPtr model = c.load_model();
    const std::vector<double> theta = c.load_theta(*model);
    const OmegaFrame frame = omega_frame(model->derivative_states(theta));
    OptimalMeasurement built;
    try {
        built = variant == "orthogonal" ? construct_orthogonal_optimal(frame, c.policy, c.tol)
                                        : construct_nonorthogonal_optimal(frame, mix, c.policy, c.tol);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::WeakCommutativityViolated) {
            std::cerr << "weak commutativity violated: max|Im Omega| = " << format_double(e.value()) << "\n";
            return kWeakCommutativity;
        }
        if (e.kind() == ErrorKind::InternalInconsistency) {
            std::cerr << "construction self-check failed: " << e.what() << "\n";
            return kConstructionFailed;
        }
        throw;
    }
    SaturationReport report;
    try {
        report = check_saturation(frame.bundle, built.set, c.policy, c.tol);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InternalInconsistency) throw;
        std::cerr << "construction self-check failed: " << e.what() << "\n";
        return kConstructionFailed;
    }
    Json j = to_json(built);
    j["verification"] = Json{{"verdict", to_string(report.verdict)}, {"gap", report.gap}};
    write_output(c.out, j.dump(2) + "\n");
    std::cerr << "verification: " << to_string(report.verdict) << " gap " << format_double(report.gap) << " ("
              << built.set.size() << " projectors, " << built.in_span << " in span)\n";
    return report.verdict == Verdict::Saturates && report.gap < 1e-8 ? kOk : kConstructionFailed;
}

int cmd_verify(const std::vector<std::string>& only) {
    const auto& checks = cli::reference_checks();
    for (const std::string& id : only) {
        const bool known = std::any_of(checks.begin(), checks.end(), [&](const auto& ch) { return ch.id == id; });
        if (!known) {
            std::cerr << "unknown check id '" << id << "'\n";
            return kConfigError;
        }
    }
    bool all = true;
    for (const cli::ReferenceCheck& ch : checks) {
        if (!only.empty() && std::find(only.begin(), only.end(), ch.id) == only.end()) continue;
        const cli::CheckOutcome o = ch.run();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << ch.id << " | " << ch.title << "\n"
                  << "    expected: " << o.expected << "\n"
                  << "    computed: " << o.computed << "\n"
                  << "    tolerance: " << o.tolerance << "\n";
    }
    return all ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiparameter quantum Fisher information and saturation analysis for linear interferometers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Config file of 'key = value' lines; command-line flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Common common;
    add_common(app, common);

    CLI::App* compute = app.add_subcommand("compute", "FIM, QFIM and gap at one phase point (photon counting)");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "Gap over a 2-D phase grid");
    scan->add_option("--resolution", scan_args.resolution, "Points per axis (one value or two)")->delimiter(',');
    scan->add_option("--range", scan_args.range, "lo,hi for both axes (end-exclusive, default 0,2pi)")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    scan->add_option("--range1", scan_args.range1, "lo,hi for the first axis")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    scan->add_option("--range2", scan_args.range2, "lo,hi for the second axis")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    scan->add_option("--axes", scan_args.axes, "Swept phase indices")->delimiter(',');
    scan->add_option("--fixed", scan_args.fixed, "Values for every phase; swept entries are ignored")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    scan->add_option("--summary", scan_args.summary, "Summary JSON path (default <out>.summary.json)");
    scan->add_option("--threads", scan_args.threads, "Worker threads (0 = all cores)");

    std::string projectors = "fock";
    CLI::App* check = app.add_subcommand("check-saturation", "Saturation conditions at one phase point");
    check->add_option("--projectors", projectors, "'fock' or a projector-set JSON file")->capture_default_str();

    std::string variant = "orthogonal";
    double mix = 0.5;
    CLI::App* construct = app.add_subcommand("construct-optimal", "Build a measurement with F = F_Q");
    construct->add_option("--variant", variant)->check(CLI::IsMember({"orthogonal", "nonorthogonal"}))->capture_default_str();
    construct->add_option("--mix", mix, "Probe admixture for the nonorthogonal variant")->capture_default_str();

    std::vector<std::string> only;
    CLI::App* verify = app.add_subcommand("verify-paper", "Reference-value checks");
    verify->add_option("--only", only, "Run only these check ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        common.finish();
        if (*scan) {
            if (common.format.empty()) common.format = "csv";
            return cmd_scan(common, scan_args);
        }
        if (common.format == "csv") throw Error(ErrorKind::InvalidArgument, "--format csv applies to scan only");
        if (*compute) return cmd_compute(common);
        if (*check) return cmd_check_saturation(common, projectors);
        if (*construct) return cmd_construct(common, variant, mix);
        if (*verify) return cmd_verify(only);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}
