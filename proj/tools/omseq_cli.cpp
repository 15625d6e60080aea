// Command-line surface: computes windowed and global quasi-norms, runs the
// class validators and the randomized verification suite, and reproduces the
// bundled example computations. All documents are JSON on stdout (or --out).
//
// Exit codes: 0 success / all checks pass, 1 validation or check failure,
// 2 input error, 3 solver nonconvergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "omseq/omseq.hpp"

namespace {

using omseq::json;

json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open \"" + arg + "\"");
    return json::parse(in);
}

void emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write \"" + out_path + "\"");
    out << text;
}

struct SpecArgs {
    std::string young_arg;   // --Phi: file or inline JSON
    std::string weight_arg;  // --phi: file or inline JSON (identity if absent)
    double s_override = -1.0;
};

omseq::SYoungSpec parse_young(const SpecArgs& a) {
    json j = load_json_arg(a.young_arg);
    if (a.s_override > 0.0) j["s"] = a.s_override;
    return omseq::syoung_from_json(j);
}

omseq::WeightSpec parse_weight(const SpecArgs& a) {
    if (a.weight_arg.empty()) return omseq::WeightSpec::identity();
    return omseq::weight_from_json(load_json_arg(a.weight_arg));
}

std::string describe(const omseq::Violation& v) {
    std::string msg = v.property + " violated at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
        msg += (i ? ", " : "") + std::to_string(v.witness[i]);
    msg += "): " + std::to_string(v.lhs) + " vs " + std::to_string(v.rhs);
    return msg;
}

// Used by the norm-computing commands: specs must validate before solving.
void require_valid_specs(const omseq::SYoungSpec& f, const omseq::WeightSpec& wt) {
    std::string why;
    if (!omseq::structurally_valid(f, &why))
        throw std::invalid_argument("young spec: " + why);
    const auto fr = omseq::validate_s_young(f);
    if (!fr.valid())
        throw std::invalid_argument("young spec: " + describe(fr.violations().front()));
    if (!omseq::structurally_valid(wt, &why))
        throw std::invalid_argument("weight spec: " + why);
    const auto wr = omseq::validate_weight(wt, 201);
    if (!wr.valid())
        throw std::invalid_argument("weight spec: " + describe(wr.violations().front()));
}

bool looks_like_weight(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) return false;
    const std::string fam = j["family"].get<std::string>();
    if (fam == "identity" || fam == "constant") return true;
    if (fam == "power") return j.contains("theta");
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Orlicz-Morrey quasi-norms of real sequences"};
    app.require_subcommand(1);

    SpecArgs specs;
    std::string sequence_path, out_path;
    double tol = 1e-12;
    long long opt_m = 0, opt_N = 0;
    double opt_b = 1.0;

    auto add_spec_flags = [&](CLI::App* cmd, bool need_young) {
        auto* phi_opt = cmd->add_option("--Phi", specs.young_arg,
                                        "s-Young spec, inline JSON or a file path");
        if (need_young) phi_opt->required();
        cmd->add_option("--phi", specs.weight_arg,
                        "weight spec, inline JSON or a file path (default: identity)");
        cmd->add_option("--s", specs.s_override, "override the s exponent of --Phi");
        cmd->add_option("--tol", tol, "solver relative tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "write the emitted document to a file");
    };

    auto* cmd_norm = app.add_subcommand("norm", "global quasi-norm of a sequence");
    cmd_norm->add_option("sequence", sequence_path, "sequence JSON file")->required();
    add_spec_flags(cmd_norm, true);

    constexpr long long kIndexLimit = 1000000000000ll;
    auto* cmd_window = app.add_subcommand("window-norm", "norm over a single window");
    cmd_window->add_option("sequence", sequence_path)->required();
    cmd_window->add_option("--m", opt_m, "window center")
        ->required()
        ->check(CLI::Range(-kIndexLimit, kIndexLimit));
    cmd_window->add_option("--N", opt_N, "window half-width")
        ->required()
        ->check(CLI::Range(0ll, kIndexLimit));
    add_spec_flags(cmd_window, true);

    auto* cmd_modular = app.add_subcommand("modular", "modular of a window at level b");
    cmd_modular->add_option("sequence", sequence_path)->required();
    cmd_modular->add_option("--m", opt_m, "window center")
        ->required()
        ->check(CLI::Range(-kIndexLimit, kIndexLimit));
    cmd_modular->add_option("--N", opt_N, "window half-width")
        ->required()
        ->check(CLI::Range(0ll, kIndexLimit));
    cmd_modular->add_option("--b", opt_b, "level b > 0")->required();
    add_spec_flags(cmd_modular, true);

    std::string spec_path, kind = "auto";
    auto* cmd_validate = app.add_subcommand("validate", "validate a function-class spec");
    cmd_validate->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_validate->add_option("--kind", kind, "young | weight | auto")
        ->check(CLI::IsMember({"young", "weight", "auto"}));
    cmd_validate->add_option("--out", out_path, "write the emitted document to a file");

    std::string config_path;
    omseq::SuiteConfig suite_cfg;
    suite_cfg.checks = omseq::all_check_names();
    bool list_checks = false;
    auto* cmd_verify = app.add_subcommand("verify", "run the randomized verification suite");
    cmd_verify->add_option("config", config_path, "suite config JSON file (optional)");
    cmd_verify->add_option("--seed", suite_cfg.seed, "randomization seed");
    cmd_verify->add_option("--trials", suite_cfg.trials, "trials per check")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--checks", suite_cfg.checks, "subset of checks to run")
        ->delimiter(',');
    cmd_verify->add_flag("--list", list_checks, "list known check names and exit");
    cmd_verify->add_option("--out", out_path, "write the emitted document to a file");

    std::string example_name;
    double ex_D = 2.0, ex_p = 1.0, ex_s = -1.0;
    long long ex_L = 64;
    auto* cmd_example = app.add_subcommand("example", "reproduce a bundled computation");
    cmd_example->add_option("name", example_name, "geometric | counterexample")->required();
    cmd_example->add_option("--D", ex_D, "geometric ratio, D > 1");
    cmd_example->add_option("--p", ex_p, "power exponent, p > 0");
    cmd_example->add_option("--L", ex_L, "truncation half-length")
        ->check(CLI::Range(0ll, 1000000ll));
    cmd_example->add_option("--s", ex_s, "s exponent (default min(p,1))");
    cmd_example->add_option("--tol", tol, "solver relative tolerance")->check(CLI::PositiveNumber);
    cmd_example->add_option("--out", out_path, "write the emitted document to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_norm->parsed()) {
            const auto x = omseq::sequence_from_json(load_json_arg(sequence_path));
            const auto f = parse_young(specs);
            const auto wt = parse_weight(specs);
            require_valid_specs(f, wt);
            emit(omseq::to_json(omseq::global_norm(x, f, wt, tol)), out_path);
            return 0;
        }

        if (cmd_window->parsed()) {
            if (opt_N < 0) throw std::invalid_argument("N must be nonnegative");
            const auto x = omseq::sequence_from_json(load_json_arg(sequence_path));
            const auto f = parse_young(specs);
            const auto wt = parse_weight(specs);
            require_valid_specs(f, wt);
            const omseq::Window w{opt_m, opt_N};
            const auto info = omseq::window_norm_info(x, w, f, wt, tol);
            emit(json{{"norm", info.value},
                      {"window", omseq::to_json(w)},
                      {"iterations", info.iterations},
                      {"residual", info.residual}},
                 out_path);
            return 0;
        }

        if (cmd_modular->parsed()) {
            if (opt_N < 0) throw std::invalid_argument("N must be nonnegative");
            const auto x = omseq::sequence_from_json(load_json_arg(sequence_path));
            const auto f = parse_young(specs);
            const auto wt = parse_weight(specs);
            require_valid_specs(f, wt);
            const omseq::Window w{opt_m, opt_N};
            emit(json{{"modular", omseq::modular(x, w, opt_b, f, wt)},
                      {"window", omseq::to_json(w)},
                      {"b", opt_b}},
                 out_path);
            return 0;
        }

        if (cmd_validate->parsed()) {
            const json j = load_json_arg(spec_path);
            const bool as_weight = kind == "weight" || (kind == "auto" && looks_like_weight(j));
            json doc;
            bool valid = false;
            if (as_weight) {
                const auto w = omseq::weight_from_json(j);
                const auto report = omseq::validate_weight(w, 201);
                valid = report.valid();
                doc = json{{"kind", "weight"}, {"spec", omseq::to_json(w)},
                           {"report", omseq::to_json(report)}};
            } else {
                const auto f = omseq::syoung_from_json(j);
                const auto report = omseq::validate_s_young(f);
                valid = report.valid();
                doc = json{{"kind", "young"}, {"spec", omseq::to_json(f)},
                           {"report", omseq::to_json(report)}};
            }
            emit(doc, out_path);
            return valid ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            if (list_checks) {
                emit(json{{"checks", omseq::all_check_names()}}, out_path);
                return 0;
            }
            omseq::SuiteConfig cfg = suite_cfg;
            if (!config_path.empty())
                cfg = omseq::suite_config_from_json(load_json_arg(config_path));
            const auto report = omseq::run_suite(cfg);
            emit(omseq::to_json(report), out_path);
            return report.all_pass() ? 0 : 1;
        }

        if (cmd_example->parsed()) {
            if (example_name == "geometric") {
                const double s = ex_s > 0.0 ? ex_s : std::min(ex_p, 1.0);
                const auto f = omseq::SYoungSpec::power(ex_p, s);
                const auto wt = omseq::WeightSpec::identity();
                const auto x = omseq::geometric_example(ex_D, ex_p, ex_L);
                const auto r = omseq::global_norm(x, f, wt, tol);
                const double closed = omseq::geometric_closed_form(ex_D, ex_p);
                emit(json{{"name", "geometric"},
                          {"D", ex_D},
                          {"p", ex_p},
                          {"s", s},
                          {"L", ex_L},
                          {"closed_form", closed},
                          {"truncated_norm", r.value},
                          {"difference", closed - r.value},
                          {"witness", omseq::to_json(r.witness)}},
                     out_path);
                return 0;
            }
            if (example_name == "counterexample") {
                emit(omseq::to_json(omseq::reproduce_counterexample()), out_path);
                return 0;
            }
            throw std::invalid_argument("unknown example \"" + example_name + "\"");
        }
    } catch (const omseq::nonconvergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
