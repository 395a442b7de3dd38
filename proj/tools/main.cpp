#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cuntz/cuntz.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool as_json = false;
    int forced_d = 0;  // 0 = infer from the expression
    cuntz::Config cfg;
};

cuntz::Element parse_arg(const std::string& text, const Options& opt) {
    return cuntz::parse_expression(text, opt.forced_d);
}

// Parse two expressions over a common generator count.
std::pair<cuntz::Element, cuntz::Element> parse_pair(const std::string& a,
                                                     const std::string& b,
                                                     const Options& opt) {
    cuntz::Element x = cuntz::parse_expression(a, opt.forced_d);
    cuntz::Element y = cuntz::parse_expression(b, opt.forced_d);
    if (x.generator_count() < y.generator_count())
        x = cuntz::parse_expression(a, y.generator_count());
    else if (y.generator_count() < x.generator_count())
        y = cuntz::parse_expression(b, x.generator_count());
    return {std::move(x), std::move(y)};
}

void print_element(const cuntz::Element& x, const Options& opt) {
    if (opt.as_json)
        std::cout << cuntz::element_to_json(x).dump(2) << "\n";
    else
        std::cout << cuntz::to_string(x) << "\n";
}

json report_to_json(const cuntz::Report& rep) {
    json items = json::array();
    for (const auto& it : rep.items) {
        json ji{{"identity", it.identity},
                {"sample", it.sample},
                {"status", it.status == cuntz::CheckStatus::pass ? "pass"
                           : it.status == cuntz::CheckStatus::fail
                               ? "fail"
                               : "inconclusive"}};
        if (!it.counterexample.empty()) ji["counterexample"] = it.counterexample;
        items.push_back(std::move(ji));
    }
    return json{{"suite", rep.suite},
                {"passed", rep.passed()},
                {"failed", rep.failed()},
                {"inconclusive", rep.inconclusive()},
                {"items", std::move(items)}};
}

int emit_reports(const std::vector<cuntz::Report>& reports, const Options& opt) {
    std::size_t fails = 0, inconclusive = 0;
    for (const auto& rep : reports) {
        fails += rep.failed();
        inconclusive += rep.inconclusive();
    }
    if (opt.as_json) {
        json suites = json::array();
        for (const auto& rep : reports) suites.push_back(report_to_json(rep));
        std::cout << json{{"suites", std::move(suites)},
                          {"failed", fails},
                          {"inconclusive", inconclusive},
                          {"ok", fails == 0}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << rep.summary() << "\n";
            for (const auto& it : rep.items) {
                if (it.status == cuntz::CheckStatus::pass) continue;
                const char* tag =
                    it.status == cuntz::CheckStatus::fail ? "FAIL" : "INCONCLUSIVE";
                std::cout << "  [" << tag << "] " << it.identity;
                if (!it.sample.empty()) std::cout << " | " << it.sample;
                if (!it.counterexample.empty())
                    std::cout << " | " << cuntz::clip(it.counterexample);
                std::cout << "\n";
            }
        }
        std::cout << (fails == 0 ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    }
    return fails == 0 ? 0 : 1;
}

int run_check(const std::string& suite, int n, std::uint64_t seed,
              const Options& opt) {
    using namespace cuntz;
    const Limits& lim = opt.cfg.limits;
    auto need_n = [&](int fallback) { return n >= 0 ? n : fallback; };
    if (n >= 0 && suite != "car" && suite != "fa")
        throw CLI::ValidationError("check", "only 'car' and 'fa' take a count");

    std::vector<Report> reports;
    if (suite == "cuntz") {
        reports.push_back(check_cuntz_suite(2));
    } else if (suite == "rfs") {
        reports.push_back(check_rfs_suite(3, lim));
    } else if (suite == "car") {
        const int N = need_n(6);
        reports.push_back(check_car_suite(N, std::min(N, 5), lim));
    } else if (suite == "transfer") {
        reports.push_back(check_transfer_suite(seed, lim));
    } else if (suite == "covariance") {
        reports.push_back(check_covariance_suite(seed, lim));
    } else if (suite == "crossed-roundtrip") {
        reports.push_back(check_crossed_roundtrip_suite(seed, lim));
    } else if (suite == "condition-star") {
        reports.push_back(check_condition_star_suite(
            seed, std::min(12, lim.max_perm_depth), 50, 1e-6, lim));
    } else if (suite == "fa") {
        reports.push_back(check_fa_suite(need_n(3), lim));
    } else if (suite == "matrix") {
        reports.push_back(check_matrix_suite(seed, lim));
    } else if (suite == "all") {
        Config cfg = opt.cfg;
        cfg.seed = seed;
        reports = check_all(cfg);
    } else {
        throw CLI::ValidationError(
            "check", "unknown suite '" + suite +
                         "' (expected cuntz, rfs, car, transfer, covariance, "
                         "crossed-roundtrip, condition-star, fa, matrix, all)");
    }
    return emit_reports(reports, opt);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cuntz;
    CLI::App app{"Exact symbolic kernel for the rank-two Cuntz generators"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path;
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_option("--d", opt.forced_d, "generator count (default: inferred)")
        ->check(CLI::Range(2, 9));
    app.add_option("--config", config_path, "key = value configuration file")
        ->envname("CUNTZ_CONFIG");
    auto* mc = app.add_option("--max-car", opt.cfg.limits.max_car_index,
                              "largest fermion mode index");
    auto* ml = app.add_option("--max-level", opt.cfg.limits.max_level,
                              "largest expansion / matrix level");
    auto* md = app.add_option("--max-depth", opt.cfg.limits.max_perm_depth,
                              "largest norm lower-bound cutoff");
    auto* mt =
        app.add_option("--tol", opt.cfg.limits.tolerance, "numeric tolerance");

    std::string expr, expr2, map_name, suite;
    int level = -1, car_n = 0, check_n = -1, lb_depth = -1;
    std::uint64_t seed = 0;

    auto* c_norm = app.add_subcommand("normalize", "parse and print normal form");
    c_norm->add_option("expr", expr)->required();
    c_norm->add_option("--level", level, "expand to a uniform word length");

    auto* c_eq = app.add_subcommand("eq", "decide equality of two expressions");
    c_eq->add_option("lhs", expr)->required();
    c_eq->add_option("rhs", expr2)->required();

    auto* c_grade = app.add_subcommand("grade", "gauge degree decomposition");
    c_grade->add_option("expr", expr)->required();

    auto* c_car = app.add_subcommand("car", "print the n-th fermion generator");
    c_car->add_option("n", car_n)->required()->check(CLI::PositiveNumber);

    auto* c_apply = app.add_subcommand("apply", "apply a canonical map");
    c_apply->add_option("map", map_name)
        ->required()
        ->check(CLI::IsMember({"rho", "zeta", "delta", "delta-star"}));
    c_apply->add_option("expr", expr)->required();

    auto* c_dec =
        app.add_subcommand("decompose", "crossed-product coefficient map");
    c_dec->add_option("expr", expr)->required();

    auto* c_mat = app.add_subcommand("matrix", "matrix of a balanced element");
    c_mat->add_option("expr", expr)->required();
    c_mat->add_option("--level", level, "matrix level (word length)")->required();

    auto* c_nrm = app.add_subcommand("norm", "operator norm or lower bound");
    c_nrm->add_option("expr", expr)->required();
    c_nrm->add_option("--lower-bound-depth", lb_depth,
                      "compression cutoff for the lower bound");

    auto* c_chk = app.add_subcommand("check", "run a verification suite");
    c_chk->add_option("suite", suite)->required();
    c_chk->add_option("n", check_n, "mode count (car) or level (fa)");
    c_chk->add_option("--seed", seed, "seed for randomized samples");

    // global flags remain usable after the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);

        if (!config_path.empty()) {
            const Config file_cfg = load_config_file(config_path);
            // flags given explicitly win over the file
            Config merged = file_cfg;
            if (mc->count()) merged.limits.max_car_index = opt.cfg.limits.max_car_index;
            if (ml->count()) merged.limits.max_level = opt.cfg.limits.max_level;
            if (md->count())
                merged.limits.max_perm_depth = opt.cfg.limits.max_perm_depth;
            if (mt->count()) merged.limits.tolerance = opt.cfg.limits.tolerance;
            merged.seed = opt.cfg.seed;
            opt.cfg = merged;
        }
        const Limits& lim = opt.cfg.limits;

        if (*c_norm) {
            Element x = parse_arg(expr, opt);
            if (level >= 0) {
                if (level > lim.max_level)
                    throw ResourceError("normalize: level " + std::to_string(level) +
                                        " exceeds limit " +
                                        std::to_string(lim.max_level));
                x = expand_to_level(x, level);
            }
            print_element(x, opt);
            return 0;
        }
        if (*c_eq) {
            auto [x, y] = parse_pair(expr, expr2, opt);
            const bool same = equals(x, y);
            if (opt.as_json)
                std::cout << json{{"equal", same}}.dump() << "\n";
            else
                std::cout << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
        }
        if (*c_grade) {
            const Element x = parse_arg(expr, opt);
            const auto parts = grade(x);
            if (opt.as_json) {
                json out = json::object();
                for (const auto& [g, part] : parts)
                    out[std::to_string(g)] = to_string(part);
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [g, part] : parts)
                    std::cout << "degree " << g << ": " << to_string(part) << "\n";
                if (parts.empty()) std::cout << "0\n";
            }
            return 0;
        }
        if (*c_car) {
            print_element(car_generator(car_n, lim).value, opt);
            return 0;
        }
        if (*c_apply) {
            const Element x = parse_arg(expr, opt);
            const Element y = map_name == "rho"    ? apply_rho(x)
                              : map_name == "zeta" ? apply_zeta(x)
                              : map_name == "delta" ? apply_delta(x)
                                                    : apply_delta_star(x);
            print_element(y, opt);
            return 0;
        }
        if (*c_dec) {
            const auto ce = from_cuntz(parse_arg(expr, opt));
            json out = json::object();
            for (const auto& [k, a] : ce.coeffs) out[std::to_string(k)] = to_string(a);
            std::cout << out.dump(opt.as_json ? 2 : -1) << "\n";
            return 0;
        }
        if (*c_mat) {
            const UhfMatrix m = to_matrix_level(parse_arg(expr, opt), level, lim);
            if (opt.as_json) {
                json rows = json::array();
                for (std::size_t i = 0; i < m.dim(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < m.dim(); ++j)
                        row.push_back(m.at(i, j).to_string());
                    rows.push_back(std::move(row));
                }
                std::cout << json{{"level", level},
                                  {"dim", m.dim()},
                                  {"rows", std::move(rows)}}
                                 .dump(2)
                          << "\n";
            } else {
                for (std::size_t i = 0; i < m.dim(); ++i) {
                    std::cout << "[";
                    for (std::size_t j = 0; j < m.dim(); ++j) {
                        if (j) std::cout << ", ";
                        std::cout << m.at(i, j).to_string();
                    }
                    std::cout << "]\n";
                }
            }
            return 0;
        }
        if (*c_nrm) {
            const Element x = parse_arg(expr, opt);
            if (lb_depth < 0 && is_balanced(x)) {
                const double v = norm_gauge_invariant(x, lim);
                if (opt.as_json)
                    std::cout << json{{"kind", "exact"}, {"value", v}}.dump() << "\n";
                else
                    std::cout << "norm = " << v << "\n";
                return 0;
            }
            const int depth = lb_depth >= 0 ? lb_depth : lim.max_perm_depth;
            const auto profile = norm_lower_bound_profile(x, depth, 3, lim);
            if (opt.as_json) {
                json prof = json::array();
                for (const auto& [cut, v] : profile)
                    prof.push_back(json{{"depth", cut}, {"bound", v}});
                std::cout << json{{"kind", "lower_bound"},
                                  {"value", profile.back().second},
                                  {"profile", std::move(prof)}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& [cut, v] : profile)
                    std::cout << "depth " << cut << ": lower bound " << v << "\n";
            }
            return 0;
        }
        if (*c_chk) return run_check(suite, check_n, seed, opt);

        return 2;  // unreachable: a subcommand is required
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
