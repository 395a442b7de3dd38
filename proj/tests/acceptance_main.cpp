// Acceptance battery: one line per criterion, nonzero exit on any failure.
// argv[1] (optional) is the path to the command-line binary; the final
// criterion shells out to it.

#include <sys/wait.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "cuntz/cuntz.hpp"

using namespace cuntz;

namespace {

bool g_all_ok = true;

void line(int idx, const std::string& name, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << idx << ". " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    g_all_ok = g_all_ok && ok;
}

std::string counts(const Report& r) {
    std::string s = std::to_string(r.passed()) + "/" + std::to_string(r.items.size()) +
                    " checks";
    if (r.failed()) s += ", " + std::to_string(r.failed()) + " failed";
    if (r.inconclusive())
        s += ", " + std::to_string(r.inconclusive()) + " inconclusive";
    return s;
}

int shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
    // Per-suite seeds drawn exactly as the full battery does for seed 0,
    // so these results coincide with `check all --seed 0`.
    Rng seeder(0);
    const std::uint64_t transfer_seed = seeder.next();
    const std::uint64_t covariance_seed = seeder.next();
    const std::uint64_t crossed_seed = seeder.next();
    const std::uint64_t star_seed = seeder.next();
    const std::uint64_t matrix_seed = seeder.next();

    {
        const Report r = check_cuntz_suite(2);
        line(1, "generator relations, exact", r.ok(), counts(r));
    }
    {
        const Report r = check_car_suite(6, 5);
        line(2, "fermion anticommutators (modes <= 6) and reduction chain", r.ok(),
             counts(r));
    }
    {
        const Report r = check_rfs_axioms(3);
        line(3, "seed-system axioms on all level <= 3 monomials", r.ok(), counts(r));
    }
    {
        const Report r = check_transfer_suite(transfer_seed);
        line(4, "endomorphism, transfer identity, fullness, inversion", r.ok(),
             counts(r));
    }
    {
        Report r = check_crossed_roundtrip_suite(crossed_seed);
        const Report cov = check_covariance_suite(covariance_seed);
        const bool ok = r.ok() && cov.ok();
        line(5, "coefficient-map decomposition: round trips and native product", ok,
             counts(r) + "; covariance " + counts(cov));
    }
    {
        const Report r = check_condition_star_suite(star_seed, 12, 50, 1e-6);
        const bool ok = r.failed() == 0 && r.inconclusive() == 0;
        line(6, "degree-zero norm bound at depth 12, no inconclusive samples", ok,
             counts(r));
    }
    {
        const Report r = check_matrix_suite(matrix_seed);
        line(7, "matrix cross-validation and ladder agreement", r.ok(), counts(r));
    }
    {
        const Report r = check_fa_suite(3);
        line(8, "interaction-free span strictness, levels 1..3", r.ok(), counts(r));
    }
    {
        // printer and JSON round trips, then the shipped binary end to end
        Rng rng(0);
        int bad = 0;
        for (int t = 0; t < 200; ++t) {
            const int d = 2 + int(rng.next() % 2);
            const Element x = random_element(rng, d, 3, 4, false);
            if (!(parse_expression(to_string(x), d) == x)) ++bad;
        }
        for (int t = 0; t < 100; ++t) {
            const Element x = random_element(rng, 2, 3, 4, false);
            if (!(element_from_json(element_to_json(x)) == x)) ++bad;
        }
        bool cli_ok = true;
        std::string detail = std::to_string(300 - bad) + "/300 round trips";
        if (argc > 1) {
            const std::string bin = argv[1];
            const int eq = shell(bin + " eq \"s1* s1\" \"I\" > /dev/null");
            const int all = shell(bin + " check all --seed 0 > /dev/null");
            cli_ok = eq == 0 && all == 0;
            detail += std::string("; eq exit ") + std::to_string(eq) +
                      ", check all exit " + std::to_string(all);
        } else {
            detail += "; binary not supplied, subprocess step skipped";
        }
        line(9, "expression round trips and end-to-end battery", bad == 0 && cli_ok,
             detail);
    }

    std::cout << (g_all_ok ? "ACCEPTANCE: all criteria satisfied"
                           : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return g_all_ok ? 0 : 1;
}
