#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cuntz {

// INCONCLUSIVE is reserved for one-sided numeric checks: a finite-depth lower
// bound that fails to dominate is not a refutation.
enum class CheckStatus { pass, fail, inconclusive };

struct CheckItem {
    std::string identity;        // which law was checked
    std::string sample;          // which inputs (indices or short renderings)
    CheckStatus status = CheckStatus::pass;
    std::string counterexample;  // filled on fail/inconclusive
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    void add(std::string identity, std::string sample, bool pass,
             std::string counterexample = {}) {
        items.push_back({std::move(identity), std::move(sample),
                         pass ? CheckStatus::pass : CheckStatus::fail,
                         std::move(counterexample)});
    }

    void add_status(std::string identity, std::string sample, CheckStatus st,
                    std::string counterexample = {}) {
        items.push_back({std::move(identity), std::move(sample), st,
                         std::move(counterexample)});
    }

    std::size_t passed() const { return count(CheckStatus::pass); }
    std::size_t failed() const { return count(CheckStatus::fail); }
    std::size_t inconclusive() const { return count(CheckStatus::inconclusive); }
    bool ok() const { return failed() == 0 && inconclusive() == 0; }
    // Exit-code semantics: an inconclusive one-sided bound is not a failure.
    bool no_failures() const { return failed() == 0; }

    std::string summary() const {
        std::string s = suite + ": " + std::to_string(passed()) + "/" +
                        std::to_string(items.size()) + " checks passed";
        if (auto f = failed()) s += ", " + std::to_string(f) + " FAILED";
        if (auto i = inconclusive()) s += ", " + std::to_string(i) + " INCONCLUSIVE";
        return s;
    }

  private:
    std::size_t count(CheckStatus st) const {
        std::size_t n = 0;
        for (const auto& it : items) n += (it.status == st);
        return n;
    }
};

// Keeps counterexample strings readable in terminal reports.
inline std::string clip(std::string s, std::size_t limit = 240) {
    if (s.size() > limit) {
        s.resize(limit);
        s += "...";
    }
    return s;
}

}  // namespace cuntz
