// Acceptance runner: one PASS/FAIL line per criterion. Every comparison is exact
// (tolerance 0). Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "latpath/formulas.hpp"
#include "latpath/oracle.hpp"
#include "latpath/verify.hpp"

using namespace latpath;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome from_summaries(const std::vector<verify::Summary>& parts) {
    Outcome out{true, {}};
    for (const auto& s : parts) {
        out.ok = out.ok && s.ok();
        if (!out.detail.empty()) {
            out.detail += "; ";
        }
        out.detail += s.suite + " " + std::to_string(s.checks) + " checks " + std::to_string(s.failures) +
                      " failures";
        if (s.first_failure) {
            out.detail += " [" + s.first_failure->to_line() + "]";
        }
    }
    return out;
}

Outcome catalan_row() {
    const std::vector<unsigned long> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    std::string got;
    bool ok = true;
    for (std::int64_t m = 0; m <= 10; ++m) {
        const Count v = count_weak(1, 0, 0, 0, m, m);
        ok = ok && v == Count(expected[static_cast<std::size_t>(m)]);
        ok = ok && v == fuss_catalan(2, m);
        got += (m ? "," : "") + v.str();
    }
    return {ok, "m=0..10: " + got};
}

Outcome fuss_catalan_row() {
    const std::vector<unsigned long> expected{1, 1, 3, 12, 55, 273};
    std::string got;
    bool ok = true;
    for (std::int64_t m = 0; m <= 5; ++m) {
        const Count v = fuss_catalan(3, m);
        ok = ok && v == Count(expected[static_cast<std::size_t>(m)]);
        if (m <= 4) {
            const PathQuery dyck{0, 0, m, 2 * m, BoundaryLine::integer_slope(2, 0), Strictness::Weak};
            ok = ok && v == oracle::dp_count(dyck);
        }
        got += (m ? "," : "") + v.str();
    }
    return {ok, "m=0..5: " + got + "; oracle agrees for m<=4"};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const verify::SweepConfig grid{};
    const std::vector<Criterion> criteria{
        {"1 formula-vs-oracle sweep", [&] { return from_summaries({verify::oracle_sweep(grid)}); }},
        {"2 Catalan row", catalan_row},
        {"3 Fuss-Catalan row", fuss_catalan_row},
        {"4 Koroljuk form equality", [] { return from_summaries({verify::koroljuk_forms(3, 8, 8, 4)}); }},
        {"5 complement identity", [] { return from_summaries({verify::complement_grid(3, 8, 8, 4, 10)}); }},
        {"6 bijection suite", [] { return from_summaries({verify::bijection_suite(10)}); }},
        {"7 Hagen-Rothe and upper negation",
         [] {
             return from_summaries({verify::hagen_rothe_trials(1000, verify::kDefaultSeed),
                                    verify::upper_negation_trials(500, verify::kDefaultSeed)});
         }},
        {"8 recurrence and shift identities",
         [&] { return from_summaries({verify::shift_and_recurrence_sweep(grid)}); }},
        {"9 cross-formula agreements",
         [] { return from_summaries({verify::niederhausen_grid(3, 6), verify::bohm_grid(3, 4, 5)}); }},
        {"10 non-integer intercepts", [] { return from_summaries({verify::non_integer_intercepts(20)}); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += o.ok ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (tolerance: exact, " << timing << ") "
                  << o.detail << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
