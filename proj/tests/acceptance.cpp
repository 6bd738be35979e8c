// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "tetratrig/suites.hpp"

using namespace tetratrig;

namespace {

struct Criterion {
    int id;
    const char* what;
    std::vector<const char*> suites;
    double tol;  // bound on every suite's max residual; 0 means exact, 1 for residuals already scaled by their bounds
    int trials;
    const char* fact;  // suite fact to echo, if any
};

const std::vector<Criterion> kCriteria{
    {1, "lattice counts against enumeration", {"lattice"}, 0.0, 100, nullptr},
    {2, "Pi ~ Omega equivalence and cross-ratio invariant", {"thm11", "cor12"}, 1e-7, 100, nullptr},
    {3, "solver against the cofactor oracle, all-right input", {"solve"}, 1e-7, 100, nullptr},
    {4, "Regge images: angles follow the transformed formulas", {"thm13"}, 1e-8, 100, nullptr},
    {5, "psi uniqueness and the all-right example", {"thm15"}, 1e-8, 100, "psi direction"},
    {6, "discriminant identity, random and exact", {"prop313"}, 1e-8, 100, nullptr},
    {7, "gauge, W(D6) and determinant-form agreement", {"gauge"}, 1.0, 100, "drifts"},
    {8, "reconstruction round-trip", {"reconstruct"}, 1e-8, 100, "winning quadric sign"},
    {9, "cross-ratio chains with concurrency", {"chains"}, 1e-7, 30, nullptr},
    {10, "surface bookkeeping", {"surface"}, 0.0, 100, nullptr},
};

}  // namespace

int main() {
    bool all = true;
    for (const auto& c : kCriteria) {
        RunConfig cfg;
        cfg.trials = c.trials;
        cfg.jobs = 4;
        bool ok = true;
        double worst = 0.0;
        std::size_t trials = 0;
        std::string fact;
        for (const char* name : c.suites) {
            SuiteReport r = run_suite(name, cfg);
            ok = ok && r.pass && (c.tol == 0.0 ? r.max_residual == 0.0 : r.max_residual < c.tol);
            worst = std::max(worst, r.max_residual);
            trials += r.trials.size();
            for (const auto& [k, v] : r.facts)
                if (c.fact && k == c.fact) fact = k + ": " + v;
        }
        all = all && ok;
        std::printf("criterion %2d: %s  %s (%zu trials, max residual %.3g, tolerance %.3g)%s%s\n", c.id,
                    ok ? "PASS" : "FAIL", c.what, trials, worst, c.tol, fact.empty() ? "" : "; ", fact.c_str());
    }
    return all ? 0 : 1;
}
