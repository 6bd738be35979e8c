#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tetratrig/tetra.hpp"

namespace tetratrig {

struct RunConfig {
    double tolerance = 1e-9;  // default projective tolerance while the suite runs
    std::uint64_t seed = 0;
    int trials = 100;
    int jobs = 1;
};

// Hyperbolic lengths uniform in [0.5, 2], spherical in [0.4, 1.2]; realizable and generic only.
std::vector<MetricSpec> random_specs(Geometry g, int count, std::uint64_t seed);

struct TrialResult {
    int index = 0;
    std::string label;
    double residual = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    double tolerance = 0.0;  // pass threshold on the residual
    std::vector<TrialResult> trials;
    std::vector<std::pair<std::string, std::string>> facts;  // extra findings, in order
    double max_residual = 0.0;
    bool pass = false;
};

// Runs fn(0..n-1) on up to `jobs` threads; results are ordered by index.
std::vector<TrialResult> run_trials(int n, int jobs, const std::function<TrialResult(int)>& fn);

SuiteReport suite_lattice(const RunConfig& cfg);
SuiteReport suite_thm11(const RunConfig& cfg);   // projective equivalence of Π and Ω
SuiteReport suite_cor12(const RunConfig& cfg);   // cross-ratio invariant
SuiteReport suite_solve(const RunConfig& cfg);
SuiteReport suite_thm13(const RunConfig& cfg);   // Regge symmetry
SuiteReport suite_thm15(const RunConfig& cfg);   // ψ and the worked all-right example
SuiteReport suite_prop313(const RunConfig& cfg);
SuiteReport suite_gauge(const RunConfig& cfg);   // gauge and W(D6) invariance, determinant forms
SuiteReport suite_reconstruct(const RunConfig& cfg);
SuiteReport suite_chains(const RunConfig& cfg);
SuiteReport suite_surface(const RunConfig& cfg);

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);  // throws std::invalid_argument

}  // namespace tetratrig
