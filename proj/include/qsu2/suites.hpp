#pragma once

// Deterministic property suites behind the CLI `suite` verb. Each check
// returns a named pass/fail entry; suites are reproducible given the seed.

#include "qsu2/json_io.hpp"
#include "qsu2/random.hpp"

namespace qsu2 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

Report suite_scalar(uint64_t seed, int samples = 40);
Report suite_hopf(int degree, uint64_t seed, int samples = 25);
Report suite_peterweyl(int nmax = 5);
Report suite_admissibility(int maxdeg = 4);
Report suite_calculus(int cutoff, uint64_t seed);
Report suite_gauge(int cutoff, int dim, uint64_t seed);
Report suite_cocycle(uint64_t seed);

std::string report_to_text(const Report& r);
Json report_to_json(const Report& r);

// Sturm-chain count of real roots of a rational-coefficient polynomial in
// the closed interval [lo, hi]; exact sign computations.
int real_roots_in_interval(const std::vector<Rat>& poly, const Rat& lo, const Rat& hi);

}  // namespace qsu2
