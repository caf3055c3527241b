#ifndef TRIPLEINT_SUITES_HPP
#define TRIPLEINT_SUITES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripleint/report.hpp"

namespace tripleint {

/// Configuration of one suite run. Fields left empty fall back to the
/// per-suite defaults, which mirror the acceptance sweeps.
struct SuiteConfig {
    std::string suite;                         // suite name, or "all"
    std::optional<std::array<double, 3>> a;    // --a i,j,k
    std::optional<std::string> sigma;          // --sigma, e.g. "132"
    std::vector<long> primes;                  // --p
    std::vector<double> qs;                    // --q
    std::optional<std::pair<int, int>> depth;  // --depth M,N
    std::optional<std::size_t> grid;           // --grid
    std::optional<double> tol;                 // --tol
    std::optional<long> max;                   // --max
    std::string format = "json";
    std::optional<std::string> out_path;
    std::uint64_t seed = 0;
    bool timings = false;
};

const std::vector<std::string>& suite_names();

/// Run one suite (cfg.suite must be a valid name).
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg);

/// Run every suite at defaults (cfg.suite ignored); suites execute
/// concurrently but reports are ordered by the canonical suite order.
std::vector<VerificationReport> run_all(const SuiteConfig& cfg);

} // namespace tripleint

#endif
