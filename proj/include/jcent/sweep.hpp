#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jcent/dynamics.hpp"

namespace jcent {

struct SweepConfig {
    Scenario scenario = Scenario::FieldMixture;
    Complex alpha{4.0, 0.0};
    Complex beta{-4.0, 0.0};
    double weight = 0.5;        // C
    double t_max = 25.0;        // lambda*t units
    std::size_t steps = 1000;   // grid intervals; steps+1 samples inclusive
    std::size_t dim = 0;        // 0 = auto
    bool oracle = false;
    std::string output = "sweep.csv";
};

// Extra columns produced by the brute-force cross-check.
struct OracleColumns {
    double joint_entropy = 0.0;      // S_AB
    double al_lower_margin = 0.0;    // S_AB - |S_A - S_F|
    double al_upper_margin = 0.0;    // S_A + S_F - S_AB
    double field_entropy_delta = 0.0; // |S_F(method) - S_F(oracle)|
};

struct TimeSeriesRecord {
    double t = 0.0;
    double field_entropy = 0.0; // S_F via the Gram spectrum
    double atom_entropy = 0.0;  // S_A via the 2x2 closed form
    double field_purity = 0.0;  // xi_F
    double inversion = 0.0;
    std::array<double, 4> gram_eigenvalues{}; // descending
    std::optional<OracleColumns> oracle;
};

// Parse command-line flags, with `--config FILE` supplying `key = value`
// defaults that explicit flags override. Throws UsageError (bad flag or
// value, message names the flag) or ConfigParseError (message carries the
// line number).
SweepConfig parse_config(const std::vector<std::string>& args);

// Evaluate the time series on the inclusive grid t_i = t_max * i / steps.
// Every record is computed from scratch at its own t; there is no
// integrator state, so refining the grid never changes shared points.
std::vector<TimeSeriesRecord> run_sweep(const SweepConfig& cfg);

// Header plus one row per record, 15 significant digits, byte-deterministic
// for identical inputs. Oracle columns are emitted iff the records carry
// them; an empty record list yields the header-only base layout.
void write_csv(const std::vector<TimeSeriesRecord>& records, const std::string& path);
void write_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out);

// Full CLI entry: parse, sweep, write. Returns the process exit code:
// 0 success, 2 usage/config error, 3 numerical error, 1 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace jcent
