#include "jcent/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jcent/errors.hpp"
#include "jcent/oracle.hpp"
#include "jcent/virtual_atom.hpp"

namespace jcent {

namespace {

const char* kUsage =
    "usage: jcent [--config FILE] [--scenario field-mixture|atom-mixture]\n"
    "             [--alpha RE,IM] [--beta RE,IM] [--c C] [--tmax T]\n"
    "             [--steps N] [--dim D] [--oracle] [--output FILE]\n"
    "\n"
    "Sweeps the two-level atom / quantized field entropies over lambda*t in\n"
    "[0, tmax] and writes one CSV row per grid point. --oracle adds the\n"
    "brute-force density-matrix cross-check columns. --dim 0 picks the\n"
    "truncation automatically from the coherent amplitudes.\n";

double parse_real(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected a number, got '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value))
        throw UsageError(what + ": expected a finite number, got '" + text + "'");
    return value;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an integer, got '" + text + "'");
    }
    if (used != text.size() || value < 0)
        throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
    return static_cast<std::size_t>(value);
}

Complex parse_complex(const std::string& text, const std::string& what) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError(what + ": expected 're,im', got '" + text + "'");
    const double re = parse_real(text.substr(0, comma), what);
    const double im = parse_real(text.substr(comma + 1), what);
    return {re, im};
}

Scenario parse_scenario(const std::string& text, const std::string& what) {
    if (text == "field-mixture") return Scenario::FieldMixture;
    if (text == "atom-mixture") return Scenario::AtomMixture;
    throw UsageError(what + ": expected 'field-mixture' or 'atom-mixture', got '" +
                     text + "'");
}

bool parse_bool(const std::string& text, const std::string& what) {
    if (text == "true" || text == "on" || text == "1") return true;
    if (text == "false" || text == "off" || text == "0") return false;
    throw UsageError(what + ": expected true/false, got '" + text + "'");
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Assign one key=value onto the config; `where` prefixes error messages.
void apply_value(SweepConfig& cfg, const std::string& key, const std::string& value,
                 const std::string& where) {
    if (key == "scenario") {
        cfg.scenario = parse_scenario(value, where);
    } else if (key == "alpha") {
        cfg.alpha = parse_complex(value, where);
    } else if (key == "beta") {
        cfg.beta = parse_complex(value, where);
    } else if (key == "c") {
        cfg.weight = parse_real(value, where);
    } else if (key == "tmax") {
        cfg.t_max = parse_real(value, where);
    } else if (key == "steps") {
        cfg.steps = parse_count(value, where);
    } else if (key == "dim") {
        cfg.dim = parse_count(value, where);
    } else if (key == "oracle") {
        cfg.oracle = parse_bool(value, where);
    } else if (key == "output") {
        cfg.output = value;
    } else {
        throw UsageError(where + ": unknown key");
    }
}

void load_config_file(SweepConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(path + ": cannot open config file");

    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        std::ostringstream where;
        where << path << ":" << lineno;
        if (eq == std::string::npos)
            throw ConfigParseError(where.str() + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigParseError(where.str() + ": expected 'key = value'");
        try {
            apply_value(cfg, key, value, where.str() + ": " + key);
        } catch (const UsageError& e) {
            throw ConfigParseError(e.what());
        }
    }
}

void validate(const SweepConfig& cfg) {
    if (!(cfg.weight >= 0.0 && cfg.weight <= 1.0))
        throw UsageError("--c: value out of [0,1]");
    if (!(cfg.t_max > 0.0)) throw UsageError("--tmax: value must be positive");
    if (cfg.steps < 2) throw UsageError("--steps: value must be at least 2");
}

ScenarioSpec to_spec(const SweepConfig& cfg) {
    ScenarioSpec spec;
    spec.scenario = cfg.scenario;
    spec.alpha = cfg.alpha;
    spec.beta = cfg.beta;
    spec.weight = cfg.weight;
    spec.dim = cfg.dim;
    return spec;
}

void format_field(std::string& row, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    row += buf;
}

} // namespace

SweepConfig parse_config(const std::vector<std::string>& args) {
    SweepConfig cfg;

    // config file first so that explicit flags override it
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--config") continue;
        if (i + 1 >= args.size()) throw UsageError("--config: missing file path");
        load_config_file(cfg, args[i + 1]);
        ++i;
    }

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& flag = args[i];
        if (flag == "--config") {
            ++i; // already consumed
            continue;
        }
        if (flag == "--oracle") {
            cfg.oracle = true;
            continue;
        }
        if (flag == "--scenario" || flag == "--alpha" || flag == "--beta" ||
            flag == "--c" || flag == "--tmax" || flag == "--steps" ||
            flag == "--dim" || flag == "--output") {
            if (i + 1 >= args.size()) throw UsageError(flag + ": missing value");
            apply_value(cfg, flag.substr(2), args[i + 1], flag);
            ++i;
            continue;
        }
        throw UsageError(flag + ": unknown flag");
    }

    validate(cfg);
    return cfg;
}

std::vector<TimeSeriesRecord> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const ScenarioSpec spec = resolve(to_spec(cfg));

    oracle::JointHamiltonian hamiltonian;
    oracle::DensityMatrix rho0;
    if (cfg.oracle) {
        hamiltonian = oracle::build_hamiltonian(spec.dim);
        rho0 = oracle::build_initial_density(spec);
    }

    std::vector<TimeSeriesRecord> records;
    records.reserve(cfg.steps + 1);

    for (std::size_t i = 0; i <= cfg.steps; ++i) {
        const double t =
            cfg.t_max * (static_cast<double>(i) / static_cast<double>(cfg.steps));

        const ComponentSet cs = evolve(spec, t);
        const GramMatrix p = gram_matrix(cs);
        const SpectrumResult spectrum = hermitian_eigenvalues(p);
        const AtomicState atom = atomic_state(cs);

        TimeSeriesRecord rec;
        rec.t = t;
        rec.field_entropy = entropy_from_spectrum(spectrum);
        rec.atom_entropy = atomic_entropy(atom);
        rec.field_purity = purity(p);
        rec.inversion = atomic_inversion(cs);
        for (std::size_t k = 0; k < rec.gram_eigenvalues.size(); ++k)
            rec.gram_eigenvalues[k] =
                k < spectrum.eigenvalues.size() ? spectrum.eigenvalues[k] : 0.0;

        if (cfg.oracle) {
            const oracle::DensityMatrix rho_t =
                oracle::evolve_density(rho0, hamiltonian, t);
            const double s_joint = oracle::vn_entropy(rho_t);
            const double s_field_oracle =
                oracle::vn_entropy(oracle::partial_trace_atom(rho_t));
            const oracle::ArakiLiebReport al = oracle::check_araki_lieb(
                rec.atom_entropy, rec.field_entropy, s_joint);

            OracleColumns oc;
            oc.joint_entropy = s_joint;
            oc.al_lower_margin = al.lower_margin;
            oc.al_upper_margin = al.upper_margin;
            oc.field_entropy_delta = std::abs(rec.field_entropy - s_field_oracle);
            rec.oracle = oc;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out) {
    const bool with_oracle = !records.empty() && records.front().oracle.has_value();

    std::string row = "t,S_F,S_A,xi_F,inversion,lambda_1,lambda_2,lambda_3,lambda_4";
    if (with_oracle) row += ",S_AB,al_lower_margin,al_upper_margin,oracle_S_F_delta";
    row += '\n';
    out << row;

    for (const TimeSeriesRecord& rec : records) {
        row.clear();
        format_field(row, rec.t);
        for (double v : {rec.field_entropy, rec.atom_entropy, rec.field_purity,
                         rec.inversion}) {
            row += ',';
            format_field(row, v);
        }
        for (double lam : rec.gram_eigenvalues) {
            row += ',';
            format_field(row, lam);
        }
        if (with_oracle) {
            const OracleColumns& oc = *rec.oracle;
            for (double v : {oc.joint_entropy, oc.al_lower_margin, oc.al_upper_margin,
                             oc.field_entropy_delta}) {
                row += ',';
                format_field(row, v);
            }
        }
        row += '\n';
        out << row;
    }
}

void write_csv(const std::vector<TimeSeriesRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    write_csv(records, out);
    out.flush();
    if (!out) throw IoError(path + ": write failed");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    for (const std::string& a : args) {
        if (a == "--help" || a == "-h") {
            out << kUsage;
            return 0;
        }
    }
    try {
        const SweepConfig cfg = parse_config(args);
        const std::vector<TimeSeriesRecord> records = run_sweep(cfg);
        write_csv(records, cfg.output);
        out << "wrote " << records.size() << " records to " << cfg.output << "\n";
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const ConfigParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TailMassError& e) {
        err << "error: " << e.what() << "\n"
            << "hint: raise --dim (or leave it at 0 for automatic selection)\n";
        return 3;
    } catch (const NegativeEigenvalueError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonHermitianError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NormalizationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace jcent
