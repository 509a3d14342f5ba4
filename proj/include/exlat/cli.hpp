#pragma once

// Command-line front end: parameter loading, figure presets and CSV output.

#include "exlat/params.hpp"
#include "exlat/polariton.hpp"
#include "exlat/spectra.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exlat::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Dispersion, Couplings, Polariton, Spectrum, RabiVsN, RabiVsTheta, Figure };

struct ParamOverrides {
    std::optional<int> num_sites;
    std::optional<double> theta_deg;
    std::optional<double> nu_c_hz;
};

struct GridOverrides {
    std::optional<int> points;
    std::optional<double> span_hz;
};

struct RunSpec {
    Command command = Command::Figure;
    std::optional<ModelVariant> variant;
    std::optional<std::string> config_path;
    ParamOverrides overrides;
    std::optional<std::string> out_path;  // unset: CSV to the output stream
    std::string figure;                   // 3a 3b 4a 4b 5 6 7a 7b
    GridOverrides grid;
    bool exact_envelope = false;
};

/// Builds parameters from a JSON object. Missing keys keep their defaults;
/// unknown keys and wrong types raise ConfigError.
SystemParams params_from_json(const nlohmann::json& j, SystemParams base = reference_params());

/// Defaults < JSON file < flag overrides. Validates the result.
SystemParams parse_config(const std::optional<std::string>& path, const ParamOverrides& overrides);

/// Log-spaced integer atom counts in [1, max_sites], duplicates removed.
std::vector<int> log_spaced_sites(int max_sites, int samples);

std::string format_number(double v);

void write_dispersion_csv(std::ostream& os, const SystemParams& p);
void write_couplings_csv(std::ostream& os, const SystemParams& p);
void write_polariton_csv(std::ostream& os, const SystemParams& p, double span_hz, int points,
                         bool energies, bool weights);
void write_spectrum_csv(std::ostream& os, const SpectrumTrace& trace);
void write_rabi_vs_n_csv(std::ostream& os, const SystemParams& p, const std::vector<int>& sites);
void write_rabi_vs_theta_csv(std::ostream& os, const SystemParams& p, int points);
void write_rabi_vs_n_angles_csv(std::ostream& os, const SystemParams& p, const std::vector<int>& sites);

/// Executes `spec`. CSV goes to `out_path` (or `out` if unset); the summary
/// goes to `out` when a file is written, otherwise to `log`.
/// Returns 0 on success, 1 on invalid input, 2 on unwritable output.
int run(const RunSpec& spec, std::ostream& out, std::ostream& log);

/// argv entry point.
int main(int argc, char** argv);

}  // namespace exlat::cli
