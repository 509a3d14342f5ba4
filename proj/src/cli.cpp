#include "exlat/cli.hpp"

#include "exlat/constants.hpp"
#include "exlat/exciton.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace exlat::cli {

namespace {

const std::set<std::string> kFigures{"3a", "3b", "4a", "4b", "5", "6", "7a", "7b"};

constexpr int kRabiSweepSamples = 61;
constexpr int kThetaSweepPoints = 181;
constexpr int kPolaritonPoints = 301;
constexpr double kPolaritonSpanHz = 1.5e8;

double read_number(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

SystemParams params_from_json(const nlohmann::json& j, SystemParams p) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "lattice_constant_m") {
            p.lattice_constant_m = read_number(j, key);
        } else if (key == "num_sites") {
            if (!value.is_number_integer()) throw ConfigError("config key 'num_sites' must be an integer");
            p.num_sites = value.get<int>();
        } else if (key == "beam_waist_m") {
            p.beam_waist_m = read_number(j, key);
        } else if (key == "mirror_distance_m") {
            p.mirror_distance_m = read_number(j, key);
        } else if (key == "dipole_Cm") {
            p.dipole_Cm = read_number(j, key);
        } else if (key == "atom_frequency_hz") {
            p.atom_frequency_hz = read_number(j, key);
        } else if (key == "cavity_frequency_hz") {
            p.cavity_frequency_hz = read_number(j, key);
        } else if (key == "theta_rad") {
            p.theta_rad = read_number(j, key);
        } else if (key == "gamma_mirror_hz") {
            p.mirror_rate_hz = read_number(j, key);
        } else if (key == "gamma_cavity_hz") {
            p.cavity_side_loss_hz = read_number(j, key);
        } else if (key == "gamma_atom_hz") {
            p.atom_linewidth_hz = read_number(j, key);
        } else if (key == "mode_volume_m3") {
            p.mode_volume_override_m3 = read_number(j, key);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return p;
}

SystemParams parse_config(const std::optional<std::string>& path, const ParamOverrides& overrides) {
    SystemParams p = reference_params();
    if (path) {
        std::ifstream in(*path);
        if (!in) throw ConfigError("cannot read config file '" + *path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError("malformed JSON in '" + *path + "': " + e.what());
        }
        p = params_from_json(j, p);
    }
    if (overrides.num_sites) p.num_sites = *overrides.num_sites;
    if (overrides.theta_deg) p.theta_rad = *overrides.theta_deg * kPi / 180.0;
    if (overrides.nu_c_hz) p.cavity_frequency_hz = *overrides.nu_c_hz;
    check(p);
    return p;
}

std::vector<int> log_spaced_sites(int max_sites, int samples) {
    std::vector<int> out;
    if (max_sites < 1 || samples < 1) return out;
    const double top = std::log10(static_cast<double>(max_sites));
    for (int i = 0; i < samples; ++i) {
        const double e = samples == 1 ? top : top * i / (samples - 1);
        const int n = static_cast<int>(std::lround(std::pow(10.0, e)));
        if (out.empty() || n > out.back()) out.push_back(n);
    }
    if (out.back() != max_sites) out.push_back(max_sites);
    return out;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

void write_dispersion_csv(std::ostream& os, const SystemParams& p) {
    check(p);
    os << "k,energy_hz,energy_shift_hz\n";
    for (int k = 1; k <= p.num_sites; ++k) {
        const double shift = exciton_shift_hz(p, k);
        os << k << ',' << format_number(p.atom_frequency_hz + shift) << ',' << format_number(shift) << '\n';
    }
}

void write_couplings_csv(std::ostream& os, const SystemParams& p) {
    os << "k,energy_shift_hz,coupling_hz,coupling_sq_hz2,class,oscillator_fraction\n";
    for (const auto& m : mode_couplings(p)) {
        os << m.k << ',' << format_number(m.shift_hz) << ',' << format_number(m.coupling_hz) << ','
           << format_number(m.coupling_hz * m.coupling_hz) << ',' << to_string(m.mode_class) << ','
           << format_number(m.oscillator_fraction) << '\n';
    }
}

void write_polariton_csv(std::ostream& os, const SystemParams& p, double span_hz, int points,
                         bool energies, bool weights) {
    const double g = superradiant_coupling(p);
    const auto grid = make_grid(0.0, span_hz, points);
    os << "delta_hz";
    if (energies) os << ",upper_shift_hz,lower_shift_hz";
    if (weights) os << ",X2_plus,X2_minus,Y2_plus,Y2_minus";
    os << '\n';
    for (double delta : grid.offsets_hz) {
        // Exciton at the origin, cavity at 2 delta.
        const auto d = two_mode_doublet(2.0 * delta, 0.0, g);
        os << format_number(d.delta_hz);
        if (energies) os << ',' << format_number(d.upper_hz) << ',' << format_number(d.lower_hz);
        if (weights) {
            os << ',' << format_number(d.X_plus * d.X_plus) << ',' << format_number(d.X_minus * d.X_minus)
               << ',' << format_number(d.Y_plus * d.Y_plus) << ',' << format_number(d.Y_minus * d.Y_minus);
        }
        os << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const SpectrumTrace& trace) {
    os << "# peak,location_hz,height,fwhm_hz\n";
    for (const auto& pk : trace.peaks) {
        os << "# peak," << format_number(trace.center_hz + pk.location_hz) << ',' << format_number(pk.height)
           << ',' << format_number(pk.fwhm_hz) << '\n';
    }
    os << "# dip,location_hz,reflection,fwhm_hz\n";
    for (const auto& dp : trace.dips) {
        os << "# dip," << format_number(trace.center_hz + dp.location_hz) << ',' << format_number(dp.height)
           << ',' << format_number(dp.fwhm_hz) << '\n';
    }
    os << "nu_hz,nu_shift_hz,transmission,reflection\n";
    for (std::size_t i = 0; i < trace.offsets_hz.size(); ++i) {
        os << format_number(trace.center_hz + trace.offsets_hz[i]) << ',' << format_number(trace.offsets_hz[i])
           << ',' << format_number(trace.transmission[i]) << ',' << format_number(trace.reflection[i]) << '\n';
    }
}

void write_rabi_vs_n_csv(std::ostream& os, const SystemParams& p, const std::vector<int>& sites) {
    const auto inter = vacuum_rabi_vs_N(p, sites, ModelVariant::TwoModeSuperradiant);
    const auto indep = vacuum_rabi_vs_N(p, sites, ModelVariant::NonInteractingCollective);
    os << "N,omega0_int_hz,omega0_nonint_hz\n";
    for (std::size_t i = 0; i < sites.size(); ++i) {
        os << sites[i] << ',' << format_number(inter[i].omega_hz) << ',' << format_number(indep[i].omega_hz) << '\n';
    }
}

void write_rabi_vs_theta_csv(std::ostream& os, const SystemParams& p, int points) {
    if (points < 2) throw std::invalid_argument("theta sweep needs at least 2 points");
    os << "theta_rad,omega_int_hz,omega_nonint_hz\n";
    const double nonint = generalized_rabi(p, 0.0, p.num_sites, ModelVariant::NonInteractingCollective);
    for (int i = 0; i < points; ++i) {
        const double theta = 0.5 * kPi * i / (points - 1);
        os << format_number(theta) << ','
           << format_number(generalized_rabi(p, theta, p.num_sites, ModelVariant::TwoModeSuperradiant)) << ','
           << format_number(nonint) << '\n';
    }
}

void write_rabi_vs_n_angles_csv(std::ostream& os, const SystemParams& p, const std::vector<int>& sites) {
    os << "N,omega_int_0deg_hz,omega_int_54p74deg_hz,omega_int_90deg_hz,omega_nonint_hz\n";
    for (int n : sites) {
        os << n;
        for (double theta : {0.0, kMagicAngleRad, 0.5 * kPi}) {
            os << ',' << format_number(generalized_rabi(p, theta, n, ModelVariant::TwoModeSuperradiant));
        }
        os << ',' << format_number(generalized_rabi(p, 0.0, n, ModelVariant::NonInteractingCollective)) << '\n';
    }
}

namespace {

void print_summary(std::ostream& os, const SystemParams& p, const std::vector<std::string>& warnings,
                   const SpectrumTrace* trace) {
    SystemParams resonant = p;
    resonant.cavity_frequency_hz.reset();
    SystemParams bare = p;
    bare.cavity_frequency_hz = p.atom_frequency_hz;
    const double f1 = superradiant_coupling(resonant);
    const double fbar = collective_coupling_noninteracting(bare);
    os << "N                  = " << p.num_sites << '\n'
       << "theta [rad]        = " << format_number(p.theta_rad) << '\n'
       << "mode volume [m^3]  = " << format_number(mode_volume(p)) << '\n'
       << "J_theta/h [Hz]     = " << format_number(transfer_parameter(p)) << '\n'
       << "E_1/h - nu_a [Hz]  = " << format_number(exciton_shift_hz(p, 1)) << '\n'
       << "nu_c [Hz]          = " << format_number(cavity_frequency(p)) << '\n'
       << "|f_1|/h [Hz]       = " << format_number(f1) << '\n'
       << "|f_bar|/h [Hz]     = " << format_number(fbar) << '\n'
       << "Omega_0 int [Hz]   = " << format_number(2.0 * f1) << '\n'
       << "Omega_0 nonint [Hz]= " << format_number(2.0 * fbar) << '\n';
    if (trace) {
        for (const auto& pk : trace->peaks) {
            os << "T peak: offset " << format_number(pk.location_hz) << " Hz, height " << format_number(pk.height)
               << ", FWHM " << format_number(pk.fwhm_hz) << " Hz\n";
        }
        for (const auto& dp : trace->dips) {
            os << "R dip:  offset " << format_number(dp.location_hz) << " Hz, R " << format_number(dp.height)
               << ", FWHM " << format_number(dp.fwhm_hz) << " Hz\n";
        }
    }
    for (const auto& w : warnings) os << "warning: " << w << '\n';
}

FrequencyGrid grid_for(const DrivenSystem& sys, const GridOverrides& g) {
    return make_grid(sys.reference_hz, g.span_hz.value_or(1.5e8), g.points.value_or(2001));
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& log) {
    std::ostream& summary = spec.out_path ? out : log;
    try {
        SystemParams p = parse_config(spec.config_path, spec.overrides);
        std::ostringstream csv;
        std::optional<SpectrumTrace> trace;

        Command command = spec.command;
        std::string figure = spec.figure;
        if (command == Command::Figure) {
            if (!kFigures.count(figure)) throw ConfigError("unknown figure '" + figure + "'");
            if (spec.overrides.nu_c_hz) {
                throw ConfigError("figure presets fix the cavity resonance; drop --nu-c-hz");
            }
            if (spec.variant && figure != "5") throw ConfigError("--model applies only to figure 5");
            p.cavity_frequency_hz.reset();
        } else if (!figure.empty()) {
            throw ConfigError("a figure id is only valid with the 'figure' command");
        }

        const auto variant = spec.variant.value_or(ModelVariant::TwoModeSuperradiant);
        const double span = spec.grid.span_hz.value_or(kPolaritonSpanHz);
        const int points = spec.grid.points.value_or(kPolaritonPoints);

        auto spectrum = [&] {
            const auto sys = driven_system(p, variant, spec.exact_envelope);
            trace = sweep(sys, grid_for(sys, spec.grid));
            write_spectrum_csv(csv, *trace);
        };

        if (command == Command::Dispersion || figure == "3a") {
            write_dispersion_csv(csv, p);
        } else if (command == Command::Couplings || figure == "3b") {
            write_couplings_csv(csv, p);
        } else if (command == Command::Polariton) {
            if (variant != ModelVariant::TwoModeSuperradiant) {
                throw ConfigError("polariton sweep uses the two-mode model");
            }
            write_polariton_csv(csv, p, span, points, true, true);
        } else if (figure == "4a" || figure == "4b") {
            write_polariton_csv(csv, p, span, points, figure == "4a", figure == "4b");
        } else if (command == Command::Spectrum || figure == "5") {
            spectrum();
        } else if (command == Command::RabiVsN || figure == "6") {
            write_rabi_vs_n_csv(csv, p, log_spaced_sites(p.num_sites, kRabiSweepSamples));
        } else if (command == Command::RabiVsTheta || figure == "7a") {
            write_rabi_vs_theta_csv(csv, p, spec.grid.points.value_or(kThetaSweepPoints));
        } else if (figure == "7b") {
            write_rabi_vs_n_angles_csv(csv, p, log_spaced_sites(p.num_sites, kRabiSweepSamples));
        }

        const auto warnings = validate(p);
        if (spec.out_path) {
            std::ofstream file(*spec.out_path, std::ios::binary);
            if (!file) throw OutputError("cannot open output file '" + *spec.out_path + "'");
            file << csv.str();
            file.flush();
            if (!file) throw OutputError("failed writing output file '" + *spec.out_path + "'");
        } else {
            out << csv.str();
        }
        print_summary(summary, p, warnings, trace ? &*trace : nullptr);
        return 0;
    } catch (const OutputError& e) {
        log << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, char** argv) {
    CLI::App app{"Collective excitons of an atomic chain in a single-mode cavity"};
    app.set_version_flag("--version", "exlat 0.1.0");

    const std::map<std::string, Command> commands{
        {"dispersion", Command::Dispersion}, {"couplings", Command::Couplings},
        {"polariton", Command::Polariton},   {"spectrum", Command::Spectrum},
        {"rabi-vs-n", Command::RabiVsN},     {"rabi-vs-theta", Command::RabiVsTheta},
        {"figure", Command::Figure}};

    std::string command_name;
    std::string figure_positional;
    std::string figure_flag;
    std::string model_name;
    std::string envelope = "flat";
    RunSpec spec;
    std::string config_path, out_path;

    app.add_option("command", command_name, "dispersion | couplings | polariton | spectrum | rabi-vs-n | "
                                            "rabi-vs-theta | figure")
        ->required()
        ->check(CLI::IsMember(commands));
    app.add_option("id", figure_positional, "figure id for the 'figure' command (3a 3b 4a 4b 5 6 7a 7b)");
    app.add_option("--figure", figure_flag, "figure id (alternative to the positional id)");
    app.add_option("--config", config_path, "JSON parameter file");
    app.add_option("--out", out_path, "CSV output path (default: standard output)");
    app.add_option("--model", model_name, "two-mode | multimode | noninteracting")
        ->check(CLI::IsMember({"two-mode", "multimode", "noninteracting"}));
    app.add_option("--num-sites", spec.overrides.num_sites, "number of lattice sites N");
    app.add_option("--theta-deg", spec.overrides.theta_deg, "dipole angle to the lattice axis [deg]");
    app.add_option("--nu-c-hz", spec.overrides.nu_c_hz, "cavity frequency [Hz]");
    app.add_option("--grid-points", spec.grid.points, "number of sweep points");
    app.add_option("--grid-span-hz", spec.grid.span_hz, "sweep half-span [Hz]");
    app.add_option("--envelope", envelope, "exact | flat (multimode only)")
        ->check(CLI::IsMember({"exact", "flat"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    spec.command = commands.at(command_name);
    if (!figure_positional.empty() && !figure_flag.empty() && figure_positional != figure_flag) {
        std::cerr << "error: conflicting figure ids '" << figure_positional << "' and '" << figure_flag << "'\n";
        return 1;
    }
    spec.figure = !figure_flag.empty() ? figure_flag : figure_positional;
    if (!config_path.empty()) spec.config_path = config_path;
    if (!out_path.empty()) spec.out_path = out_path;
    if (!model_name.empty()) spec.variant = parse_model_variant(model_name);
    spec.exact_envelope = envelope == "exact";
    return run(spec, std::cout, std::cerr);
}

}  // namespace exlat::cli
