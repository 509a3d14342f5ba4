#pragma once

// Exciton-photon mixing: the two-mode superradiant doublet, the full
// multimode (all excitons + photon) problem, and independent atoms.

#include "exlat/params.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace exlat {

enum class ModelVariant { TwoModeSuperradiant, FullMultimode, NonInteractingCollective };

std::string_view to_string(ModelVariant v);
/// Accepts "two-mode", "multimode", "noninteracting".
std::optional<ModelVariant> parse_model_variant(std::string_view name);

struct PolaritonDoublet {
    double delta_hz = 0.0;  // (E_c - E_ex) / 2h
    double Delta_hz = 0.0;  // sqrt(delta^2 + |f|^2) / h
    double upper_hz = 0.0;
    double lower_hz = 0.0;
    double X_plus = 0.0;
    double X_minus = 0.0;
    double Y_plus = 0.0;
    double Y_minus = 0.0;

    double splitting_hz() const { return upper_hz - lower_hz; }
};

struct RabiPoint {
    int num_sites = 0;
    double omega_hz = 0.0;
};

struct MultimodeResult {
    double reference_hz = 0.0;           // atom frequency; offsets are relative to it
    Eigen::VectorXd eigen_offsets_hz;    // ascending, N+1 values
    Eigen::VectorXd eigenfrequencies_hz; // reference_hz + offsets
    // Row i is eigenvector i. Column 0 is the photon, column k the exciton k.
    Eigen::MatrixXd amplitudes;
    Eigen::VectorXd photon_weight;

    Eigen::MatrixXd weights() const { return amplitudes.array().square().matrix(); }
};

struct TruncationReport {
    PolaritonDoublet two_mode;
    double multimode_lower_hz = 0.0;  // offsets from the atom frequency
    double multimode_upper_hz = 0.0;
    double two_mode_lower_hz = 0.0;
    double two_mode_upper_hz = 0.0;
    double splitting_deviation = 0.0;  // relative, multimode vs two-mode
};

/// |f_1| / h, the nodeless exciton's coupling.
double superradiant_coupling(const SystemParams& p);

/// |f_bar| / h = sqrt(N) x single-atom coupling, ignoring dipole-dipole transfer.
double collective_coupling_noninteracting(const SystemParams& p);

/// Exact diagonalization of [[E_ex, g], [g, E_c]]. Frequencies may be
/// absolute or relative to any common reference.
PolaritonDoublet two_mode_doublet(double cavity_hz, double exciton_hz, double coupling_hz);

/// Omega_0 = 2 |f| / h at resonance for each N. The cavity tracks E_1(N) for
/// the superradiant model and nu_a for independent atoms.
std::vector<RabiPoint> vacuum_rabi_vs_N(const SystemParams& p, std::span<const int> num_sites,
                                        ModelVariant variant);

/// Omega = 2 Delta / h with the cavity at the bare atomic frequency.
double generalized_rabi(const SystemParams& p, double theta_rad, int num_sites,
                        ModelVariant variant);

/// Signed f_k / h including the Gaussian envelope exp(-r_n^2 / w0^2).
std::vector<double> envelope_mode_couplings(const SystemParams& p);

/// Full (N+1)-dimensional problem in the exciton-mode basis (arrowhead form).
MultimodeResult multimode_diagonalize(const SystemParams& p, bool include_envelope = false);

/// Compares the two eigenstates with the largest photon weight against the
/// two-mode doublet.
TruncationReport truncation_report(const SystemParams& p, bool include_envelope = false);

}  // namespace exlat
