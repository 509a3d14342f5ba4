#pragma once

// Physical inputs of a finite atomic chain inside a single-mode cavity.
//
// All energies are carried as ordinary frequencies (E/h, in Hz). Lengths are
// in meters, the transition dipole in C m, angles in radians.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exlat {

class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string name, const std::string& what)
        : std::invalid_argument("invalid parameter '" + name + "': " + what),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct SystemParams {
    double lattice_constant_m = 1e-7;
    int num_sites = 1000;
    double beam_waist_m = 3e-4;
    double mirror_distance_m = 1.5e-3;
    double dipole_Cm = 5e-29;
    double atom_frequency_hz = 4e14;
    // Unset means resonant with the nodeless (k = 1) exciton.
    std::optional<double> cavity_frequency_hz;
    double theta_rad = 0.0;
    double mirror_rate_hz = 1e7;     // per mirror, FWHM
    double cavity_side_loss_hz = 1e7;  // FWHM
    double atom_linewidth_hz = 1e7;    // FWHM
    // Replaces pi w0^2 L / 4 when set.
    std::optional<double> mode_volume_override_m3;
};

struct DerivedParams {
    double mode_volume_m3 = 0.0;
    double transfer_hz = 0.0;
    double chain_length_m = 0.0;
    std::vector<double> site_positions_m;
};

/// Default parameter set: Rb-like transition in a millimeter cavity, N = 1000.
SystemParams reference_params();

/// Throws InvalidParameter naming the first offending field.
void check(const SystemParams& p);

/// Checks `p` and returns non-fatal warnings (empty when the flat-envelope
/// approximation holds).
std::vector<std::string> validate(const SystemParams& p);

double mode_volume(const SystemParams& p);

/// Nearest-neighbour dipole-dipole transfer J_theta / h, signed.
double transfer_parameter(const SystemParams& p);

double chain_length(const SystemParams& p);

/// r_n = n a - (N+1) a / 2 for n = 1..N.
std::vector<double> site_positions(const SystemParams& p);

DerivedParams derive(const SystemParams& p);

/// nu_c - nu_a, computed without cancellation when the cavity is left at its
/// default resonance.
double cavity_offset_hz(const SystemParams& p);

double cavity_frequency(const SystemParams& p);

}  // namespace exlat
