#include "exlat/params.hpp"

#include "exlat/constants.hpp"

#include <cmath>
#include <sstream>

namespace exlat {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << "must be finite and > 0, got " << value;
        throw InvalidParameter(name, os.str());
    }
}

void require_non_negative(double value, const char* name) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << "must be finite and >= 0, got " << value;
        throw InvalidParameter(name, os.str());
    }
}

}  // namespace

SystemParams reference_params() { return SystemParams{}; }

void check(const SystemParams& p) {
    require_positive(p.lattice_constant_m, "lattice_constant_m");
    if (p.num_sites < 1) {
        throw InvalidParameter("num_sites", "must be >= 1, got " + std::to_string(p.num_sites));
    }
    require_positive(p.beam_waist_m, "beam_waist_m");
    require_positive(p.mirror_distance_m, "mirror_distance_m");
    require_positive(p.dipole_Cm, "dipole_Cm");
    require_positive(p.atom_frequency_hz, "atom_frequency_hz");
    if (p.cavity_frequency_hz) require_positive(*p.cavity_frequency_hz, "cavity_frequency_hz");
    if (!std::isfinite(p.theta_rad)) throw InvalidParameter("theta_rad", "must be finite");
    require_non_negative(p.mirror_rate_hz, "gamma_mirror_hz");
    require_non_negative(p.cavity_side_loss_hz, "gamma_cavity_hz");
    require_non_negative(p.atom_linewidth_hz, "gamma_atom_hz");
    if (p.mode_volume_override_m3) require_positive(*p.mode_volume_override_m3, "mode_volume_m3");
}

std::vector<std::string> validate(const SystemParams& p) {
    check(p);
    std::vector<std::string> warnings;
    const double length = chain_length(p);
    if (length > p.beam_waist_m) {
        std::ostringstream os;
        os << "chain length " << length << " m exceeds beam waist " << p.beam_waist_m
           << " m; flat-envelope couplings are inaccurate";
        warnings.push_back(os.str());
    }
    return warnings;
}

double mode_volume(const SystemParams& p) {
    if (p.mode_volume_override_m3) return *p.mode_volume_override_m3;
    return kPi * p.beam_waist_m * p.beam_waist_m * p.mirror_distance_m / 4.0;
}

double transfer_parameter(const SystemParams& p) {
    const double c = std::cos(p.theta_rad);
    const double a3 = p.lattice_constant_m * p.lattice_constant_m * p.lattice_constant_m;
    return p.dipole_Cm * p.dipole_Cm * (1.0 - 3.0 * c * c) /
           (4.0 * kPi * kVacuumPermittivity * a3 * kPlanck);
}

double chain_length(const SystemParams& p) {
    return (p.num_sites + 1) * p.lattice_constant_m;
}

std::vector<double> site_positions(const SystemParams& p) {
    // Integer offsets from the center keep r_n = -r_{N+1-n} exact.
    std::vector<double> r(static_cast<std::size_t>(p.num_sites));
    const int twice_center = p.num_sites + 1;
    for (int n = 1; n <= p.num_sites; ++n) {
        r[static_cast<std::size_t>(n - 1)] = 0.5 * (2 * n - twice_center) * p.lattice_constant_m;
    }
    return r;
}

DerivedParams derive(const SystemParams& p) {
    return DerivedParams{mode_volume(p), transfer_parameter(p), chain_length(p), site_positions(p)};
}

double cavity_offset_hz(const SystemParams& p) {
    if (p.cavity_frequency_hz) return *p.cavity_frequency_hz - p.atom_frequency_hz;
    return 2.0 * transfer_parameter(p) * std::cos(kPi / (p.num_sites + 1));
}

double cavity_frequency(const SystemParams& p) {
    if (p.cavity_frequency_hz) return *p.cavity_frequency_hz;
    return p.atom_frequency_hz + cavity_offset_hz(p);
}

}  // namespace exlat
