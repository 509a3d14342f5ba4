#pragma once

// Linear transmission and reflection of the driven, damped cavity.
//
// The cavity is a symmetric two-port with per-mirror rate gamma and an extra
// side loss Gamma_c; each exciton mode m has detuning nu_m, coupling g_m and
// linewidth Gamma_a. With every rate a FWHM in Hz,
//
//   D(nu) = i(nu_c - nu) + kappa/2 + sum_m g_m^2 / (i(nu_m - nu) + Gamma_a/2),
//   t = gamma / D,  r = 1 - gamma / D,  kappa = 2 gamma + Gamma_c.

#include "exlat/params.hpp"
#include "exlat/polariton.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace exlat {

class NoOutputChannel : public std::domain_error {
public:
    NoOutputChannel() : std::domain_error("total cavity width kappa = 2 gamma + Gamma_c must be > 0") {}
};

struct DampingSet {
    double mirror_rate_hz = 0.0;
    double side_loss_hz = 0.0;
    double atom_linewidth_hz = 0.0;

    double total_cavity_width() const { return 2.0 * mirror_rate_hz + side_loss_hz; }
};

DampingSet damping_from(const SystemParams& p);

struct Oscillator {
    double offset_hz = 0.0;  // relative to DrivenSystem::reference_hz
    double coupling_hz = 0.0;
};

/// Cavity plus exciton oscillators, all frequencies as offsets from a common
/// reference so that MHz detunings survive next to 10^14 Hz carriers.
struct DrivenSystem {
    double reference_hz = 0.0;
    double cavity_offset_hz = 0.0;
    std::vector<Oscillator> modes;
    DampingSet damping;
};

struct Response {
    std::complex<double> t;
    std::complex<double> r;

    double transmission() const { return std::norm(t); }
    double reflection() const { return std::norm(r); }
};

struct Peak {
    double location_hz = 0.0;  // same axis as the input grid
    double height = 0.0;
    double fwhm_hz = 0.0;      // NaN when no half-height crossing exists
};

struct FrequencyGrid {
    double center_hz = 0.0;
    std::vector<double> offsets_hz;  // strictly increasing
};

struct SpectrumTrace {
    double center_hz = 0.0;
    std::vector<double> offsets_hz;
    std::vector<double> transmission;
    std::vector<double> reflection;
    std::vector<Peak> peaks;  // transmission maxima, offsets from center
    std::vector<Peak> dips;   // reflection minima; height holds R at the minimum
};

/// Cavity and exciton frequencies of `variant`, referenced to the midpoint of
/// the cavity and the bright exciton it couples to.
DrivenSystem driven_system(const SystemParams& p, ModelVariant variant, bool include_envelope = false);

/// Evaluates t and r at `offset_hz` from `sys.reference_hz`.
Response transfer_function(const DrivenSystem& sys, double offset_hz);

/// Same at absolute frequency `nu_hz`.
Response transfer_function(double nu_hz, const SystemParams& p, const DampingSet& damping,
                           ModelVariant variant);

/// `points` samples spanning center +/- span, exactly antisymmetric offsets.
FrequencyGrid make_grid(double center_hz, double span_hz, int points);

/// Default: 2001 points over +/- 1.5e8 Hz about the system reference.
FrequencyGrid default_grid(const DrivenSystem& sys);

SpectrumTrace sweep(const DrivenSystem& sys, const FrequencyGrid& grid);

SpectrumTrace sweep(const SystemParams& p, const DampingSet& damping, ModelVariant variant,
                    const FrequencyGrid& grid, bool include_envelope = false);

/// Local maxima (3-point), parabolic vertex refinement, FWHM from linear
/// interpolation of the half-height crossings. Ordered by location.
std::vector<Peak> peak_find(std::span<const double> x, std::span<const double> y);

/// Local minima of `y`, with widths measured on 1 - y.
std::vector<Peak> dip_find(std::span<const double> x, std::span<const double> y);

}  // namespace exlat
