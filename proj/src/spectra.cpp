#include "exlat/spectra.hpp"

#include "exlat/exciton.hpp"

#include <cmath>
#include <limits>

namespace exlat {

DampingSet damping_from(const SystemParams& p) {
    return DampingSet{p.mirror_rate_hz, p.cavity_side_loss_hz, p.atom_linewidth_hz};
}

DrivenSystem driven_system(const SystemParams& p, ModelVariant variant, bool include_envelope) {
    check(p);
    // Offsets relative to the atomic line first, re-referenced at the end.
    const double cavity = cavity_offset_hz(p);
    std::vector<Oscillator> modes;
    double exciton = 0.0;
    switch (variant) {
        case ModelVariant::TwoModeSuperradiant:
            exciton = exciton_shift_hz(p, 1);
            modes.push_back({exciton, superradiant_coupling(p)});
            break;
        case ModelVariant::FullMultimode: {
            exciton = exciton_shift_hz(p, 1);
            const auto env = include_envelope ? envelope_mode_couplings(p) : std::vector<double>{};
            for (int k = 1; k <= p.num_sites; ++k) {
                const double g = include_envelope ? env[static_cast<std::size_t>(k - 1)] : mode_coupling_hz(p, k);
                modes.push_back({exciton_shift_hz(p, k), g});
            }
            break;
        }
        case ModelVariant::NonInteractingCollective:
            exciton = 0.0;
            modes.push_back({0.0, collective_coupling_noninteracting(p)});
            break;
    }
    const double mid = 0.5 * (cavity + exciton);
    DrivenSystem sys;
    sys.reference_hz = p.atom_frequency_hz + mid;
    sys.cavity_offset_hz = cavity - mid;
    for (auto& m : modes) m.offset_hz -= mid;
    sys.modes = std::move(modes);
    sys.damping = damping_from(p);
    return sys;
}

Response transfer_function(const DrivenSystem& sys, double offset_hz) {
    const double kappa = sys.damping.total_cavity_width();
    if (!(kappa > 0.0)) throw NoOutputChannel();
    using cplx = std::complex<double>;
    const double half_atom = 0.5 * sys.damping.atom_linewidth_hz;
    cplx d{0.5 * kappa, sys.cavity_offset_hz - offset_hz};
    for (const auto& m : sys.modes) {
        d += m.coupling_hz * m.coupling_hz / cplx{half_atom, m.offset_hz - offset_hz};
    }
    const cplx t = sys.damping.mirror_rate_hz / d;
    return Response{t, 1.0 - t};
}

Response transfer_function(double nu_hz, const SystemParams& p, const DampingSet& damping,
                           ModelVariant variant) {
    auto sys = driven_system(p, variant);
    sys.damping = damping;
    return transfer_function(sys, nu_hz - sys.reference_hz);
}

FrequencyGrid make_grid(double center_hz, double span_hz, int points) {
    if (points < 3) throw std::invalid_argument("frequency grid needs at least 3 points");
    if (!(span_hz > 0.0)) throw std::invalid_argument("frequency grid span must be > 0");
    FrequencyGrid g;
    g.center_hz = center_hz;
    g.offsets_hz.resize(static_cast<std::size_t>(points));
    const int last = points - 1;
    for (int i = 0; i < points; ++i) {
        g.offsets_hz[static_cast<std::size_t>(i)] = span_hz * static_cast<double>(2 * i - last) / last;
    }
    return g;
}

FrequencyGrid default_grid(const DrivenSystem& sys) { return make_grid(sys.reference_hz, 1.5e8, 2001); }

SpectrumTrace sweep(const DrivenSystem& sys, const FrequencyGrid& grid) {
    const auto& x = grid.offsets_hz;
    if (x.size() < 3) throw std::invalid_argument("frequency grid needs at least 3 points");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) throw std::invalid_argument("frequency grid must be strictly increasing");
    }
    // Grid points are evaluated on a shifted system so offsets stay small.
    DrivenSystem local = sys;
    const double shift = grid.center_hz - sys.reference_hz;
    local.reference_hz = grid.center_hz;
    local.cavity_offset_hz -= shift;
    for (auto& m : local.modes) m.offset_hz -= shift;

    SpectrumTrace tr;
    tr.center_hz = grid.center_hz;
    tr.offsets_hz = x;
    tr.transmission.resize(x.size());
    tr.reflection.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto resp = transfer_function(local, x[i]);
        tr.transmission[i] = resp.transmission();
        tr.reflection[i] = resp.reflection();
    }
    tr.peaks = peak_find(tr.offsets_hz, tr.transmission);
    tr.dips = dip_find(tr.offsets_hz, tr.reflection);
    return tr;
}

SpectrumTrace sweep(const SystemParams& p, const DampingSet& damping, ModelVariant variant,
                    const FrequencyGrid& grid, bool include_envelope) {
    auto sys = driven_system(p, variant, include_envelope);
    sys.damping = damping;
    return sweep(sys, grid);
}

namespace {

// Walks from `i` in direction `step` to the first sample below `level`;
// returns the interpolated crossing, or NaN if the walk leaves the grid or
// climbs above `top` first.
double half_crossing(std::span<const double> x, std::span<const double> y, std::size_t i, int step,
                     double level, double top) {
    auto j = static_cast<std::ptrdiff_t>(i);
    const auto n = static_cast<std::ptrdiff_t>(y.size());
    while (true) {
        const auto next = j + step;
        if (next < 0 || next >= n) return std::numeric_limits<double>::quiet_NaN();
        const auto uj = static_cast<std::size_t>(j);
        const auto un = static_cast<std::size_t>(next);
        if (y[un] > top) return std::numeric_limits<double>::quiet_NaN();
        if (y[un] < level) {
            const double frac = (y[uj] - level) / (y[uj] - y[un]);
            return x[uj] + frac * (x[un] - x[uj]);
        }
        j = next;
    }
}

}  // namespace

std::vector<Peak> peak_find(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("peak_find: x and y differ in length");
    std::vector<Peak> peaks;
    if (y.size() < 3) return peaks;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;

        // Vertex of the parabola through the three samples.
        const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
        const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
        const double d01 = (y1 - y0) / (x1 - x0);
        const double d12 = (y2 - y1) / (x2 - x1);
        const double curv = (d12 - d01) / (x2 - x0);
        Peak pk{x1, y1, 0.0};
        if (curv < 0.0) {
            const double slope_mid = d01 + curv * (x1 - x0);  // slope at x1
            const double dx = -slope_mid / (2.0 * curv);
            if (std::abs(dx) <= std::max(x1 - x0, x2 - x1)) {
                pk.location_hz = x1 + dx;
                pk.height = y1 + slope_mid * dx + curv * dx * dx;
            }
        }

        const double half = 0.5 * pk.height;
        const double left = half_crossing(x, y, i, -1, half, pk.height);
        const double right = half_crossing(x, y, i, +1, half, pk.height);
        if (std::isfinite(left) && std::isfinite(right)) {
            pk.fwhm_hz = right - left;
        } else if (std::isfinite(left)) {
            pk.fwhm_hz = 2.0 * (pk.location_hz - left);
        } else if (std::isfinite(right)) {
            pk.fwhm_hz = 2.0 * (right - pk.location_hz);
        } else {
            pk.fwhm_hz = std::numeric_limits<double>::quiet_NaN();
        }
        peaks.push_back(pk);
    }
    return peaks;
}

std::vector<Peak> dip_find(std::span<const double> x, std::span<const double> y) {
    std::vector<double> depth(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) depth[i] = 1.0 - y[i];
    auto dips = peak_find(x, depth);
    for (auto& d : dips) d.height = 1.0 - d.height;
    return dips;
}

}  // namespace exlat
