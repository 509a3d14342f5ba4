#include "exlat/exciton.hpp"

#include "exlat/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace exlat {

namespace {

void require_mode_index(int k, int num_sites) {
    if (num_sites < 1 || k < 1 || k > num_sites) {
        throw std::out_of_range("mode index k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(num_sites));
    }
}

}  // namespace

std::string_view to_string(ModeClass c) {
    return c == ModeClass::Dark ? "dark" : "bright";
}

double exciton_shift_hz(const SystemParams& p, int k) {
    require_mode_index(k, p.num_sites);
    return 2.0 * transfer_parameter(p) * std::cos(kPi * k / (p.num_sites + 1));
}

std::vector<double> exciton_energies(const SystemParams& p) {
    check(p);
    std::vector<double> e(static_cast<std::size_t>(p.num_sites));
    for (int k = 1; k <= p.num_sites; ++k) {
        e[static_cast<std::size_t>(k - 1)] = p.atom_frequency_hz + exciton_shift_hz(p, k);
    }
    return e;
}

std::vector<double> sine_mode_vector(int k, int num_sites) {
    require_mode_index(k, num_sites);
    const double norm = std::sqrt(2.0 / (num_sites + 1));
    std::vector<double> v(static_cast<std::size_t>(num_sites));
    for (int n = 1; n <= num_sites; ++n) {
        // Reduce n k mod 2(N+1) so the sine argument stays small for large N.
        const long period = 2L * (num_sites + 1);
        const long phase = (static_cast<long>(n) * k) % period;
        v[static_cast<std::size_t>(n - 1)] = norm * std::sin(kPi * phase / (num_sites + 1));
    }
    return v;
}

double coupling_sum(int k, int num_sites) {
    require_mode_index(k, num_sites);
    if (k % 2 == 0) return 0.0;
    return 1.0 / std::tan(kPi * k / (2.0 * (num_sites + 1)));
}

double single_site_coupling_hz(const SystemParams& p) {
    check(p);
    return std::sqrt(cavity_frequency(p) * p.dipole_Cm * p.dipole_Cm /
                     (2.0 * kVacuumPermittivity * mode_volume(p) * kPlanck));
}

double mode_coupling_hz(const SystemParams& p, int k) {
    return single_site_coupling_hz(p) * std::sqrt(2.0 / (p.num_sites + 1)) *
           coupling_sum(k, p.num_sites);
}

std::vector<ExcitonMode> mode_couplings(const SystemParams& p) {
    check(p);
    const double site = single_site_coupling_hz(p);
    const double norm = std::sqrt(2.0 / (p.num_sites + 1));

    std::vector<ExcitonMode> modes(static_cast<std::size_t>(p.num_sites));
    double total = 0.0;
    for (int k = 1; k <= p.num_sites; ++k) {
        auto& m = modes[static_cast<std::size_t>(k - 1)];
        m.k = k;
        m.shift_hz = exciton_shift_hz(p, k);
        m.energy_hz = p.atom_frequency_hz + m.shift_hz;
        m.coupling_hz = site * norm * coupling_sum(k, p.num_sites);
        m.mode_class = (k % 2 == 0) ? ModeClass::Dark : ModeClass::Bright;
        total += m.coupling_hz * m.coupling_hz;
    }
    for (auto& m : modes) m.oscillator_fraction = m.coupling_hz * m.coupling_hz / total;
    return modes;
}

std::vector<double> oscillator_fractions(const SystemParams& p) {
    const auto modes = mode_couplings(p);
    std::vector<double> out;
    out.reserve(modes.size());
    for (const auto& m : modes) out.push_back(m.oscillator_fraction);
    return out;
}

double coupling_sum_rule(int num_sites) {
    if (num_sites < 1) throw std::out_of_range("num_sites must be >= 1");
    double sum = 0.0;
    for (int k = 1; k <= num_sites; k += 2) {
        const double c = coupling_sum(k, num_sites);
        sum += c * c;
    }
    return sum;
}

SiteHamiltonian site_hamiltonian(const SystemParams& p) {
    check(p);
    return SiteHamiltonian{p.num_sites, p.atom_frequency_hz, transfer_parameter(p)};
}

SiteEigensystem diagonalize_site_hamiltonian(const SiteHamiltonian& h) {
    if (h.size < 1) throw std::invalid_argument("site Hamiltonian needs at least one site");
    // The uniform diagonal is a scalar shift; solving without it keeps the
    // hopping resolvable when onsite >> hopping.
    const Eigen::Index n = h.size;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = h.hopping_hz;
        m(i + 1, i) = h.hopping_hz;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("site Hamiltonian diagonalization failed");
    }
    SiteEigensystem out;
    out.shifts = solver.eigenvalues();
    out.values = out.shifts.array() + h.onsite_hz;
    out.vectors = solver.eigenvectors();
    return out;
}

}  // namespace exlat
