#pragma once

// Standing-wave excitons of a finite chain with fixed (empty-site)
// boundaries, and their couplings to the cavity mode.

#include "exlat/params.hpp"

#include <Eigen/Dense>

#include <string_view>
#include <vector>

namespace exlat {

enum class ModeClass { Dark, Bright };

std::string_view to_string(ModeClass c);

struct ExcitonMode {
    int k = 0;
    double energy_hz = 0.0;
    double shift_hz = 0.0;  // energy_hz - atom_frequency_hz
    double coupling_hz = 0.0;
    ModeClass mode_class = ModeClass::Dark;
    double oscillator_fraction = 0.0;
};

/// Tridiagonal Toeplitz single-excitation Hamiltonian on N sites.
struct SiteHamiltonian {
    int size = 0;
    double onsite_hz = 0.0;
    double hopping_hz = 0.0;
};

struct SiteEigensystem {
    Eigen::VectorXd values;   // ascending, Hz
    Eigen::VectorXd shifts;   // values - onsite, computed without cancellation
    Eigen::MatrixXd vectors;  // columns are eigenvectors in the site basis
};

/// E_k/h - nu_a = 2 (J/h) cos(pi k / (N+1)).
double exciton_shift_hz(const SystemParams& p, int k);

/// nu_a + 2 (J/h) cos(pi k / (N+1)) for k = 1..N.
std::vector<double> exciton_energies(const SystemParams& p);

/// Component n (1-based) is sqrt(2/(N+1)) sin(pi n k / (N+1)).
/// Throws std::out_of_range unless 1 <= k <= N.
std::vector<double> sine_mode_vector(int k, int num_sites);

/// sum_n sin(pi n k / (N+1)): cot(pi k / (2(N+1))) for odd k, exactly 0 for
/// even k.
double coupling_sum(int k, int num_sites);

/// Coupling of one atom at the field maximum, sqrt(nu_c mu^2 / (2 eps0 V h)).
double single_site_coupling_hz(const SystemParams& p);

/// |f_k| / h.
double mode_coupling_hz(const SystemParams& p, int k);

std::vector<ExcitonMode> mode_couplings(const SystemParams& p);

std::vector<double> oscillator_fractions(const SystemParams& p);

/// sum over odd k of cot^2(pi k / (2(N+1))); equals N(N+1)/2.
double coupling_sum_rule(int num_sites);

SiteHamiltonian site_hamiltonian(const SystemParams& p);

/// Numerical eigendecomposition, independent of the analytic sine modes.
SiteEigensystem diagonalize_site_hamiltonian(const SiteHamiltonian& h);

}  // namespace exlat
