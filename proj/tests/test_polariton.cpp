#include "exlat/constants.hpp"
#include "exlat/exciton.hpp"
#include "exlat/polariton.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

using namespace exlat;

namespace {

// Direct numerical 2x2 eigenproblem in the (exciton, photon) basis.
Eigen::Vector2d brute_2x2(double cavity, double exciton, double g) {
    Eigen::Matrix2d m;
    m << exciton, g, g, cavity;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> s(m);
    return s.eigenvalues();
}

}  // namespace

TEST_CASE("superradiant and collective couplings") {
    auto p = reference_params();
    CHECK(superradiant_coupling(p) == doctest::Approx(2.55e7).epsilon(0.02));
    CHECK(superradiant_coupling(p) == mode_coupling_hz(p, 1));

    SystemParams bare = p;
    bare.cavity_frequency_hz = p.atom_frequency_hz;
    CHECK(collective_coupling_noninteracting(bare) == doctest::Approx(2.8e7).epsilon(0.03));
    CHECK(collective_coupling_noninteracting(bare) ==
          doctest::Approx(std::sqrt(1000.0) * single_site_coupling_hz(bare)).epsilon(1e-14));

    p.num_sites = 1;
    CHECK(superradiant_coupling(p) == doctest::Approx(single_site_coupling_hz(p)).epsilon(1e-14));
    CHECK(collective_coupling_noninteracting(p) == doctest::Approx(superradiant_coupling(p)).epsilon(1e-14));
}

TEST_CASE("superradiant to collective ratio approaches 2 sqrt(2) / pi") {
    auto p = reference_params();
    p.cavity_frequency_hz = p.atom_frequency_hz;
    const double limit = 2.0 * std::sqrt(2.0) / kPi;
    double previous_gap = INFINITY;
    for (int n : {10, 30, 100, 300, 1000, 3000, 10000}) {
        p.num_sites = n;
        const double ratio = superradiant_coupling(p) / collective_coupling_noninteracting(p);
        // Closed form (2/pi-free): sqrt(2 / (N (N+1))) cot(pi / (2(N+1))).
        const double closed = std::sqrt(2.0 / (n * (n + 1.0))) / std::tan(kPi / (2.0 * (n + 1)));
        CHECK(ratio == doctest::Approx(closed).epsilon(1e-12));
        const double gap = std::abs(ratio - limit);
        CHECK(gap < previous_gap);
        previous_gap = gap;
        if (n >= 1000) CHECK(gap / limit < 0.005);
    }
}

TEST_CASE("two-mode doublet at resonance") {
    const auto d = two_mode_doublet(4e14, 4e14, 2.55e7);
    CHECK(d.delta_hz == 0.0);
    CHECK(d.splitting_hz() == doctest::Approx(5.1e7).epsilon(1e-6));
    CHECK(d.X_plus * d.X_plus == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.X_minus * d.X_minus == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.Y_plus * d.Y_plus == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.Y_minus * d.Y_minus == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("two-mode doublet: large detuning and degenerate cases") {
    const double g = 2.55e7;
    const auto pos = two_mode_doublet(2e10, 0.0, g);  // cavity far above the exciton
    CHECK(pos.X_minus * pos.X_minus > 0.999);
    CHECK(pos.Y_plus * pos.Y_plus > 0.999);
    const auto neg = two_mode_doublet(-2e10, 0.0, g);
    CHECK(neg.Y_minus * neg.Y_minus > 0.999);
    CHECK(neg.X_plus * neg.X_plus > 0.999);

    const auto zero = two_mode_doublet(1.0, 1.0, 0.0);
    CHECK(zero.upper_hz == zero.lower_hz);
    CHECK(zero.X_plus == 1.0);
    CHECK(zero.Y_plus == 0.0);
    CHECK(zero.X_minus == 0.0);
    CHECK(zero.Y_minus == 1.0);

    const auto uncoupled = two_mode_doublet(3.0, 1.0, 0.0);
    CHECK(uncoupled.upper_hz == 3.0);
    CHECK(uncoupled.lower_hz == 1.0);
    CHECK(std::abs(uncoupled.Y_plus) == 1.0);
    CHECK(std::abs(uncoupled.X_minus) == 1.0);

    CHECK_THROWS_AS(two_mode_doublet(0.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("two-mode doublet: normalization, completeness and 2x2 oracle") {
    const double g = 2.55e7;
    for (int i = -40; i <= 40; ++i) {
        const double delta = 1e7 * i * std::abs(i) / 16.0;
        const double e_ex = -1.356e8;
        const auto d = two_mode_doublet(e_ex + 2.0 * delta, e_ex, g);
        CHECK(d.delta_hz == doctest::Approx(delta).epsilon(1e-12));
        CHECK(d.Delta_hz >= std::abs(d.delta_hz));
        CHECK(std::abs(d.X_plus * d.X_plus + d.Y_plus * d.Y_plus - 1.0) < 1e-12);
        CHECK(std::abs(d.X_minus * d.X_minus + d.Y_minus * d.Y_minus - 1.0) < 1e-12);
        CHECK(std::abs(d.X_plus * d.X_plus + d.X_minus * d.X_minus - 1.0) < 1e-12);
        CHECK(std::abs(d.Y_plus * d.Y_plus + d.Y_minus * d.Y_minus - 1.0) < 1e-12);
        CHECK(d.upper_hz - d.lower_hz == doctest::Approx(2.0 * d.Delta_hz).epsilon(1e-14));

        const auto oracle = brute_2x2(e_ex + 2.0 * delta, e_ex, g);
        const double scale = std::max(std::abs(oracle(0)), std::abs(oracle(1)));
        CHECK(std::abs(d.lower_hz - oracle(0)) <= 1e-12 * scale);
        CHECK(std::abs(d.upper_hz - oracle(1)) <= 1e-12 * scale);

        // Eigenvector residual of the exciton/photon amplitudes.
        Eigen::Matrix2d m;
        m << e_ex, g, g, e_ex + 2.0 * delta;
        const Eigen::Vector2d up(d.X_plus, d.Y_plus), lo(d.X_minus, d.Y_minus);
        CHECK((m * up - d.upper_hz * up).norm() <= 1e-12 * scale);
        CHECK((m * lo - d.lower_hz * lo).norm() <= 1e-12 * scale);
    }
}

TEST_CASE("vacuum Rabi splitting versus N") {
    const auto p = reference_params();
    const std::vector<int> ns{1, 10, 100, 1000};
    const auto inter = vacuum_rabi_vs_N(p, ns, ModelVariant::TwoModeSuperradiant);
    const auto indep = vacuum_rabi_vs_N(p, ns, ModelVariant::NonInteractingCollective);
    REQUIRE(inter.size() == 4);
    CHECK(inter[3].omega_hz == doctest::Approx(5.1e7).epsilon(0.02));
    CHECK(indep[3].omega_hz == doctest::Approx(5.67e7).epsilon(0.01));
    CHECK(indep[3].omega_hz - inter[3].omega_hz == doctest::Approx(5e6).epsilon(0.25));
    CHECK(inter[0].omega_hz == doctest::Approx(indep[0].omega_hz).epsilon(1e-14));
    for (std::size_t i = 0; i < ns.size(); ++i) {
        CHECK(indep[i].omega_hz / std::sqrt(ns[i]) == doctest::Approx(indep[0].omega_hz).epsilon(1e-13));
    }
    CHECK_THROWS_AS(vacuum_rabi_vs_N(p, ns, ModelVariant::FullMultimode), std::invalid_argument);
}

TEST_CASE("generalized Rabi splitting versus angle") {
    const auto p = reference_params();
    const double nonint = generalized_rabi(p, 0.0, 1000, ModelVariant::NonInteractingCollective);
    CHECK(nonint == doctest::Approx(5.67e7).epsilon(0.01));
    CHECK(generalized_rabi(p, 1.0, 1000, ModelVariant::NonInteractingCollective) == nonint);

    const double magic = generalized_rabi(p, kMagicAngleRad, 1000, ModelVariant::TwoModeSuperradiant);
    CHECK(magic == doctest::Approx(5.1e7).epsilon(0.02));
    CHECK(magic < nonint);

    SystemParams bare = p;
    bare.cavity_frequency_hz = p.atom_frequency_hz;
    CHECK(magic == doctest::Approx(2.0 * superradiant_coupling(bare)).epsilon(1e-12));

    CHECK(generalized_rabi(p, 0.0, 1000, ModelVariant::TwoModeSuperradiant) ==
          doctest::Approx(1.45e8).epsilon(0.01));
    CHECK(generalized_rabi(p, kPi / 2, 1000, ModelVariant::TwoModeSuperradiant) ==
          doctest::Approx(8.5e7).epsilon(0.01));

    double best = INFINITY, best_theta = 0.0;
    for (int i = 0; i <= 90000; ++i) {
        const double theta = 0.5 * kPi * i / 90000;
        const double w = generalized_rabi(p, theta, 1000, ModelVariant::TwoModeSuperradiant);
        CHECK(w >= magic * (1 - 1e-15));
        if (w < best) best = w, best_theta = theta;
    }
    CHECK(best_theta == doctest::Approx(kMagicAngleRad).epsilon(1e-4));
    CHECK_THROWS_AS(generalized_rabi(p, 0.0, 10, ModelVariant::FullMultimode), std::invalid_argument);
}

TEST_CASE("multimode: dark modes, orthonormality, interlacing") {
    auto p = reference_params();
    for (int n : {2, 5, 20, 101, 200}) {
        p.num_sites = n;
        const auto mm = multimode_diagonalize(p);
        REQUIRE(mm.eigen_offsets_hz.size() == n + 1);

        const Eigen::MatrixXd u = mm.amplitudes;
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n + 1, n + 1);
        CHECK((u * u.transpose() - id).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((u.transpose() * u - id).cwiseAbs().maxCoeff() < 1e-9);

        // Dark excitons are exact eigenpairs with zero photon weight.
        for (int k = 2; k <= n; k += 2) {
            const double e = exciton_shift_hz(p, k);
            bool found = false;
            for (Eigen::Index i = 0; i <= n; ++i) {
                if (mm.eigen_offsets_hz(i) == e && mm.amplitudes(i, k) == 1.0 && mm.photon_weight(i) == 0.0) {
                    found = true;
                }
            }
            CHECK_MESSAGE(found, "N=" << n << " k=" << k);
        }

        std::vector<double> d;
        for (int k = 1; k <= n; ++k) d.push_back(exciton_shift_hz(p, k));
        std::sort(d.begin(), d.end());
        const double tol = 1e-9 * std::abs(transfer_parameter(p));
        for (int i = 0; i < n; ++i) {
            CHECK(mm.eigen_offsets_hz(i) <= d[static_cast<std::size_t>(i)] + tol);
            CHECK(d[static_cast<std::size_t>(i)] <= mm.eigen_offsets_hz(i + 1) + tol);
        }
        for (Eigen::Index i = 0; i <= n; ++i) {
            CHECK(mm.eigenfrequencies_hz(i) == doctest::Approx(4e14 + mm.eigen_offsets_hz(i)).epsilon(1e-15));
        }
    }
}

TEST_CASE("multimode with one site reproduces the doublet") {
    auto p = reference_params();
    p.num_sites = 1;
    p.cavity_frequency_hz = 4e14 + 1.3e7;
    const auto mm = multimode_diagonalize(p);
    const auto d = two_mode_doublet(cavity_offset_hz(p), exciton_shift_hz(p, 1), superradiant_coupling(p));
    CHECK(std::abs(mm.eigen_offsets_hz(0) - d.lower_hz) <= 1e-12 * std::abs(d.lower_hz));
    CHECK(std::abs(mm.eigen_offsets_hz(1) - d.upper_hz) <= 1e-12 * std::abs(d.upper_hz));
    CHECK(mm.photon_weight(1) == doctest::Approx(d.Y_plus * d.Y_plus).epsilon(1e-12));
}

TEST_CASE("multimode envelope couplings") {
    auto p = reference_params();
    p.num_sites = 101;
    const auto env = envelope_mode_couplings(p);
    // Chain is much shorter than the waist: envelope barely changes f_k.
    for (int k = 1; k <= 9; k += 2) {
        const double flat = mode_coupling_hz(p, k);
        CHECK(env[static_cast<std::size_t>(k - 1)] < flat);
        CHECK(env[static_cast<std::size_t>(k - 1)] == doctest::Approx(flat).epsilon(1e-3));
    }
    for (int k = 2; k <= 10; k += 2) {
        CHECK(std::abs(env[static_cast<std::size_t>(k - 1)]) < 1e-9 * mode_coupling_hz(p, 1));
    }

    p.num_sites = 10000;  // chain 1e-3 m > waist
    const auto wide = envelope_mode_couplings(p);
    CHECK(wide[0] < 0.8 * mode_coupling_hz(p, 1));
}

TEST_CASE("truncation report (exploratory)") {
    auto p = reference_params();
    for (int n : {1, 5, 20, 50}) {
        p.num_sites = n;
        const auto r = truncation_report(p);
        MESSAGE("N=" << n << " two-mode splitting " << r.two_mode.splitting_hz() << " Hz, multimode "
                     << (r.multimode_upper_hz - r.multimode_lower_hz) << " Hz, deviation " << r.splitting_deviation);
        CHECK(std::isfinite(r.splitting_deviation));
        if (n == 1) CHECK(std::abs(r.splitting_deviation) < 1e-12);
    }
}
