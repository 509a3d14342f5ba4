#include "exlat/polariton.hpp"

#include "exlat/constants.hpp"
#include "exlat/exciton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace exlat {

std::string_view to_string(ModelVariant v) {
    switch (v) {
        case ModelVariant::TwoModeSuperradiant: return "two-mode";
        case ModelVariant::FullMultimode: return "multimode";
        case ModelVariant::NonInteractingCollective: return "noninteracting";
    }
    return "unknown";
}

std::optional<ModelVariant> parse_model_variant(std::string_view name) {
    if (name == "two-mode") return ModelVariant::TwoModeSuperradiant;
    if (name == "multimode") return ModelVariant::FullMultimode;
    if (name == "noninteracting") return ModelVariant::NonInteractingCollective;
    return std::nullopt;
}

double superradiant_coupling(const SystemParams& p) { return mode_coupling_hz(p, 1); }

double collective_coupling_noninteracting(const SystemParams& p) {
    return single_site_coupling_hz(p) * std::sqrt(static_cast<double>(p.num_sites));
}

PolaritonDoublet two_mode_doublet(double cavity_hz, double exciton_hz, double coupling_hz) {
    if (!(coupling_hz >= 0.0)) throw std::invalid_argument("coupling must be >= 0");

    PolaritonDoublet d;
    d.delta_hz = 0.5 * (cavity_hz - exciton_hz);
    d.Delta_hz = std::hypot(d.delta_hz, coupling_hz);
    const double mean = 0.5 * (cavity_hz + exciton_hz);
    d.upper_hz = mean + d.Delta_hz;
    d.lower_hz = mean - d.Delta_hz;

    if (coupling_hz == 0.0) {
        if (d.delta_hz > 0.0) {         // photon above exciton
            d.X_plus = 0.0, d.Y_plus = 1.0, d.X_minus = -1.0, d.Y_minus = 0.0;
        } else if (d.delta_hz < 0.0) {  // exciton above photon
            d.X_plus = 1.0, d.Y_plus = 0.0, d.X_minus = 0.0, d.Y_minus = 1.0;
        } else {
            d.X_plus = 1.0, d.Y_plus = 0.0, d.X_minus = 0.0, d.Y_minus = 1.0;
        }
        return d;
    }

    // Delta -/+ delta without cancellation: (D - d)(D + d) = g^2.
    const double g2 = coupling_hz * coupling_hz;
    double minus, plus;
    if (d.delta_hz >= 0.0) {
        plus = d.Delta_hz + d.delta_hz;
        minus = g2 / plus;
    } else {
        minus = d.Delta_hz - d.delta_hz;
        plus = g2 / minus;
    }
    const double two_Delta = 2.0 * d.Delta_hz;
    d.X_plus = std::sqrt(minus / two_Delta);
    d.X_minus = -std::sqrt(plus / two_Delta);
    d.Y_plus = coupling_hz / std::sqrt(two_Delta * minus);
    d.Y_minus = coupling_hz / std::sqrt(two_Delta * plus);
    return d;
}

std::vector<RabiPoint> vacuum_rabi_vs_N(const SystemParams& p, std::span<const int> num_sites,
                                        ModelVariant variant) {
    if (variant == ModelVariant::FullMultimode) {
        throw std::invalid_argument("vacuum Rabi sweep supports two-mode and noninteracting models");
    }
    std::vector<RabiPoint> out;
    out.reserve(num_sites.size());
    for (int n : num_sites) {
        SystemParams q = p;
        q.num_sites = n;
        double coupling;
        if (variant == ModelVariant::TwoModeSuperradiant) {
            q.cavity_frequency_hz.reset();
            coupling = superradiant_coupling(q);
        } else {
            q.cavity_frequency_hz = q.atom_frequency_hz;
            coupling = collective_coupling_noninteracting(q);
        }
        out.push_back({n, 2.0 * coupling});
    }
    return out;
}

double generalized_rabi(const SystemParams& p, double theta_rad, int num_sites,
                        ModelVariant variant) {
    SystemParams q = p;
    q.theta_rad = theta_rad;
    q.num_sites = num_sites;
    q.cavity_frequency_hz = q.atom_frequency_hz;
    switch (variant) {
        case ModelVariant::TwoModeSuperradiant: {
            const auto d = two_mode_doublet(0.0, exciton_shift_hz(q, 1), superradiant_coupling(q));
            return 2.0 * d.Delta_hz;
        }
        case ModelVariant::NonInteractingCollective:
            return 2.0 * collective_coupling_noninteracting(q);
        case ModelVariant::FullMultimode:
            break;
    }
    throw std::invalid_argument("generalized Rabi splitting supports two-mode and noninteracting models");
}

std::vector<double> envelope_mode_couplings(const SystemParams& p) {
    check(p);
    const auto r = site_positions(p);
    std::vector<double> site(r.size());
    const double g0 = single_site_coupling_hz(p);
    const double w2 = p.beam_waist_m * p.beam_waist_m;
    for (std::size_t n = 0; n < r.size(); ++n) site[n] = g0 * std::exp(-r[n] * r[n] / w2);

    std::vector<double> out(static_cast<std::size_t>(p.num_sites));
    for (int k = 1; k <= p.num_sites; ++k) {
        const auto phi = sine_mode_vector(k, p.num_sites);
        out[static_cast<std::size_t>(k - 1)] =
            std::inner_product(phi.begin(), phi.end(), site.begin(), 0.0);
    }
    return out;
}

MultimodeResult multimode_diagonalize(const SystemParams& p, bool include_envelope) {
    check(p);
    const int n = p.num_sites;
    const int dim = n + 1;

    std::vector<double> couplings;
    if (include_envelope) {
        couplings = envelope_mode_couplings(p);
    } else {
        couplings.resize(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) couplings[static_cast<std::size_t>(k - 1)] = mode_coupling_hz(p, k);
    }
    std::vector<double> shifts(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) shifts[static_cast<std::size_t>(k - 1)] = exciton_shift_hz(p, k);

    // Modes with zero border entry are exact eigenpairs; only the coupled
    // block goes to the dense solver.
    std::vector<int> coupled;
    for (int k = 1; k <= n; ++k) {
        if (couplings[static_cast<std::size_t>(k - 1)] != 0.0) coupled.push_back(k);
    }
    const Eigen::Index block = static_cast<Eigen::Index>(coupled.size()) + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(block, block);
    h(0, 0) = cavity_offset_hz(p);
    for (Eigen::Index i = 1; i < block; ++i) {
        const auto k = static_cast<std::size_t>(coupled[static_cast<std::size_t>(i - 1)] - 1);
        h(i, i) = shifts[k];
        h(0, i) = couplings[k];
        h(i, 0) = couplings[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("multimode diagonalization failed");

    struct Pair {
        double value;
        Eigen::VectorXd vector;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < block; ++j) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v(0) = solver.eigenvectors()(0, j);
        for (Eigen::Index i = 1; i < block; ++i) v(coupled[static_cast<std::size_t>(i - 1)]) = solver.eigenvectors()(i, j);
        pairs.push_back({solver.eigenvalues()(j), std::move(v)});
    }
    for (int k = 1; k <= n; ++k) {
        if (couplings[static_cast<std::size_t>(k - 1)] != 0.0) continue;
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v(k) = 1.0;
        pairs.push_back({shifts[static_cast<std::size_t>(k - 1)], std::move(v)});
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.value < b.value; });

    MultimodeResult out;
    out.reference_hz = p.atom_frequency_hz;
    out.eigen_offsets_hz.resize(dim);
    out.amplitudes.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& pr = pairs[static_cast<std::size_t>(i)];
        out.eigen_offsets_hz(i) = pr.value;
        out.amplitudes.row(i) = pr.vector.transpose();
    }
    out.eigenfrequencies_hz = out.eigen_offsets_hz.array() + out.reference_hz;
    out.photon_weight = out.amplitudes.col(0).array().square();
    return out;
}

TruncationReport truncation_report(const SystemParams& p, bool include_envelope) {
    const auto mm = multimode_diagonalize(p, include_envelope);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(mm.photon_weight.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::partial_sort(order.begin(), order.begin() + std::min<std::size_t>(2, order.size()), order.end(),
                      [&](Eigen::Index a, Eigen::Index b) { return mm.photon_weight(a) > mm.photon_weight(b); });

    TruncationReport r;
    r.two_mode = two_mode_doublet(cavity_offset_hz(p), exciton_shift_hz(p, 1), superradiant_coupling(p));
    r.two_mode_lower_hz = r.two_mode.lower_hz;
    r.two_mode_upper_hz = r.two_mode.upper_hz;
    const double a = mm.eigen_offsets_hz(order[0]);
    const double b = mm.eigen_offsets_hz(order[1]);
    r.multimode_lower_hz = std::min(a, b);
    r.multimode_upper_hz = std::max(a, b);
    r.splitting_deviation = (r.multimode_upper_hz - r.multimode_lower_hz) / r.two_mode.splitting_hz() - 1.0;
    return r;
}

}  // namespace exlat
