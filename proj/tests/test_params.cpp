#include "exlat/constants.hpp"
#include "exlat/params.hpp"

#include <doctest.h>

#include <cmath>

using namespace exlat;

TEST_CASE("mode volume follows pi w0^2 L / 4") {
    auto p = reference_params();
    CHECK(mode_volume(p) == doctest::Approx(1.0603e-10).epsilon(1e-4));

    p.beam_waist_m = 2.0 / std::sqrt(kPi);
    p.mirror_distance_m = 1.0;
    CHECK(mode_volume(p) == doctest::Approx(1.0).epsilon(1e-14));

    const double v = mode_volume(p);
    p.beam_waist_m *= 2.0;
    CHECK(mode_volume(p) == doctest::Approx(4.0 * v).epsilon(1e-14));

    p.mode_volume_override_m3 = 1e-10;
    CHECK(mode_volume(p) == 1e-10);
}

TEST_CASE("transfer parameter") {
    auto p = reference_params();
    CHECK(transfer_parameter(p) == doctest::Approx(-6.8e7).epsilon(0.02));
    const double j0 = transfer_parameter(p);

    p.theta_rad = kMagicAngleRad;
    CHECK(std::abs(transfer_parameter(p)) < 1e-8 * std::abs(j0));

    p.theta_rad = kPi / 2;
    CHECK(transfer_parameter(p) == doctest::Approx(-0.5 * j0).epsilon(1e-12));
    CHECK(transfer_parameter(p) == doctest::Approx(3.39e7).epsilon(0.01));
}

TEST_CASE("transfer parameter changes sign once on [0, pi/2]") {
    auto p = reference_params();
    int sign_changes = 0;
    double previous = transfer_parameter(p);
    const int steps = 9000;
    for (int i = 1; i <= steps; ++i) {
        p.theta_rad = 0.5 * kPi * i / steps;
        const double j = transfer_parameter(p);
        if (p.theta_rad < kMagicAngleRad - 1e-6) CHECK(j < 0.0);
        if (p.theta_rad > kMagicAngleRad + 1e-6) CHECK(j > 0.0);
        if ((j > 0.0) != (previous > 0.0)) ++sign_changes;
        previous = j;
    }
    CHECK(sign_changes == 1);
    CHECK(kMagicAngleRad == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-15));
}

TEST_CASE("site positions are centered and symmetric") {
    auto p = reference_params();
    p.num_sites = 7;
    const auto r = site_positions(p);
    REQUIRE(r.size() == 7);
    CHECK(r[0] == doctest::Approx(1e-7 - 4e-7));
    for (std::size_t n = 0; n < r.size(); ++n) CHECK(r[n] == -r[r.size() - 1 - n]);
    CHECK(r[3] == 0.0);

    const auto d = derive(p);
    CHECK(d.chain_length_m == doctest::Approx(8e-7));
    CHECK(d.site_positions_m == r);
    CHECK(d.transfer_hz == transfer_parameter(p));
}

TEST_CASE("validate warns when the chain outgrows the waist") {
    auto p = reference_params();
    CHECK(validate(p).empty());
    CHECK(chain_length(p) == doctest::Approx(1.001e-4));

    p.num_sites = 10000;
    const auto w = validate(p);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("beam waist") != std::string::npos);
}

TEST_CASE("non-positive inputs are rejected by name") {
    auto p = reference_params();
    p.lattice_constant_m = 0.0;
    CHECK_THROWS_AS(check(p), InvalidParameter);
    try {
        check(p);
    } catch (const InvalidParameter& e) {
        CHECK(e.name() == "lattice_constant_m");
    }

    p = reference_params();
    p.num_sites = 0;
    CHECK_THROWS_AS(validate(p), InvalidParameter);

    p = reference_params();
    p.atom_linewidth_hz = -1.0;
    CHECK_THROWS_AS(check(p), InvalidParameter);

    p = reference_params();
    p.atom_linewidth_hz = 0.0;
    CHECK_NOTHROW(check(p));

    p = reference_params();
    p.cavity_frequency_hz = -4e14;
    CHECK_THROWS_AS(check(p), InvalidParameter);
}

TEST_CASE("default cavity sits on the nodeless exciton") {
    auto p = reference_params();
    const double shift = 2.0 * transfer_parameter(p) * std::cos(kPi / 1001.0);
    CHECK(cavity_offset_hz(p) == shift);
    CHECK(cavity_frequency(p) == doctest::Approx(4e14 + shift).epsilon(1e-15));
    p.cavity_frequency_hz = 4.1e14;
    CHECK(cavity_frequency(p) == 4.1e14);
    CHECK(cavity_offset_hz(p) == doctest::Approx(1e13));
}
