#include <doctest.h>

#include <cmath>

#include "gpe/units.hpp"

using namespace gpe;

TEST_SUITE_BEGIN("units");

TEST_CASE("transverse oscillator length and 1D coupling match the published setup") {
    PhysicalParams p;  // defaults: 950 Rb atoms, f_perp = 408 Hz
    const Coupling1D c = derive_coupling(p);

    // a_perp = sqrt(hbar/(m 2 pi f_perp)), evaluated independently here.
    const double omega_perp = 2.0 * M_PI * 408.0;
    const double a_perp_ref = std::sqrt(kHbar / (1.44e-25 * omega_perp));
    CHECK(c.a_perp_m == doctest::Approx(a_perp_ref).epsilon(1e-14));
    CHECK(c.a_perp_m * 1e9 == doctest::Approx(534.5).epsilon(1e-4));  // nm

    const double g_ref = 2.0 * kHbar * omega_perp * 4.761e-9 * 950.0;
    CHECK(c.g1d_si == doctest::Approx(g_ref).epsilon(1e-14));
    CHECK(c.g1d_si == doctest::Approx(2.45e-36).epsilon(2.5e-3));
}

TEST_CASE("coupling vanishes in the linear limit") {
    PhysicalParams p;
    p.n_atoms = 1;
    p.a_s_m = 1e-30;
    CHECK(derive_coupling(p).g1d_si < 1e-55);
}

TEST_CASE("rescaled working constants") {
    PhysicalParams p;
    const ScaledParams s = rescale(p);
    CHECK(s.hbar_bar == 1.0);
    CHECK(s.m_bar == doctest::Approx(1.44e-34 / kHbar).epsilon(1e-14));
    CHECK(s.m_bar == doctest::Approx(1.365484).epsilon(1e-5));
    CHECK(s.m_bar == doctest::Approx(1.37).epsilon(0.01));
    // 2 pi * 50 Hz in rad/ms; the value 0.36 sometimes quoted for this trap
    // is inconsistent with f_z = 50 Hz (the 20 ms period requires 0.3142).
    CHECK(s.omega_z_bar == doctest::Approx(0.3141592653589793).epsilon(1e-14));
    CHECK(s.g1d_bar == doctest::Approx(23.18952).epsilon(1e-5));
    CHECK(s.a_perp_um == doctest::Approx(0.5344867).epsilon(1e-5));
}

TEST_CASE("free propagation turns the trap frequency off") {
    PhysicalParams p;
    p.f_z_hz = 0.0;
    CHECK(rescale(p).omega_z_bar == 0.0);
}

TEST_CASE("round trip to SI recovers the derived quantities") {
    PhysicalParams p;
    const ScaledParams s = rescale(p);
    const SiParams back = to_si(s);
    CHECK(back.mass_kg == doctest::Approx(p.mass_kg).epsilon(1e-10));
    CHECK(back.omega_z_rad_s == doctest::Approx(2.0 * M_PI * p.f_z_hz).epsilon(1e-10));
    CHECK(back.g1d_si == doctest::Approx(derive_coupling(p).g1d_si).epsilon(1e-10));
}

TEST_CASE("g1d_bar scales linearly in atom count and scattering length") {
    PhysicalParams p;
    const double g0 = rescale(p).g1d_bar;
    for (int factor : {2, 3, 7}) {
        PhysicalParams pn = p;
        pn.n_atoms = p.n_atoms * factor;
        CHECK(rescale(pn).g1d_bar == doctest::Approx(factor * g0).epsilon(1e-12));
        PhysicalParams pa = p;
        pa.a_s_m = p.a_s_m * factor;
        CHECK(rescale(pa).g1d_bar == doctest::Approx(factor * g0).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation lists each violation") {
    PhysicalParams p;
    p.mass_kg = -1.0;
    p.a_s_m = 0.0;
    p.n_atoms = 0;
    const auto errors = p.validate();
    CHECK(errors.size() == 3);
}

TEST_CASE("phase wrapping lands in (-pi, pi]") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(-M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(3.0 * M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(2.5 * M_PI) == doctest::Approx(0.5 * M_PI));
    CHECK(wrap_phase(-2.5 * M_PI) == doctest::Approx(-0.5 * M_PI));
}

TEST_SUITE_END();
