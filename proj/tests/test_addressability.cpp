#include <doctest.h>

#include "qda/addressability.hpp"
#include "qda/geometry.hpp"

using namespace qda;
using units::nm;

TEST_CASE("rabi conversion is consistent with the reference pairs' rounding bands") {
    // Both columns of the reference table are independently rounded to two
    // significant figures from unrounded simulation values, so the check is
    // band consistency: some b_trans inside the printed value's rounding band
    // must map onto the printed f_Rabi's band.
    struct Pair { double bt, f; };
    for (auto [bt, f] : {Pair{1.1, 13}, {1.2, 14}, {0.56, 6.8}, {0.62, 7.4}, {0.73, 8.7},
                         {0.77, 9.3}, {0.60, 7.2}, {0.76, 9.2}}) {
        double got = rabi_frequency_mhz(bt);
        auto half_ulp_2sf = [](double v) {
            return 0.5 * std::pow(10.0, std::floor(std::log10(v)) - 1.0);
        };
        double slack = 12.0 * half_ulp_2sf(bt) + half_ulp_2sf(f);
        CHECK(std::abs(got - f) <= slack);
    }
    CHECK(rabi_frequency_mhz(0.0) == 0.0);
    CHECK(rabi_frequency_mhz(1.0, 24.0) == doctest::Approx(24.0));
    CHECK_THROWS_AS(rabi_frequency_mhz(-0.1), std::invalid_argument);
}

TEST_CASE("delta_fr conversions") {
    CHECK(delta_fr_mhz(100.0, 100.0) == 0.0);
    // 6 mT splitting: 168 MHz at gamma = 28, bracketing the reference 160
    CHECK(delta_fr_mhz(106.0, 100.0) == doctest::Approx(168.0));
    CHECK(delta_fr_mhz(106.0, 100.0, 26.7) == doctest::Approx(160.2));
    // 0.03 mT/nm over a 120 nm pitch corresponds to ~100 MHz
    double db = 0.03 * 120;
    CHECK(delta_fr_mhz(db, 0.0) == doctest::Approx(100.8));
    CHECK(delta_fr_mhz(1.0, 3.5) == delta_fr_mhz(3.5, 1.0));
}

TEST_CASE("b_trans definition on a synthetic uniform gradient") {
    // dBy/dx = g with B_ext and drive along x: b_trans must equal g exactly
    GradientTensor t;
    t.g[1][0] = 2.0e6;  // 2 mT/nm in T/m
    CHECK(b_trans_from_gradient(t, {1, 0, 0}, {1, 0, 0}) == doctest::Approx(2.0));
    // a longitudinal slope alone contributes nothing
    GradientTensor tl;
    tl.g[0][0] = 5.0e6;
    CHECK(b_trans_from_gradient(tl, {1, 0, 0}, {1, 0, 0}) == 0.0);
    // both transverse rows enter through the euclidean norm
    GradientTensor t2;
    t2.g[1][0] = 3.0e5;
    t2.g[2][0] = 4.0e5;
    CHECK(b_trans_from_gradient(t2, {1, 0, 0}, {1, 0, 0}) == doctest::Approx(0.5));
}

TEST_CASE("zero assembly gives zero metrics and a false verdict") {
    MagnetAssembly zero;
    zero.add({{-1e-6, -1e-6, 1e-7}, {1e-6, 1e-6, 2e-7}, {0, 0, 0}});
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    CHECK(b_trans_at(zero, l, 1, 1) == 0.0);
    CHECK(b_long_at(zero, l, 1, 1) == 0.0);
    AddressabilityReport r = addressability_report(zero, l);
    CHECK_FALSE(r.addressable);
    for (const auto& d : r.dots) {
        CHECK(d.f_rabi_mhz == 0.0);
        CHECK(d.b_long_mt == 0.0);
    }
}

TEST_CASE("symmetric layout gives equal B_long on mirror dots") {
    // plate far below the plane, symmetric about y = 0
    MagnetAssembly a;
    a.add({{-2e-6, -2e-6, -3e-6}, {2e-6, 2e-6, -2e-6}, {1.0e6, 0, 0}});
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    CHECK(b_long_at(a, l, 0, 0) == doctest::Approx(b_long_at(a, l, 2, 0)).epsilon(1e-12));
    CHECK(b_long_at(a, l, 0, 2) == doctest::Approx(b_long_at(a, l, 2, 2)).epsilon(1e-12));
}

TEST_CASE("report structure invariants") {
    MagnetAssembly a = build_mm_3x3();
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    AddressabilityReport r = addressability_report(a, l);
    const int n = 9;
    SUBCASE("delta matrix symmetric with zero diagonal") {
        for (int i = 0; i < n; ++i) {
            CHECK(r.delta_fr[i][i] == 0.0);
            for (int j = 0; j < n; ++j) CHECK(r.delta_fr[i][j] == r.delta_fr[j][i]);
        }
    }
    SUBCASE("min_pairwise_delta is the off-diagonal minimum") {
        double m = 1e300;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) m = std::min(m, r.delta_fr[i][j]);
        CHECK(r.min_pairwise_delta_mhz == m);
    }
    SUBCASE("reference dot is the center and shifts are consistent") {
        CHECK(r.dots[4].f_r_shift_mhz == 0.0);
        // pairwise deltas are reference-independent: |shift_i - shift_j|
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(r.delta_fr[i][j] ==
                      doctest::Approx(std::abs(r.dots[i].f_r_shift_mhz -
                                               r.dots[j].f_r_shift_mhz)).epsilon(1e-9));
    }
    SUBCASE("margin must exceed 1") {
        AddressabilityParams p;
        p.margin = 0.9;
        CHECK_THROWS_AS(addressability_report(a, l, p), std::invalid_argument);
    }
}

TEST_CASE("linearity: scaling magnetization scales the metrics and keeps the verdict") {
    Mm3x3Params base;
    MagnetAssembly a1 = build_mm_3x3(base);
    Mm3x3Params half = base;
    half.magnetization = 0.7e6;
    MagnetAssembly a2 = build_mm_3x3(half);
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    AddressabilityReport r1 = addressability_report(a1, l);
    AddressabilityReport r2 = addressability_report(a2, l);
    double k = 0.7e6 / 1.4e6;
    for (int i = 0; i < 9; ++i) {
        CHECK(r2.dots[i].b_long_mt == doctest::Approx(k * r1.dots[i].b_long_mt).epsilon(1e-9));
        CHECK(r2.dots[i].b_trans_mt_per_nm ==
              doctest::Approx(k * r1.dots[i].b_trans_mt_per_nm).epsilon(1e-9));
    }
    CHECK(r1.addressable == r2.addressable);
}

TEST_CASE("mm3x3 committed defaults meet the reconstruction targets") {
    MagnetAssembly a = build_mm_3x3();
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    AddressabilityReport r = addressability_report(a, l);
    for (const auto& d : r.dots) {
        CHECK(d.b_trans_mt_per_nm >= 0.4);
        CHECK(d.b_trans_mt_per_nm <= 1.5);
    }
    CHECK(r.min_pairwise_delta_mhz / 28.0 >= 5.0);  // mT
    CHECK(r.addressable);
}
