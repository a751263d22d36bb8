#include <doctest.h>

#include <cmath>

#include "bessel.hpp"
#include "oracles.hpp"

using namespace elastdort;

TEST_CASE("bessel_j at the origin") {
    auto e = bessel_j(0, 0.0);
    CHECK(e.value.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(e.first_derivative) == doctest::Approx(0.0));
}

TEST_CASE("bessel_j small argument matches 4-term ascending series") {
    // independent oracle: J_n(z) = sum_k (-1)^k (z/2)^{n+2k} / (k! (n+k)!)
    int n = 3;
    double z = 0.01;
    double s = 0.0;
    for (int k = 0; k < 4; ++k)
        s += std::pow(-1.0, k) * std::pow(z / 2.0, n + 2 * k) /
             (std::tgamma(k + 1.0) * std::tgamma(n + k + 1.0));
    auto e = bessel_j(n, z);
    CHECK(e.value.real() == doctest::Approx(s).epsilon(1e-8));
}

TEST_CASE("bessel_j integral identity") {
    // J_2(1.7) = (-i)^2/pi * int_0^pi e^{i 1.7 cos t} cos(2t) dt, 2000-pt trapezoid
    cd val = oracle::segment_trapezoid(0.0, M_PI, 2000, [](double t) {
        return std::exp(cd(0.0, 1.7 * std::cos(t))) * std::cos(2.0 * t);
    });
    cd expected = cd(-1.0, 0.0) / M_PI * val;
    auto e = bessel_j(2, 1.7);
    CHECK(std::abs(e.value - expected) / std::abs(expected) < 1e-9);
}

TEST_CASE("hankel1 small-z logarithmic behaviour") {
    double z = 1e-4;
    const double euler = 0.5772156649015329;
    cd expected = 1.0 + cd(0.0, 2.0 / M_PI) * (std::log(z / 2.0) + euler);
    auto e = hankel1(0, z);
    CHECK(std::abs(e.value - expected) / std::abs(expected) < 1e-4);
}

TEST_CASE("hankel1 Wronskian") {
    double z = 10.0;
    auto j = bessel_j(1, z);
    auto h = hankel1(1, z);
    // Y = (H - J)/i
    cd y = (h.value - j.value) / cd(0.0, 1.0);
    cd yp = (h.first_derivative - j.first_derivative) / cd(0.0, 1.0);
    cd w = j.value * yp - j.first_derivative * y;
    CHECK(std::abs(w - 2.0 / (M_PI * z)) / std::abs(w) < 1e-12);
}

TEST_CASE("hankel1 dominated by leading pole term at small z") {
    int n = 5;
    double z = 0.005;
    cd lead = cd(0.0, -1.0) * std::pow(2.0, n) * std::tgamma(double(n)) / M_PI * std::pow(z, -n);
    auto e = hankel1(n, z);
    CHECK(std::abs(e.value - lead) / std::abs(lead) < 1e-4);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(hankel1(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2, std::nan("")), std::domain_error);
}

TEST_CASE("small_z_series two-term truncations") {
    CHECK(small_z_series(0, 0.0, SeriesKind::J) == cd(1.0, 0.0));
    cd j = small_z_series(2, 0.1, SeriesKind::J);
    double want = (0.1 * 0.1 - std::pow(0.1, 4) / 12.0) / (4.0 * std::tgamma(3.0));
    CHECK(j.real() == doctest::Approx(want).epsilon(1e-14));
    cd h = small_z_series(2, 0.1, SeriesKind::H1);
    cd wanth = cd(0.0, -1.0) * 4.0 * std::tgamma(2.0) / M_PI * (std::pow(0.1, -2) + 0.25);
    CHECK(std::abs(h - wanth) < 1e-12 * std::abs(wanth));
    CHECK_THROWS_AS(small_z_series(-1, 0.1, SeriesKind::J), std::domain_error);
    CHECK_THROWS_AS(small_z_series(1, 0.1, SeriesKind::H1), std::domain_error);
}

TEST_CASE("series truncation error tracks the next omitted term") {
    for (int n = 0; n <= 8; ++n)
        for (double z : {1e-3, 1e-2, 0.1}) {
            cd truncated = small_z_series(n, z, SeriesKind::J);
            cd full = bessel_j(n, z).value;
            double next = std::pow(z / 2.0, n + 4) /
                          (std::tgamma(3.0) * std::tgamma(n + 3.0));
            CHECK(std::abs(full - truncated) <= 4.0 * next + 1e-300);
        }
}

TEST_CASE("three-term recurrence") {
    for (int n = -10; n <= 10; ++n)
        for (double z : {0.1, 1.0, 10.0}) {
            auto cm = hankel1(n - 1, z).value;
            auto cp = hankel1(n + 1, z).value;
            auto c0 = hankel1(n, z).value;
            CHECK(std::abs(cm + cp - 2.0 * n / z * c0) <=
                  1e-10 * (std::abs(cm) + std::abs(cp) + std::abs(c0)));
            auto jm = bessel_j(n - 1, z).value;
            auto jp = bessel_j(n + 1, z).value;
            auto j0 = bessel_j(n, z).value;
            CHECK(std::abs(jm + jp - 2.0 * n / z * j0) <=
                  1e-10 * (std::abs(jm) + std::abs(jp) + std::abs(j0)) + 1e-280);
        }
}

TEST_CASE("parity") {
    for (int n : {1, 2, 5}) {
        double z = 2.3;
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(bessel_j(-n, z).value == sign * bessel_j(n, z).value);
        CHECK(hankel1(-n, z).value == sign * hankel1(n, z).value);
    }
}

TEST_CASE("ODE consistency with independently differenced first derivative") {
    for (int n : {0, 1, 4})
        for (double z : {0.01, 0.5, 7.0, 50.0}) {
            auto e = hankel1(n, z);
            double h = 1e-6 * std::max(1.0, z);
            if (z - h <= 0.0) h = z / 2;
            cd dnum = (hankel1(n, z + h).value - hankel1(n, z - h).value) / (2.0 * h);
            CHECK(std::abs(e.first_derivative - dnum) <=
                  1e-5 * std::abs(e.first_derivative));
            // ODE: z^2 C'' + z C' + (z^2 - n^2) C = 0
            cd res = z * z * e.second_derivative + z * e.first_derivative +
                     (z * z - double(n) * n) * e.value;
            double scale = std::abs(z * z * e.second_derivative) + std::abs(e.value) * z * z +
                           std::abs(e.value) * n * n;
            CHECK(std::abs(res) <= 1e-10 * scale);
        }
}

TEST_CASE("hankel equals J + iY") {
    for (int n : {0, 3})
        for (double z : {0.3, 12.0}) {
            auto h = hankel1(n, z);
            auto j = bessel_j(n, z);
            CHECK(std::abs(h.value.real() - j.value.real()) <= 1e-12 * std::abs(h.value));
        }
}
