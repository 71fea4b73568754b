#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "g2theta/whittaker.hpp"

using namespace g2theta;
using std::complex;

namespace {

// independent oracle: K_v(z) = integral_0^inf e^{-z cosh t} cosh(v t) dt by
// composite Simpson quadrature
double bessel_quad(double v, double z) {
    const int n = 200000;
    const double T = 50.0 / (1.0 + z) + 12.0;
    const double h = T / n;
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        double t = k * h;
        double f = std::exp(-z * std::cosh(t)) * std::cosh(v * t);
        s += f * ((k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0));
    }
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("half-integral Bessel values") {
    CHECK(bessel_k_half(HalfInt{1}, 1.0) ==
          Catch::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0)).epsilon(1e-14));
    for (long num : {1L, 3L, 5L, -3L})
        for (double z : {0.5, 1.0, 2.7}) {
            double v = num / 2.0;
            CHECK(bessel_k_half(HalfInt{num}, z) == Catch::Approx(bessel_quad(v, z)).epsilon(1e-9));
        }
    // recurrence K_{v+1} = K_{v-1} + (2v/z) K_v
    double z = 1.3;
    CHECK(bessel_k_half(HalfInt{5}, z) ==
          Catch::Approx(bessel_k_half(HalfInt{1}, z) + (3.0 / z) * bessel_k_half(HalfInt{3}, z))
              .epsilon(1e-13));
    CHECK_THROWS_AS(bessel_k_half(HalfInt{1}, 0.0), std::invalid_argument);
}

TEST_CASE("lowest-weight value matches the closed form") {
    for (double nu : {0.5, 1.0, 2.0})
        for (complex<double> a : {complex<double>(0.7, 0.0), complex<double>(0.3, 0.4),
                                  complex<double>(-1.1, 0.2)}) {
            WhittakerValue w = whittaker_value(HalfInt{1}, nu, a);
            WhittakerValue e = ell1_closed_form(nu, a);
            REQUIRE(w.terms.size() == e.terms.size());
            for (size_t k = 0; k < w.terms.size(); ++k) {
                CHECK(w.terms[k].i == e.terms[k].i);
                CHECK(std::abs(w.terms[k].coeff - e.terms[k].coeff) < 1e-12);
            }
        }
}

TEST_CASE("real positive parameter gives equal symmetric coefficients") {
    WhittakerValue w = whittaker_value(HalfInt{3}, 1.0, complex<double>(0.8, 0.0));
    for (const auto& t : w.terms) {
        // the term with exponents swapped has the conjugate-phase coefficient,
        // which is equal for real positive alpha
        for (const auto& u : w.terms)
            if (u.i == t.j && u.j == t.i) CHECK(std::abs(u.coeff - t.coeff) < 1e-15);
    }
}

TEST_CASE("negating the parameter negates odd-phase terms exactly") {
    complex<double> a(0.3, 0.4);
    WhittakerValue w1 = whittaker_value(HalfInt{3}, 1.0, a);
    WhittakerValue w2 = whittaker_value(HalfInt{3}, 1.0, -a);
    REQUIRE(w1.terms.size() == w2.terms.size());
    for (size_t k = 0; k < w1.terms.size(); ++k) {
        int v_twice = w1.terms[k].i - w1.terms[k].j;  // 2v
        complex<double> expect = (v_twice % 2 == 0 ? w1.terms[k].coeff : -w1.terms[k].coeff);
        CHECK(w2.terms[k].coeff == expect);  // sign flip is exact in binary64
    }
}

TEST_CASE("argument built from an admissible cubic form") {
    // f = y^3 alone: f(z,1) = 1, so the argument is -j
    BinaryCubic f{Int(0), Int(0), Int(0), Int(1)};
    complex<double> z(0.0, 1.0);
    CHECK(std::abs(alpha_squared(f, z, 1.0) - complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK_THROWS_AS(alpha_squared(BinaryCubic{Int(1), Int(0), Int(1), Int(0)}, z, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(alpha_squared(f, complex<double>(0.0, -1.0), 1.0), std::invalid_argument);
}

TEST_CASE("half-integer parsing") {
    CHECK(parse_half_int("3/2").numerator == 3);
    CHECK(parse_half_int("-1/2").numerator == -1);
    CHECK_THROWS_AS(parse_half_int("2/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("1/3"), std::invalid_argument);
}
