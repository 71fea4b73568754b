#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "g2theta/binary_cubic.hpp"

namespace g2theta {

// half-integers: value = numerator/2 with numerator odd
struct HalfInt {
    long numerator;  // odd

    explicit HalfInt(long num) : numerator(num) {
        if (num % 2 == 0) throw std::invalid_argument("HalfInt numerator must be odd");
    }
    double value() const { return static_cast<double>(numerator) / 2.0; }
    HalfInt operator-() const { return HalfInt(-numerator); }
    bool operator==(const HalfInt& o) const { return numerator == o.numerator; }
};

inline HalfInt parse_half_int(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long num = std::stol(s.substr(0, slash));
        long den = std::stol(s.substr(slash + 1));
        if (den != 2) throw std::invalid_argument("half-integer must have denominator 2");
        return HalfInt(num);
    }
    throw std::invalid_argument("half-integer must be written as odd/2");
}

// K_{v}(z) for half-integral v, closed form from K_{1/2}(z) = sqrt(pi/2z) e^{-z}
// via K_{v+1}(z) = K_{v-1}(z) + (2v/z) K_v(z) and K_{-v} = K_v
inline double bessel_k_half(const HalfInt& v, double z) {
    if (!(z > 0)) throw std::invalid_argument("bessel_k_half needs z > 0");
    long num = std::labs(v.numerator);  // K_{-v} = K_v
    double k_half = std::sqrt(M_PI / (2.0 * z)) * std::exp(-z);
    double prev = k_half;  // K_{-1/2} = K_{1/2}
    double cur = k_half;   // K_{1/2}
    for (long n = 1; 2 * n - 1 < num; ++n) {
        // step v = n - 1/2: K_{n+1/2} = K_{n-3/2} + (2n-1)/z * K_{n-1/2}
        double next = prev + (static_cast<double>(2 * n - 1) / z) * cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct WhittakerTerm {
    int i;  // exponent of x, equals n+v
    int j;  // exponent of y, equals n-v
    std::complex<double> coeff;
};

struct WhittakerValue {
    std::vector<WhittakerTerm> terms;  // ordered by decreasing v
};

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// unit-modulus phase (|a|/a), exactly normalized
inline std::complex<double> unit_phase_conj(std::complex<double> a) {
    std::complex<double> p = std::conj(a) / std::abs(a);
    return p / std::abs(p);
}

inline std::complex<double> int_power(std::complex<double> u, long e) {
    if (e < 0) return int_power(std::conj(u), -e);  // |u| = 1
    std::complex<double> r = 1.0;
    for (; e > 0; --e) r *= u;
    return r;
}

}  // namespace detail

// nu^{n+1} sum over half-integers v in [-n, n] of
//   (|a|/a)^{2v} K_v(|a|^2) x^{n+v} y^{n-v} / ((n+v)! (n-v)!)
inline WhittakerValue whittaker_value(const HalfInt& n, double nu,
                                      std::complex<double> alpha) {
    if (n.numerator < 1) throw std::invalid_argument("need n >= 1/2");
    if (!(nu > 0)) throw std::invalid_argument("need nu > 0");
    if (alpha == std::complex<double>(0.0)) throw std::invalid_argument("alpha must be nonzero");
    double mod2 = std::norm(alpha);
    std::complex<double> phase = detail::unit_phase_conj(alpha);  // |a|/a
    double pre = std::pow(nu, n.value() + 1.0);
    WhittakerValue out;
    for (long vn = n.numerator; vn >= -n.numerator; vn -= 2) {
        HalfInt v(vn);
        int ip = static_cast<int>((n.numerator + vn) / 2);  // n+v
        int jp = static_cast<int>((n.numerator - vn) / 2);  // n-v
        std::complex<double> c = pre * detail::int_power(phase, vn) * bessel_k_half(v, mod2) /
                                 (detail::factorial(ip) * detail::factorial(jp));
        out.terms.push_back({ip, jp, c});
    }
    return out;
}

// sqrt(pi nu^3 / 2) (e^{-|a|^2}/|a|) [ (|a|/a) x + (a/|a|) y ]
inline WhittakerValue ell1_closed_form(double nu, std::complex<double> alpha) {
    if (!(nu > 0)) throw std::invalid_argument("need nu > 0");
    if (alpha == std::complex<double>(0.0)) throw std::invalid_argument("alpha must be nonzero");
    double r = std::abs(alpha);
    double pre = std::sqrt(M_PI * nu * nu * nu / 2.0) * std::exp(-r * r) / r;
    std::complex<double> phase = detail::unit_phase_conj(alpha);  // |a|/a
    WhittakerValue out;
    out.terms.push_back({1, 0, pre * phase});
    out.terms.push_back({0, 1, pre * std::conj(phase)});
    return out;
}

// alpha^2 = -j * f(z, 1) for positive-semidefinite f and Im z > 0
inline std::complex<double> alpha_squared(const BinaryCubic& f, std::complex<double> z,
                                          double j) {
    if (psd_classify(f) != PsdClass::PSD)
        throw std::invalid_argument("cubic form must be positive semidefinite");
    if (!(z.imag() > 0)) throw std::invalid_argument("need Im z > 0");
    std::complex<double> p = ((std::complex<double>(f.a.get_d()) * z +
                               std::complex<double>(f.b.get_d())) *
                                  z +
                              std::complex<double>(f.c.get_d())) *
                                 z +
                             std::complex<double>(f.d.get_d());
    return -j * p;
}

}  // namespace g2theta
