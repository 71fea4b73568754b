#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "g2theta/rational.hpp"

namespace g2theta {

// Element of J_0 = H_3(Z): integer symmetric 3x3 matrix
//   [ d1  o12 o13 ]
//   [ o12 d2  o23 ]
//   [ o13 o23 d3  ].
struct SymMat3 {
    Int d1, d2, d3, o23, o13, o12;

    bool operator==(const SymMat3&) const = default;

    // Canonical order: lexicographic on (d1,d2,d3,o23,o13,o12).
    auto key() const { return std::tie(d1, d2, d3, o23, o13, o12); }
    bool operator<(const SymMat3& o) const { return key() < o.key(); }

    Rat entry(int i, int j) const;
};

// Element of J_0^vee: integral diagonal, off-diagonal entries in (1/2)Z.
struct HalfSymMat3 {
    Rat d1, d2, d3, o23, o13, o12;

    HalfSymMat3() : d1(0), d2(0), d3(0), o23(0), o13(0), o12(0) {}
    HalfSymMat3(Rat a, Rat b, Rat c, Rat x23, Rat x13, Rat x12)
        : d1(std::move(a)), d2(std::move(b)), d3(std::move(c)),
          o23(std::move(x23)), o13(std::move(x13)), o12(std::move(x12)) {
        if (!is_integer(d1) || !is_integer(d2) || !is_integer(d3) ||
            !is_half_integer(o23) || !is_half_integer(o13) || !is_half_integer(o12))
            throw std::invalid_argument("not an element of J_0^vee");
    }

    bool operator==(const HalfSymMat3&) const = default;

    bool is_integral() const {
        return is_integer(o23) && is_integer(o13) && is_integer(o12);
    }

    static HalfSymMat3 from(const SymMat3& x) {
        return HalfSymMat3(Rat(x.d1), Rat(x.d2), Rat(x.d3), Rat(x.o23), Rat(x.o13),
                           Rat(x.o12));
    }

    Rat entry(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 0) return d1;
        if (i == 1 && j == 1) return d2;
        if (i == 2 && j == 2) return d3;
        if (i == 0 && j == 1) return o12;
        if (i == 0 && j == 2) return o13;
        return o23;
    }
};

inline Rat SymMat3::entry(int i, int j) const { return HalfSymMat3::from(*this).entry(i, j); }

// omega = (a, b, c, d) in W(Z)^vee = Z + J_0^vee + J_0^vee + Z.
struct WVector {
    Int a;
    HalfSymMat3 b, c;
    Int d;
};

inline Rat det(const HalfSymMat3& x) {
    return x.d1 * (x.d2 * x.d3 - x.o23 * x.o23) - x.o12 * (x.o12 * x.d3 - x.o23 * x.o13) +
           x.o13 * (x.o12 * x.o23 - x.d2 * x.o13);
}

inline Int det(const SymMat3& x) { return rat_num(det(HalfSymMat3::from(x))); }

// Adjugate: X * sharp(X) = det(X) * I.
inline HalfSymMat3 sharp_rational(const HalfSymMat3& x) {
    HalfSymMat3 r;
    r.d1 = x.d2 * x.d3 - x.o23 * x.o23;
    r.d2 = x.d1 * x.d3 - x.o13 * x.o13;
    r.d3 = x.d1 * x.d2 - x.o12 * x.o12;
    r.o23 = x.o13 * x.o12 - x.d1 * x.o23;
    r.o13 = x.o12 * x.o23 - x.d2 * x.o13;
    r.o12 = x.o13 * x.o23 - x.d3 * x.o12;
    return r;
}

inline SymMat3 sharp(const SymMat3& x) {
    HalfSymMat3 r = sharp_rational(HalfSymMat3::from(x));
    return SymMat3{rat_num(r.d1), rat_num(r.d2), rat_num(r.d3),
                   rat_num(r.o23), rat_num(r.o13), rat_num(r.o12)};
}

inline Rat trace(const HalfSymMat3& x) { return x.d1 + x.d2 + x.d3; }
inline Int trace(const SymMat3& x) { return x.d1 + x.d2 + x.d3; }

// tr(XY); the nondegenerate pairing on J.
inline Rat trace_pair(const HalfSymMat3& x, const HalfSymMat3& y) {
    Rat s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x.entry(i, j) * y.entry(j, i);
    return s;
}

inline Rat trace_pair(const SymMat3& x, const SymMat3& y) {
    return trace_pair(HalfSymMat3::from(x), HalfSymMat3::from(y));
}

// True iff omega = (det(c), c^#, c, 1). Only d = 1 is supported; the general
// rank characterization lives outside this library.
inline bool rank_one_d1(const WVector& w) {
    if (w.d != 1) throw std::invalid_argument("rank_one_d1: general-rank unsupported (d != 1)");
    HalfSymMat3 cs = sharp_rational(w.c);
    return w.b == cs && Rat(w.a) == det(w.c);
}

// Exhaustively scan X in J_0^vee with |entries| <= bound for violations of
// "X in J_0^vee and X^# in J_0^vee imply X in J_0". Returns the (expected
// empty) list of counterexamples.
inline std::vector<HalfSymMat3> dual_sharp_scan(int bound) {
    if (bound < 0) throw std::invalid_argument("negative bound");
    if (bound > 8) throw std::invalid_argument("dual_sharp_scan bound too large");
    std::vector<HalfSymMat3> bad;
    // Work with Y = 2X, an integer matrix with even diagonal; then
    // 4 X^# = Y^#, so X^# in J_0^vee iff Y^# has diagonal = 0 mod 4 and
    // off-diagonal = 0 mod 2.
    const int64_t db = 2 * bound;  // diagonal of Y, even values only
    for (int64_t a = -db; a <= db; a += 2)
        for (int64_t b = -db; b <= db; b += 2)
            for (int64_t c = -db; c <= db; c += 2)
                for (int64_t x23 = -db; x23 <= db; ++x23)
                    for (int64_t x13 = -db; x13 <= db; ++x13)
                        for (int64_t x12 = -db; x12 <= db; ++x12) {
                            // adjugate of Y
                            int64_t s1 = b * c - x23 * x23;
                            int64_t s2 = a * c - x13 * x13;
                            int64_t s3 = a * b - x12 * x12;
                            int64_t t23 = x13 * x12 - a * x23;
                            int64_t t13 = x12 * x23 - b * x13;
                            int64_t t12 = x13 * x23 - c * x12;
                            auto mod4 = [](int64_t v) { return ((v % 4) + 4) % 4; };
                            bool sharp_in_dual = mod4(s1) == 0 && mod4(s2) == 0 &&
                                                 mod4(s3) == 0 && t23 % 2 == 0 &&
                                                 t13 % 2 == 0 && t12 % 2 == 0;
                            if (!sharp_in_dual) continue;
                            bool integral = x23 % 2 == 0 && x13 % 2 == 0 && x12 % 2 == 0;
                            if (!integral)
                                bad.push_back(HalfSymMat3(
                                    Rat(static_cast<long>(a / 2)), Rat(static_cast<long>(b / 2)),
                                    Rat(static_cast<long>(c / 2)),
                                    make_rat(Int(static_cast<long>(x23)), 2),
                                    make_rat(Int(static_cast<long>(x13)), 2),
                                    make_rat(Int(static_cast<long>(x12)), 2)));
                        }
    return bad;
}

}  // namespace g2theta
