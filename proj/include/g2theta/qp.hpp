#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "g2theta/jordan.hpp"
#include "g2theta/monic_cubic.hpp"
#include "g2theta/rational.hpp"

namespace g2theta {

// Signed permutation rotation: orthogonal, det 1, entries in {-1,0,1}.
struct SO3ZElement {
    std::array<std::array<int, 3>, 3> m;

    bool operator==(const SO3ZElement&) const = default;
    bool operator<(const SO3ZElement& o) const { return m < o.m; }

    static SO3ZElement identity() {
        return SO3ZElement{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
    }

    SO3ZElement operator*(const SO3ZElement& o) const {
        SO3ZElement r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
};

// The 24 rotations of the integer lattice: even-signed permutations together
// with odd permutations carrying an odd sign count.
inline const std::vector<SO3ZElement>& so3z_elements() {
    static const std::vector<SO3ZElement> elems = [] {
        std::vector<SO3ZElement> out;
        std::array<int, 3> perm = {0, 1, 2};
        std::sort(perm.begin(), perm.end());
        do {
            // parity of the permutation
            int inv = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (perm[i] > perm[j]) ++inv;
            int perm_sign = (inv % 2 == 0) ? 1 : -1;
            for (int mask = 0; mask < 8; ++mask) {
                int sign_prod = 1;
                std::array<int, 3> sg;
                for (int i = 0; i < 3; ++i) {
                    sg[i] = (mask >> i & 1) ? -1 : 1;
                    sign_prod *= sg[i];
                }
                if (perm_sign * sign_prod != 1) continue;  // det must be 1
                SO3ZElement g{};
                for (int i = 0; i < 3; ++i) g.m[i][perm[i]] = sg[i];
                out.push_back(g);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(out.begin(), out.end());
        return out;
    }();
    return elems;
}

inline SymMat3 conjugate(const SO3ZElement& g, const SymMat3& t) {
    // rows/cols of t as Int 3x3
    std::array<std::array<Int, 3>, 3> T = {{{t.d1, t.o12, t.o13},
                                            {t.o12, t.d2, t.o23},
                                            {t.o13, t.o23, t.d3}}};
    std::array<std::array<Int, 3>, 3> GT{}, R{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += g.m[i][k] * T[k][j];
            GT[i][j] = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += GT[i][k] * g.m[j][k];  // times g^t
            R[i][j] = s;
        }
    return SymMat3{R[0][0], R[1][1], R[2][2], R[1][2], R[0][2], R[0][1]};
}

struct QpOrbit {
    SymMat3 representative;  // lexicographically minimal element
    int size = 0;
    int stabilizer_order = 0;
};

struct QpResult {
    MonicCubic polynomial;
    std::vector<SymMat3> matrices;  // sorted lexicographically
    std::vector<QpOrbit> orbits;
    long total = 0;
};

namespace detail {

// Exhaustive search over |entries| <= bound with pruning on the elementary
// symmetric functions of the spectrum.
inline void enumerate_range(const MonicCubic& p, long bound, long d1_lo, long d1_hi,
                            std::vector<SymMat3>& out) {
    // char poly det(tI + T) = t^3 + tr(T) t^2 + sigma2(T) t + det(T),
    // so tr(T) = a2, sigma2(T) = a1, det(T) = a0.
    if (!p.a2.fits_slong_p() || !p.a1.fits_slong_p() || !p.a0.fits_slong_p())
        throw std::invalid_argument("polynomial coefficients out of supported range");
    const long a2 = p.a2.get_si(), a1 = p.a1.get_si(), a0 = p.a0.get_si();
    for (long d1 = d1_lo; d1 <= d1_hi; ++d1)
        for (long d2 = -bound; d2 <= bound; ++d2) {
            long d3 = a2 - d1 - d2;
            if (d3 < -bound || d3 > bound) continue;
            // sigma2 = d1 d2 + d1 d3 + d2 d3 - (o12^2 + o13^2 + o23^2)
            long ss = d1 * d2 + d1 * d3 + d2 * d3 - a1;
            if (ss < 0) continue;
            for (long o12 = -bound; o12 <= bound; ++o12) {
                long r12 = ss - o12 * o12;
                if (r12 < 0) continue;
                for (long o13 = -bound; o13 <= bound; ++o13) {
                    long r13 = r12 - o13 * o13;
                    if (r13 < 0) continue;
                    long o23a = static_cast<long>(std::lround(std::sqrt(double(r13))));
                    // correct any floating slip
                    while (o23a > 0 && o23a * o23a > r13) --o23a;
                    while ((o23a + 1) * (o23a + 1) <= r13) ++o23a;
                    if (o23a * o23a != r13 || o23a > bound) continue;
                    for (int sgn = 0; sgn < (o23a == 0 ? 1 : 2); ++sgn) {
                        long o23 = sgn ? -o23a : o23a;
                        long det = d1 * d2 * d3 + 2 * o12 * o13 * o23 - d1 * o23 * o23 -
                                   d2 * o13 * o13 - d3 * o12 * o12;
                        if (det != a0) continue;
                        out.push_back(SymMat3{Int(d1), Int(d2), Int(d3), Int(o23),
                                              Int(o13), Int(o12)});
                    }
                }
            }
        }
}

}  // namespace detail

inline QpResult enumerate_qp(const MonicCubic& p, unsigned jobs = 1) {
    QpResult res;
    res.polynomial = p;
    if (!is_totally_real(p)) return res;  // symmetric matrices have real spectra
    Int bound_z = max_abs_root_bound(p);
    if (!bound_z.fits_slong_p())
        throw std::invalid_argument("root bound out of supported range");
    long bound = bound_z.get_si();
    if (jobs <= 1) {
        detail::enumerate_range(p, bound, -bound, bound, res.matrices);
    } else {
        // Partition the d1 range; workers are pure, results merged and sorted.
        std::vector<std::vector<SymMat3>> parts(jobs);
        std::vector<std::thread> workers;
        long span = 2 * bound + 1;
        for (unsigned w = 0; w < jobs; ++w) {
            long lo = -bound + static_cast<long>(span * w / jobs);
            long hi = -bound + static_cast<long>(span * (w + 1) / jobs) - 1;
            workers.emplace_back([&, w, lo, hi] {
                if (lo <= hi) detail::enumerate_range(p, bound, lo, hi, parts[w]);
            });
        }
        for (auto& t : workers) t.join();
        for (auto& part : parts)
            res.matrices.insert(res.matrices.end(), part.begin(), part.end());
    }
    std::sort(res.matrices.begin(), res.matrices.end());
    res.matrices.erase(std::unique(res.matrices.begin(), res.matrices.end()),
                       res.matrices.end());
    res.total = static_cast<long>(res.matrices.size());
    return res;
}

inline QpResult orbit_decompose(QpResult res) {
    const auto& G = so3z_elements();
    res.orbits.clear();
    std::vector<bool> seen(res.matrices.size(), false);
    for (size_t i = 0; i < res.matrices.size(); ++i) {
        if (seen[i]) continue;
        std::vector<SymMat3> orbit;
        int stab = 0;
        for (const auto& g : G) {
            SymMat3 img = conjugate(g, res.matrices[i]);
            if (img == res.matrices[i]) ++stab;
            orbit.push_back(img);
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (const auto& m : orbit) {
            auto it = std::lower_bound(res.matrices.begin(), res.matrices.end(), m);
            if (it == res.matrices.end() || !(*it == m))
                throw std::logic_error("orbit left the enumerated set");
            seen[static_cast<size_t>(it - res.matrices.begin())] = true;
        }
        QpOrbit o;
        o.representative = orbit.front();
        o.size = static_cast<int>(orbit.size());
        o.stabilizer_order = stab;
        if (o.size * o.stabilizer_order != 24)
            throw std::logic_error("orbit-stabilizer mismatch");
        res.orbits.push_back(o);
    }
    return res;
}

}  // namespace g2theta
