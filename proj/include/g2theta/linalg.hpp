#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "g2theta/rational.hpp"

namespace g2theta {

using Vec3 = std::array<Rat, 3>;
using Mat3 = std::array<Vec3, 3>;

inline Vec3 mat_apply(const Mat3& a, const Vec3& v) {
    Vec3 r = {Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline Rat det3(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Gauss-Jordan; throws on a singular matrix.
inline Mat3 inverse3(const Mat3& a) {
    Mat3 m = a;
    Mat3 inv{};
    for (int i = 0; i < 3; ++i) inv[i][i] = 1;
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (int j = 0; j < 3; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < 3; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Vec3 solve3(const Mat3& a, const Vec3& b) { return mat_apply(inverse3(a), b); }

using IntRow3 = std::array<Int, 3>;

// Row Hermite normal form of the lattice spanned by the given rows: returns
// exactly three rows, upper triangular with positive diagonal and entries
// above each pivot reduced mod the pivot. Throws if the rows span a lattice
// of rank < 3.
inline std::array<IntRow3, 3> hnf_rows(std::vector<IntRow3> rows) {
    std::array<IntRow3, 3> out{};
    size_t used = 0;
    for (int col = 0; col < 3; ++col) {
        // Euclidean reduction on column `col` among rows[used..]
        while (true) {
            size_t best = rows.size();
            for (size_t r = used; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() ||
                     int_abs(rows[r][col]) < int_abs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[used], rows[best]);
            bool clean = true;
            for (size_t r = used + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                           rows[used][col].get_mpz_t());
                for (int j = 0; j < 3; ++j) rows[r][j] -= q * rows[used][j];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (used >= rows.size() || rows[used][col] == 0)
            throw std::domain_error("rows do not span a rank-3 lattice");
        if (rows[used][col] < 0)
            for (int j = 0; j < 3; ++j) rows[used][j] = -rows[used][j];
        out[static_cast<size_t>(col)] = rows[used];
        ++used;
    }
    // Reduce entries above each pivot; ascending column order so a later
    // reduction never disturbs an earlier column (row `col` starts with zeros).
    for (int col = 1; col <= 2; ++col)
        for (int r = 0; r < col; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), out[r][col].get_mpz_t(),
                       out[col][col].get_mpz_t());
            for (int j = 0; j < 3; ++j) out[r][j] -= q * out[col][j];
        }
    return out;
}

}  // namespace g2theta
