#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "g2theta/binary_cubic.hpp"
#include "g2theta/cubic_ring.hpp"
#include "g2theta/jordan.hpp"
#include "g2theta/metaplectic.hpp"
#include "g2theta/monic_cubic.hpp"
#include "g2theta/qp.hpp"
#include "g2theta/rootsys_f4.hpp"
#include "g2theta/table.hpp"
#include "g2theta/whittaker.hpp"

namespace g2theta {

struct CheckOutcome {
    std::string id;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    double seconds = 0.0;
    bool pass() const { return failures == 0; }
};

struct CheckSpec {
    std::string id;
    std::string description;
    std::string anchor;  // the mathematical statement being exercised
    std::function<CheckOutcome(std::uint64_t seed)> run;
};

namespace checks_detail {

inline MonicCubic random_cubic(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return MonicCubic{Int(d(rng)), Int(d(rng)), Int(d(rng))};
}

// determinant of a square rational matrix by Gaussian elimination
inline Rat dense_det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Res(p, p') of a monic cubic via the 5x5 Sylvester matrix
inline Rat sylvester_resultant(const MonicCubic& p) {
    Rat a3 = 1, a2(p.a2), a1(p.a1), a0(p.a0);
    Rat b2 = 3, b1 = 2 * a2, b0 = a1;
    std::vector<std::vector<Rat>> s = {
        {a3, a2, a1, a0, 0},
        {0, a3, a2, a1, a0},
        {b2, b1, b0, 0, 0},
        {0, b2, b1, b0, 0},
        {0, 0, b2, b1, b0},
    };
    return dense_det(s);
}

// char poly det(tI + T) by evaluation at t = 0..3 and Lagrange interpolation;
// independent of the trace/adjugate route used elsewhere
inline MonicCubic charpoly_interp(const SymMat3& T) {
    std::array<Rat, 4> val;
    for (int t = 0; t < 4; ++t) {
        std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(T.entry(i, j));
                if (i == j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] += t;
            }
        val[static_cast<size_t>(t)] = dense_det(m);
    }
    // p(t) = t^3 + a2 t^2 + a1 t + a0 through the four sampled values
    Rat a0 = val[0];
    // solve the remaining 3x3 Vandermonde in (a2, a1) plus leading 1
    Rat r1 = val[1] - 1 - a0;  // a2 + a1
    Rat r2 = val[2] - 8 - a0;  // 4 a2 + 2 a1
    Rat r3 = val[3] - 27 - a0; // 9 a2 + 3 a1
    Rat a2 = (r2 - 2 * r1) / 2;
    Rat a1 = r1 - a2;
    if (9 * a2 + 3 * a1 != r3) throw std::logic_error("interpolation inconsistent");
    return MonicCubic{rat_num(a2), rat_num(a1), rat_num(a0)};
}

inline QpResult qp_with_orbits(const MonicCubic& p) {
    return orbit_decompose(enumerate_qp(p, 4));
}

inline std::vector<SymMat3> brute_force_qp(const MonicCubic& p, long bound) {
    std::vector<SymMat3> out;
    SymMat3 T;
    for (long d1 = -bound; d1 <= bound; ++d1)
        for (long d2 = -bound; d2 <= bound; ++d2)
            for (long d3 = -bound; d3 <= bound; ++d3)
                for (long o23 = -bound; o23 <= bound; ++o23)
                    for (long o13 = -bound; o13 <= bound; ++o13)
                        for (long o12 = -bound; o12 <= bound; ++o12) {
                            T = SymMat3{Int(d1), Int(d2), Int(d3),
                                        Int(o23), Int(o13), Int(o12)};
                            MonicCubic q = charpoly_interp(T);
                            if (q.a2 == p.a2 && q.a1 == p.a1 && q.a0 == p.a0)
                                out.push_back(T);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

// integrate e^{-z cosh t} cosh(v t) on [0, T] by composite Simpson
inline double bessel_quadrature(double v, double z) {
    double T = 50.0 / (1.0 + z) + 12.0;
    const int N = 400000;
    double h = T / N, s = 0;
    auto f = [&](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(v * t); };
    for (int i = 0; i < N; i += 2) s += f(i * h) + 4 * f((i + 1) * h) + f((i + 2) * h);
    return s * h / 3.0;
}

template <class Fn>
inline CheckOutcome timed(const std::string& id, Fn&& fn) {
    CheckOutcome o;
    o.id = id;
    auto t0 = std::chrono::steady_clock::now();
    fn(o);
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

inline const std::vector<Place>& check_places() {
    static const std::vector<Place> v = {Place::finite(Int(2)), Place::finite(Int(3)),
                                         Place::finite(Int(5)), Place::finite(Int(7)),
                                         Place::infinite()};
    return v;
}

}  // namespace checks_detail

inline const std::vector<CheckSpec>& check_registry() {
    namespace cd = checks_detail;
    static const std::vector<CheckSpec> registry = {
        {"algebra.root-count-vs-disc",
         "number of isolated real roots is 3 when disc > 0, 1 when disc < 0",
         "sign of the cubic discriminant",
         [](std::uint64_t seed) {
             return cd::timed("algebra.root-count-vs-disc", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 for (int i = 0; i < 1000; ++i) {
                     MonicCubic p = cd::random_cubic(rng, 50);
                     Int d = discriminant(p);
                     if (d == 0) continue;
                     ++o.samples;
                     auto roots = isolate_real_roots(p, make_rat(Int(1), Int(16)));
                     size_t expect = d > 0 ? 3 : 1;
                     if (roots.size() != expect) ++o.failures;
                 }
             });
         }},
        {"algebra.disc-vs-resultant",
         "discriminant(p) = -Res(p, p') via an independent Sylvester determinant",
         "discriminant-resultant identity",
         [](std::uint64_t seed) {
             return cd::timed("algebra.disc-vs-resultant", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 for (int i = 0; i < 1000; ++i) {
                     MonicCubic p = cd::random_cubic(rng, 50);
                     ++o.samples;
                     if (Rat(discriminant(p)) != -cd::sylvester_resultant(p)) ++o.failures;
                 }
             });
         }},
        {"algebra.interval-contains-root",
         "each isolated interval contains a sign change of p or an exact root",
         "soundness of Sturm isolation",
         [](std::uint64_t seed) {
             return cd::timed("algebra.interval-contains-root", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 for (int i = 0; i < 500; ++i) {
                     MonicCubic p = cd::random_cubic(rng, 30);
                     Poly q = {Rat(p.a0), Rat(p.a1), Rat(p.a2), Rat(1)};
                     for (const auto& iv : isolate_real_roots(p, make_rat(Int(1), Int(8)))) {
                         ++o.samples;
                         if (iv.interval.lo == iv.interval.hi) {
                             if (poly_eval(q, iv.interval.lo) != 0) ++o.failures;
                         } else if (sgn(poly_eval(q, iv.interval.lo)) *
                                        sgn(poly_eval(q, iv.interval.hi)) >=
                                    0)
                             ++o.failures;
                     }
                 }
             });
         }},
        {"jordan.adjugate-identity",
         "X X^# = det(X) I on 1000 random symmetric matrices",
         "adjugate identity in the rank-3 Jordan algebra",
         [](std::uint64_t seed) {
             return cd::timed("jordan.adjugate-identity", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_int_distribution<long> d(-20, 20);
                 for (int i = 0; i < 1000; ++i) {
                     ++o.samples;
                     SymMat3 x{Int(d(rng)), Int(d(rng)), Int(d(rng)),
                               Int(d(rng)), Int(d(rng)), Int(d(rng))};
                     HalfSymMat3 hx = HalfSymMat3::from(x);
                     HalfSymMat3 sx = sharp_rational(hx);
                     Rat dx(det(x));
                     bool ok = true;
                     for (int r = 0; r < 3; ++r)
                         for (int c = 0; c < 3; ++c) {
                             Rat s = 0;
                             for (int k = 0; k < 3; ++k) s += hx.entry(r, k) * sx.entry(k, c);
                             if (s != (r == c ? dx : Rat(0))) ok = false;
                         }
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"jordan.double-sharp",
         "(X^#)^# = det(X) X on the same sample",
         "degree-3 adjugate squaring identity",
         [](std::uint64_t seed) {
             return cd::timed("jordan.double-sharp", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_int_distribution<long> d(-20, 20);
                 for (int i = 0; i < 1000; ++i) {
                     ++o.samples;
                     SymMat3 x{Int(d(rng)), Int(d(rng)), Int(d(rng)),
                               Int(d(rng)), Int(d(rng)), Int(d(rng))};
                     HalfSymMat3 hx = HalfSymMat3::from(x);
                     HalfSymMat3 ss = sharp_rational(sharp_rational(hx));
                     Rat dx(det(x));
                     bool ok = true;
                     for (int r = 0; r < 3; ++r)
                         for (int c = 0; c < 3; ++c)
                             if (ss.entry(r, c) != dx * hx.entry(r, c)) ok = false;
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"jordan.trace-pair-bilinear",
         "trace pairing is symmetric and bilinear",
         "symmetry/bilinearity of tr(XY)",
         [](std::uint64_t seed) {
             return cd::timed("jordan.trace-pair-bilinear", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_int_distribution<long> d(-20, 20);
                 auto rnd = [&] {
                     return HalfSymMat3::from(SymMat3{Int(d(rng)), Int(d(rng)), Int(d(rng)),
                                                      Int(d(rng)), Int(d(rng)), Int(d(rng))});
                 };
                 for (int i = 0; i < 500; ++i) {
                     ++o.samples;
                     HalfSymMat3 x = rnd(), y = rnd(), z = rnd();
                     bool ok = trace_pair(x, y) == trace_pair(y, x);
                     HalfSymMat3 xz(x.d1 + z.d1, x.d2 + z.d2, x.d3 + z.d3,
                                    x.o23 + z.o23, x.o13 + z.o13, x.o12 + z.o12);
                     ok = ok && trace_pair(xz, y) == trace_pair(x, y) + trace_pair(z, y);
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"jordan.dual-sharp-scan",
         "no half-integral counterexample to the adjugate dual-lattice containment, bounds 1..3",
         "dual-lattice adjugate containment",
         [](std::uint64_t) {
             return cd::timed("jordan.dual-sharp-scan", [&](CheckOutcome& o) {
                 for (long b = 1; b <= 3; ++b) {
                     ++o.samples;
                     if (!dual_sharp_scan(b).empty()) ++o.failures;
                 }
             });
         }},
        {"cubicform.trace-map-charpoly",
         "the rank-one vector of T maps to a form whose companion is char(T), full box [-3,3]",
         "trace map versus characteristic polynomial",
         [](std::uint64_t) {
             return cd::timed("cubicform.trace-map-charpoly", [&](CheckOutcome& o) {
                 for (long d1 = -3; d1 <= 3; ++d1)
                     for (long d2 = -3; d2 <= 3; ++d2)
                         for (long d3 = -3; d3 <= 3; ++d3)
                             for (long o23 = -3; o23 <= 3; ++o23)
                                 for (long o13 = -3; o13 <= 3; ++o13)
                                     for (long o12 = -3; o12 <= 3; ++o12) {
                                         ++o.samples;
                                         SymMat3 T{Int(d1), Int(d2), Int(d3),
                                                   Int(o23), Int(o13), Int(o12)};
                                         HalfSymMat3 h = HalfSymMat3::from(T);
                                         WVector w{det(T), HalfSymMat3::from(sharp(T)), h,
                                                   Int(1)};
                                         BinaryCubic f = trace_map(w);
                                         MonicCubic c = companion(f);
                                         MonicCubic ref = cd::charpoly_interp(T);
                                         if (c.a2 != ref.a2 || c.a1 != ref.a1 || c.a0 != ref.a0)
                                             ++o.failures;
                                     }
             });
         }},
        {"cubicform.psd-vs-real-roots",
         "PSD iff totally real companion; negative form discriminant with a != 0 is NOT_PSD",
         "positivity criterion for binary cubics",
         [](std::uint64_t seed) {
             return cd::timed("cubicform.psd-vs-real-roots", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_int_distribution<long> d(-9, 9);
                 for (int i = 0; i < 2000; ++i) {
                     ++o.samples;
                     BinaryCubic f{Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng))};
                     bool ok = true;
                     if (f.d == 1) {
                         MonicCubic c = companion(f);
                         if (is_totally_real(c) && psd_classify(f) != PsdClass::PSD) ok = false;
                     }
                     if (form_discriminant(f) < 0 && f.a != 0 &&
                         psd_classify(f) != PsdClass::NOT_PSD)
                         ok = false;
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"cubicform.reversal-realness",
         "coefficient reversal preserves all-roots-real for the projective form",
         "projective invariance of realness",
         [](std::uint64_t seed) {
             return cd::timed("cubicform.reversal-realness", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_int_distribution<long> d(-9, 9);
                 for (int i = 0; i < 2000; ++i) {
                     ++o.samples;
                     BinaryCubic f{Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng))};
                     if (psd_classify(f) != psd_classify(f.reversed())) ++o.failures;
                 }
             });
         }},
        {"qp.brute-force-exhaustive",
         "pruned enumeration equals the unpruned box search for small-root cubics",
         "exhaustiveness of the matrix enumeration",
         [](std::uint64_t seed) {
             return cd::timed("qp.brute-force-exhaustive", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 int done = 0;
                 while (done < 6) {
                     MonicCubic p = cd::random_cubic(rng, 9);
                     if (!is_totally_real(p) || max_abs_root_bound(p) > 3) continue;
                     ++done;
                     ++o.samples;
                     auto fast = enumerate_qp(p);
                     auto slow = cd::brute_force_qp(p, 3);
                     if (fast.matrices != slow) ++o.failures;
                 }
                 // the three largest table rows, against a wider box
                 for (const char* s : {"t^3-t^2-2t+1", "(t-1)(t^2-2)"}) {
                     ++o.samples;
                     MonicCubic p = parse_monic_cubic(s);
                     auto fast = enumerate_qp(p);
                     long b = max_abs_root_bound(p).get_si();
                     if (fast.matrices != cd::brute_force_qp(p, b)) ++o.failures;
                 }
             });
         }},
        {"qp.free-action-field-rows",
         "trivial stabilizers and 24 | total for irreducible totally real rows",
         "free action of the rotation group",
         [](std::uint64_t) {
             return cd::timed("qp.free-action-field-rows", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     if (!row.is_field) continue;
                     ++o.samples;
                     auto res = cd::qp_with_orbits(parse_monic_cubic(row.polynomial));
                     bool ok = res.total % 24 == 0;
                     for (const auto& orb : res.orbits)
                         if (orb.stabilizer_order != 1) ok = false;
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"qp.charpoly-posthoc",
         "each enumerated matrix has characteristic polynomial exactly p (interpolation oracle)",
         "post-hoc characteristic polynomial verification",
         [](std::uint64_t) {
             return cd::timed("qp.charpoly-posthoc", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     MonicCubic p = parse_monic_cubic(row.polynomial);
                     for (const auto& T : enumerate_qp(p, 4).matrices) {
                         ++o.samples;
                         MonicCubic q = cd::charpoly_interp(T);
                         if (q.a2 != p.a2 || q.a1 != p.a1 || q.a0 != p.a0) ++o.failures;
                     }
                 }
             });
         }},
        {"qp.orbit-partition",
         "orbits are disjoint and their sizes sum to the total",
         "orbit decomposition is a partition",
         [](std::uint64_t) {
             return cd::timed("qp.orbit-partition", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     ++o.samples;
                     auto res = cd::qp_with_orbits(parse_monic_cubic(row.polynomial));
                     long sum = 0;
                     std::vector<SymMat3> seen;
                     for (const auto& orb : res.orbits) {
                         sum += orb.size;
                         for (const auto& g : so3z_elements()) seen.push_back(conjugate(g, orb.representative));
                     }
                     std::sort(seen.begin(), seen.end());
                     seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                     if (sum != res.total || seen != res.matrices) ++o.failures;
                 }
             });
         }},
        {"ring.bijection-round-trip",
         "pair_to_matrix ∘ matrix_to_pair lands in the source orbit; distinct orbits stay inequivalent",
         "matrices ↔ balanced pairs bijection",
         [](std::uint64_t) {
             return cd::timed("ring.bijection-round-trip", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     MonicCubic p = parse_monic_cubic(row.polynomial);
                     auto res = cd::qp_with_orbits(p);
                     if (res.total == 0) continue;
                     CubicRing R(p);
                     std::vector<BalancedPair> reps;
                     for (const auto& orb : res.orbits) {
                         ++o.samples;
                         BalancedPair bp = R.matrix_to_pair(orb.representative);
                         SymMat3 back = R.pair_to_matrix(bp);
                         bool in_orbit = false;
                         for (const auto& g : so3z_elements())
                             if (conjugate(g, orb.representative) == back) in_orbit = true;
                         if (!in_orbit) ++o.failures;
                         reps.push_back(bp);
                     }
                     for (size_t i = 0; i < reps.size(); ++i)
                         for (size_t j = i + 1; j < reps.size(); ++j) {
                             ++o.samples;
                             if (R.pairs_equivalent(reps[i], reps[j]) != Tri::no) ++o.failures;
                         }
                 }
             });
         }},
        {"ring.count-identity",
         "|Q_p| = 24 |Q_R| for irreducible totally real rows",
         "orbit-count identity",
         [](std::uint64_t) {
             return cd::timed("ring.count-identity", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     if (!row.is_field) continue;
                     ++o.samples;
                     auto res = cd::qp_with_orbits(parse_monic_cubic(row.polynomial));
                     if (res.total != 24 * static_cast<long>(res.orbits.size())) ++o.failures;
                 }
             });
         }},
        {"ring.class-group-cross-check",
         "orbit count equals the 2-torsion order of the recorded narrow class group",
         "balanced classes versus narrow 2-torsion",
         [](std::uint64_t) {
             return cd::timed("ring.class-group-cross-check", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     if (!row.is_field || !row.maximal || row.qp_count == 0) continue;
                     ++o.samples;
                     MonicCubic p = parse_monic_cubic(row.polynomial);
                     auto res = cd::qp_with_orbits(p);
                     if (!CubicRing(p).is_maximal() ||
                         static_cast<long>(res.orbits.size()) !=
                             two_torsion_order(row.narrow_class_group))
                         ++o.failures;
                 }
             });
         }},
        {"ring.etale-count-formula",
         "non-field rows satisfy |Q_p| = (48/4)·|2-torsion|·δ with stabilizers of order 2",
         "counting formula for Z × real quadratic",
         [](std::uint64_t) {
             return cd::timed("ring.etale-count-formula", [&](CheckOutcome& o) {
                 for (const auto& row : reference_table()) {
                     if (row.is_field) continue;
                     ++o.samples;
                     MonicCubic p = parse_monic_cubic(row.polynomial);
                     auto res = cd::qp_with_orbits(p);
                     long delta = res.total > 0 ? 1 : 0;
                     long expect = 12 * two_torsion_order(row.narrow_class_group) * delta;
                     bool ok = res.total == expect;
                     for (const auto& orb : res.orbits)
                         if (orb.stabilizer_order != 2) ok = false;
                     if (!ok) ++o.failures;
                 }
             });
         }},
        {"ring.inverse-different",
         "the trace-dual lattice equals (1/p'(θ)) R on random totally real cubics",
         "inverse different of a monogenic ring",
         [](std::uint64_t seed) {
             return cd::timed("ring.inverse-different", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 int done = 0;
                 while (done < 100) {
                     MonicCubic p = cd::random_cubic(rng, 12);
                     if (!is_totally_real(p) || discriminant(p) == 0) continue;
                     ++done;
                     ++o.samples;
                     try {
                         CubicRing R(p);
                         R.inverse_different();  // internally verified against (1/p'(θ))R
                     } catch (const std::exception&) {
                         ++o.failures;
                     }
                 }
             });
         }},
        {"roots.root-strings",
         "root strings through any pair of non-proportional roots are unbroken",
         "root string property",
         [](std::uint64_t) {
             return cd::timed("roots.root-strings", [&](CheckOutcome& o) {
                 RootSystemF4 F;
                 for (const auto& a : F.roots())
                     for (const auto& b : F.roots()) {
                         if (a == b || a == r4_neg(b)) continue;
                         ++o.samples;
                         std::vector<int> ks;
                         for (int k = -5; k <= 5; ++k) {
                             Root4 v = r4_add(b, r4_scale(Rat(k), a));
                             bool zero = v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0;
                             if (zero || F.is_root(v)) ks.push_back(k);
                         }
                         for (size_t i = 1; i < ks.size(); ++i)
                             if (ks[i] != ks[i - 1] + 1) ++o.failures;
                     }
             });
         }},
        {"roots.weyl-order",
         "the generated Weyl group has order 1152 and contains every root reflection",
         "Weyl group order and reflection closure",
         [](std::uint64_t) {
             return cd::timed("roots.weyl-order", [&](CheckOutcome& o) {
                 RootSystemF4 F;
                 ++o.samples;
                 const auto& W = F.weyl_group();
                 if (W.size() != 1152) ++o.failures;
                 for (const auto& r : F.roots()) {
                     ++o.samples;
                     if (!std::binary_search(W.begin(), W.end(), RootSystemF4::reflection(r)))
                         ++o.failures;
                 }
             });
         }},
        {"roots.subset-partitions",
         "the named positive subsets partition the positive roots as expected",
         "parabolic subset partitions",
         [](std::uint64_t) {
             return cd::timed("roots.subset-partitions", [&](CheckOutcome& o) {
                 RootSystemF4 F;
                 auto pos = F.positive_roots();
                 auto cat = [](std::vector<Root4> a, const std::vector<Root4>& b) {
                     a.insert(a.end(), b.begin(), b.end());
                     std::sort(a.begin(), a.end());
                     return a;
                 };
                 ++o.samples;
                 auto u = cat(cat(F.phi_MR_plus(), F.phi_N_plus()), F.phi_NS_plus());
                 std::sort(pos.begin(), pos.end());
                 if (u != pos) ++o.failures;
                 ++o.samples;
                 auto n = F.phi_N_plus();
                 std::sort(n.begin(), n.end());
                 if (cat({F.simple()[0]}, F.phi_11_plus()) != n) ++o.failures;
             });
         }},
        {"roots.exceptional-exponent",
         "⟨ρ - (ω₁+ω₂)/2, α_i^∨⟩ = 1/m_i for all simple roots",
         "exceptional exponent pairings",
         [](std::uint64_t) {
             return cd::timed("roots.exceptional-exponent", [&](CheckOutcome& o) {
                 RootSystemF4 F;
                 Root4 nu = F.nu_exc();
                 for (int i = 0; i < 4; ++i) {
                     ++o.samples;
                     if (inner(nu, F.coroot(F.simple()[static_cast<size_t>(i)])) !=
                         make_rat(Int(1), Int(F.m_value(i))))
                         ++o.failures;
                 }
             });
         }},
        {"cover.cocycle",
         "two-cocycle condition on random det-1 triples at places {2,3,5,7,∞}",
         "cocycle condition for the double cover of SL2",
         [](std::uint64_t seed) {
             return cd::timed("cover.cocycle", [&](CheckOutcome& o) {
                 for (const auto& v : cd::check_places()) {
                     auto r = selftest_cocycle(v, 10000, seed++);
                     o.samples += r.samples;
                     o.failures += r.failures;
                 }
             });
         }},
        {"cover.associativity",
         "the twisted product is associative on random triples",
         "group law associativity",
         [](std::uint64_t seed) {
             return cd::timed("cover.associativity", [&](CheckOutcome& o) {
                 for (const auto& v : cd::check_places()) {
                     std::mt19937_64 rng(seed++);
                     for (int i = 0; i < 2000; ++i) {
                         ++o.samples;
                         MetaSL2Elem a{detail::random_sl2(rng), 1, v},
                             b{detail::random_sl2(rng), -1, v},
                             c{detail::random_sl2(rng), 1, v};
                         if (!(msl2_mul(msl2_mul(a, b), c) == msl2_mul(a, msl2_mul(b, c))))
                             ++o.failures;
                     }
                 }
             });
         }},
        {"cover.hilbert-identities",
         "symbol symmetry, bimultiplicativity, (a,-a) = 1, and (a,b)(-ab,a+b) = 1",
         "Hilbert symbol identities",
         [](std::uint64_t seed) {
             return cd::timed("cover.hilbert-identities", [&](CheckOutcome& o) {
                 for (const auto& v : cd::check_places()) {
                     auto r = selftest_hilbert(v, 10000, seed++);
                     o.samples += r.samples;
                     o.failures += r.failures;
                 }
             });
         }},
        {"cover.global-product",
         "the product of local symbols over all relevant places is 1",
         "global reciprocity of the symbol",
         [](std::uint64_t seed) {
             return cd::timed("cover.global-product", [&](CheckOutcome& o) {
                 auto r = selftest_hilbert_product(10000, seed);
                 o.samples = r.samples;
                 o.failures = r.failures;
             });
         }},
        {"cover.variant-comparison",
         "the two GL2 cover products differ exactly by (y₁, y₂)₂",
         "comparison of the two double covers",
         [](std::uint64_t seed) {
             return cd::timed("cover.variant-comparison", [&](CheckOutcome& o) {
                 for (const auto& v : cd::check_places()) {
                     auto r = selftest_cover_compare(v, 10000, seed++);
                     o.samples += r.samples;
                     o.failures += r.failures;
                 }
             });
         }},
        {"whittaker.quadrature",
         "closed-form K matches quadrature to 1e-10 relative",
         "half-integral K-Bessel closed forms",
         [](std::uint64_t) {
             return cd::timed("whittaker.quadrature", [&](CheckOutcome& o) {
                 for (long vn : {1L, 3L, 5L})
                     for (double z : {0.5, 1.0, 2.0, 5.0}) {
                         ++o.samples;
                         double a = bessel_k_half(HalfInt(vn), z);
                         double b = cd::bessel_quadrature(vn / 2.0, z);
                         if (std::fabs(a - b) / std::fabs(b) > 1e-10) ++o.failures;
                     }
             });
         }},
        {"whittaker.recurrence",
         "K_{v+1} = K_{v-1} + (2v/z) K_v to 1e-12",
         "three-term recurrence consistency",
         [](std::uint64_t) {
             return cd::timed("whittaker.recurrence", [&](CheckOutcome& o) {
                 for (long vn : {1L, 3L, 5L, 7L})
                     for (double z : {0.3, 0.9, 2.7, 6.1}) {
                         ++o.samples;
                         double lhs = bessel_k_half(HalfInt(vn + 2), z);
                         double rhs = bessel_k_half(HalfInt(vn - 2), z) +
                                      (static_cast<double>(vn) / z) * bessel_k_half(HalfInt(vn), z);
                         if (std::fabs(lhs - rhs) > 1e-12 * std::max(1.0, std::fabs(rhs)))
                             ++o.failures;
                     }
             });
         }},
        {"whittaker.decay",
         "coefficients decay monotonically in |α| past a threshold",
         "exponential decay of the Whittaker coefficients",
         [](std::uint64_t) {
             return cd::timed("whittaker.decay", [&](CheckOutcome& o) {
                 HalfInt n(3);
                 std::vector<double> prev;
                 for (double r = 2.0; r <= 8.0; r += 0.25) {
                     auto w = whittaker_value(n, 1.0, std::complex<double>(r, 0.0));
                     std::vector<double> cur;
                     for (const auto& t : w.terms) cur.push_back(std::abs(t.coeff));
                     if (!prev.empty()) {
                         ++o.samples;
                         for (size_t i = 0; i < cur.size(); ++i)
                             if (cur[i] >= prev[i]) ++o.failures;
                     }
                     prev = cur;
                 }
             });
         }},
        {"whittaker.phase-magnitude",
         "coefficient magnitudes are independent of the phase of α",
         "unit-phase normalization",
         [](std::uint64_t seed) {
             return cd::timed("whittaker.phase-magnitude", [&](CheckOutcome& o) {
                 std::mt19937_64 rng(seed);
                 std::uniform_real_distribution<double> U(-3.0, 3.0), P(0.2, 2.5);
                 for (int i = 0; i < 200; ++i) {
                     std::complex<double> a(U(rng), U(rng));
                     if (std::abs(a) < 1e-2) continue;
                     ++o.samples;
                     double nu = P(rng);
                     HalfInt n(3);
                     auto w = whittaker_value(n, nu, a);
                     double m2 = std::norm(a);
                     bool ok = true;
                     for (const auto& t : w.terms) {
                         long vn = t.i - t.j;  // 2v
                         double expect = std::pow(nu, n.value() + 1.0) *
                                         bessel_k_half(HalfInt(vn), m2) /
                                         (detail::factorial(t.i) * detail::factorial(t.j));
                         if (std::fabs(std::abs(t.coeff) - expect) > 1e-12 * expect) ok = false;
                     }
                     if (!ok) ++o.failures;
                 }
             });
         }},
    };
    return registry;
}

inline std::vector<CheckOutcome> run_all_checks(std::uint64_t seed) {
    std::vector<CheckOutcome> out;
    for (const auto& c : check_registry()) out.push_back(c.run(seed));
    return out;
}

}  // namespace g2theta
