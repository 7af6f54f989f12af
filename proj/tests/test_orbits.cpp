#include <gtest/gtest.h>

#include <set>

#include "oracles/gf64.hpp"
#include "unitary/orbits.hpp"

using namespace unitary;

namespace {

// Orbits of exact size r of multiplication by -q on Z/N_r, counted by following each orbit.
long long orbit_count_direct(int q, int r) {
    const long long n = cyclic_order(q, r);
    long long elements = 0;
    for (long long k = 0; k < n; ++k) {
        long long x = mod(k * -q, n);
        int len = 1;
        while (x != k) {
            x = mod(x * -q, n);
            ++len;
        }
        if (len == r) ++elements;
    }
    return elements / r;
}

}  // namespace

TEST(OrbitCount, Examples) {
    EXPECT_EQ(orbit_count(2, 1), 3);
    EXPECT_EQ(orbit_count(2, 2), 0);
    EXPECT_EQ(orbit_count(2, 3), 2);
    EXPECT_EQ(orbit_count(3, 1), 4);
    EXPECT_EQ(orbit_count(3, 2), 2);
    EXPECT_EQ(orbit_count(3, 3), 8);
    EXPECT_EQ(orbit_count(3, 4), 18);
}

TEST(OrbitCount, MatchesDirectEnumeration) {
    for (int q : {2, 3, 4, 5})
        for (int r = 1; r <= 6; ++r) EXPECT_EQ(orbit_count(q, r), orbit_count_direct(q, r)) << q << " " << r;
}

TEST(OrbitCount, DivisorSum) {
    for (int q : {2, 3, 4, 5})
        for (int m = 1; m <= 8; ++m) {
            long long s = 0;
            for (int r = 1; r <= m; ++r)
                if (m % r == 0) s += r * orbit_count(q, r);
            EXPECT_EQ(s, cyclic_order(q, m));
        }
}

TEST(EnumerateOrbits, Examples) {
    const auto& o1 = enumerate_orbits(2, OrbitKind::phi, 1);
    ASSERT_EQ(o1.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(o1[i].residue, i);
    EXPECT_EQ(enumerate_orbits(2, OrbitKind::phi, 2).size(), 3u);
    EXPECT_EQ(enumerate_orbits(3, OrbitKind::theta, 1).size(), 4u);
}

TEST(EnumerateOrbits, TileEachLevel) {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 4; ++m) {
            const long long nm = cyclic_order(q, m);
            std::set<long long> seen;
            for (const auto& o : enumerate_orbits(q, OrbitKind::phi, m)) {
                if (m % o.size) continue;
                for (long long k : orbit_residues(o)) EXPECT_TRUE(seen.insert(embed(q, o.size, k, m)).second);
            }
            EXPECT_EQ(static_cast<long long>(seen.size()), nm);
            for (int d = 1; d <= m; ++d) {
                long long c = 0;
                for (const auto& o : enumerate_orbits(q, OrbitKind::phi, m)) c += o.size == d;
                EXPECT_EQ(c, orbit_count(q, d));
            }
        }
}

TEST(FOfX, Examples) {
    auto [f0, d0] = f_of_x({2, 1, 0});
    EXPECT_EQ(f0, (OrbitId{OrbitKind::phi, 2, 1, 0}));
    EXPECT_EQ(d0, 1);
    // residue 1 at level 3 has order 9 in Z/9
    auto [f3, d3] = f_of_x({2, 3, 1});
    EXPECT_EQ(d3, 3);
    EXPECT_EQ(f3.size, 3);
    EXPECT_EQ(f_of_x({2, 1, 1}).second, 1);
    // an element embedded from level 1 stays degree 1
    EXPECT_EQ(f_of_x({2, 3, 3}).first, (OrbitId{OrbitKind::phi, 2, 1, 1}));
}

TEST(CharEval, Examples) {
    EXPECT_EQ(char_eval({2, 1, 0}, {2, 3, 5}), Cyclotomic(9, 1));
    EXPECT_EQ(char_eval({2, 1, 1}, {2, 1, 1}), Cyclotomic::root(3, 1));
    // norm of a generator of M_3 (order 9) generates M_1, so the value is a primitive cube root
    EXPECT_EQ(char_eval({2, 1, 1}, {2, 3, 1}), Cyclotomic::root(9, 3));
    EXPECT_FALSE(char_eval({2, 1, 1}, {2, 3, 1}).is_rational());
    EXPECT_THROW(char_eval({2, 2, 1}, {2, 3, 1}), LevelMismatch);
}

TEST(CharEval, AgreesWithNormInGF64) {
    // q = 2: M_3 = <g3>, g3 = gamma^7 (order 9); M_1 = <g1>, g1 = gamma^21 = g3^3.
    oracle::GF64 f;
    auto frob = [&](int x) { return f.inv(f.mul(x, x)); };  // x -> x^{-q}
    for (int k = 0; k < 9; ++k) {
        int x = f.power_of_generator(7 * k);
        int norm = f.mul(x, f.mul(frob(x), frob(frob(x))));
        int lg = f.log(norm);
        ASSERT_EQ(lg % 21, 0);
        int n1 = lg / 21;
        for (int j = 0; j < 3; ++j) EXPECT_EQ(char_eval({2, 1, j}, {2, 3, k}), Cyclotomic::root(9, 3L * j * n1)) << j << " " << k;
    }
    // level 2 to level 6 is not available in GF(64), but level 1 to level 2 is: M_2 = gamma^{21 * 0}... N_2 = 3 = N_1.
    EXPECT_EQ(cyclic_order(2, 2), 3);
}

TEST(CharEval, Homomorphism) {
    for (int q : {2, 3})
        for (int m : {1, 2, 3, 4}) {
            const long long nm = cyclic_order(q, m);
            for (int r = 1; r <= m; ++r) {
                if (m % r) continue;
                const long long nr = cyclic_order(q, r);
                for (long long j = 0; j < nr; j += std::max(1LL, nr / 5))
                    for (long long a = 0; a < nm; a += std::max(1LL, nm / 7))
                        for (long long b = 1; b < nm; b += std::max(1LL, nm / 5)) {
                            EXPECT_EQ(char_eval({q, r, j}, {q, m, a + b}), char_eval({q, r, j}, {q, m, a}) * char_eval({q, r, j}, {q, m, b}));
                            EXPECT_EQ(char_eval({q, r, j + b}, {q, m, a}), char_eval({q, r, j}, {q, m, a}) * char_eval({q, r, b}, {q, m, a}));
                        }
            }
        }
}

TEST(CharEval, NormOfEmbeddedElement) {
    // For x in M_m, xi(x) = xi(x^e) with e = ((-q)^m - 1) / ((-q)^r - 1), read at level r.
    for (int q : {2, 3})
        for (int m = 1; m <= 4; ++m)
            for (int r = 1; r <= m; ++r) {
                if (m % r) continue;
                Integer e = (integer_pow(-q, m) - 1) / (integer_pow(-q, r) - 1);
                const long long nm = cyclic_order(q, m), nr = cyclic_order(q, r);
                for (long long k = 0; k < nm; k += std::max(1LL, nm / 11)) {
                    // x^e = g_m^{k e} = g_r^{k e / (N_m / N_r)}
                    Integer ke = Integer(static_cast<long>(k)) * e;
                    Integer step(static_cast<long>(nm / nr));
                    Integer level_r = ke / step;
                    ASSERT_EQ(ke % step, 0);
                    long long kr = mod(Integer(level_r % Integer(static_cast<long>(nr))).get_si(), nr);
                    for (long long j = 0; j < nr; ++j)
                        EXPECT_EQ(char_eval({q, r, j}, {q, m, k}),
                                  Cyclotomic::root(static_cast<int>(nr), static_cast<long>(j * kr)).lifted(static_cast<int>(nm)));
                }
            }
}

TEST(ThetaOrbit, UnliftsCharacters) {
    for (int q : {2, 3})
        for (const auto& phi : enumerate_orbits(q, OrbitKind::theta, 3))
            for (int mult = 1; mult <= 2; ++mult) {
                int m = phi.size * mult;
                CyclicElt xi{q, m, lift_character(q, phi.size, phi.residue, m)};
                EXPECT_EQ(theta_orbit_of(xi), phi);
            }
}

TEST(Transform, TrivialCharacterDegreeOne) {
    const OrbitId triv{OrbitKind::theta, 2, 1, 0};
    auto tr = transform_p(triv, 1, 3);
    ASSERT_EQ(tr.size(), 3u);
    for (const auto& [key, c] : tr) {
        EXPECT_EQ(key.second, 1);
        EXPECT_EQ(c, Cyclotomic(3, 1));
    }
}

TEST(Transform, NontrivialCharacterDegreeOne) {
    const OrbitId phi{OrbitKind::theta, 2, 1, 1};
    auto tr = transform_p(phi, 1, 3);
    ASSERT_EQ(tr.size(), 3u);
    for (long long k = 0; k < 3; ++k)
        EXPECT_EQ(tr.at({OrbitId{OrbitKind::phi, 2, 1, k}, 1}), Cyclotomic::root(3, k));
}

TEST(Transform, TotalMass) {
    for (int q : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            const long long N = conductor_for(q, 3);
            const OrbitId triv{OrbitKind::theta, q, 1, 0};
            Rational total = 0;
            for (const auto& [key, c] : transform_p(triv, n, N)) total += c.rational_value();
            EXPECT_EQ(total, Rational(static_cast<long>(((n - 1) % 2 ? -1 : 1) * cyclic_order(q, n))));
        }
}

TEST(Transform, InverseDftRecoversIndicators) {
    const int N = 3;
    for (long long k0 = 0; k0 < 3; ++k0) {
        std::map<TransformKey, Cyclotomic> acc;
        for (long long j = 0; j < 3; ++j) {
            Cyclotomic w = Cyclotomic::root(N, -j * k0);
            for (const auto& [key, c] : transform_p({OrbitKind::theta, 2, 1, j}, 1, N)) {
                auto [it, ins] = acc.emplace(key, Cyclotomic(N));
                it->second += w * c;
            }
        }
        for (const auto& [key, c] : acc)
            EXPECT_EQ(c, Cyclotomic(N, key.first.residue == k0 ? 3 : 0));
    }
}

TEST(Transform, IndependentOfRepresentative) {
    // Using another residue of the same Theta-orbit gives the same expansion.
    const int q = 2;
    const long long N = conductor_for(q, 3);
    for (const auto& phi : enumerate_orbits(q, OrbitKind::theta, 3)) {
        if (phi.size == 1) continue;
        OrbitId other = phi;
        other.residue = orbit_residues(phi)[1];
        EXPECT_EQ(transform_p(phi, 1, N), transform_p(other, 1, N));
    }
}
