/*
   Copyright 2026 The unitary-charmap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNITARY_ORBITS_HPP
#define UNITARY_ORBITS_HPP

// Cyclic model of the groups M_m = {x : x^{q^m - (-1)^m} = 1}. M_m is identified
// with Z/N_m, N_m = q^m - (-1)^m, the Frobenius acting as multiplication by -q.
// A residue k at level r sits at level m (r | m) as k * N_m / N_r. Characters use
// the same residues, paired by <j, k> = zeta_{N_m}^{jk}; restriction along the
// tower is dual to the relative norm, so a character j at level r lifts to
// j * (-1)^{m-r} * N_m / N_r at level m.

#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace unitary {

class LevelMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class OrbitKind { theta, phi };

inline const char* to_string(OrbitKind k) { return k == OrbitKind::theta ? "theta" : "phi"; }

/// F-orbit label: orbit size and its minimal residue at that level.
struct OrbitId {
    OrbitKind kind = OrbitKind::phi;
    int q = 2;
    int size = 1;
    long long residue = 0;

    friend auto operator<=>(const OrbitId&, const OrbitId&) = default;
    friend bool operator==(const OrbitId&, const OrbitId&) = default;

    std::string to_string() const {
        return std::string(kind == OrbitKind::theta ? "th" : "f") + "[" + std::to_string(size) + ":" +
               std::to_string(residue) + "]";
    }
};

/// Element (or character) of M_level given by its residue.
struct CyclicElt {
    int q = 2;
    int level = 1;
    long long residue = 0;
};

inline bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

/// N_m = q^m - (-1)^m.
inline long long cyclic_order(int q, int m) {
    if (m < 1) throw std::invalid_argument("level must be positive");
    Integer n = integer_pow(q, m) - ((m % 2) ? -1 : 1);
    if (!n.fits_slong_p()) throw std::overflow_error("cyclic order exceeds 64 bits");
    return n.get_si();
}

inline long long mod(long long a, long long n) { return ((a % n) + n) % n; }

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

/// Number d_r of F-orbits of size r, from N_m = sum_{r | m} r d_r.
inline long long orbit_count(int q, int r) {
    if (r < 1) throw std::invalid_argument("orbit size must be positive");
    long long total = 0;
    for (int s = 1; s <= r; ++s)
        if (r % s == 0) total += mobius(r / s) * cyclic_order(q, s);
    return total / r;
}

/// Residue k at level `from` viewed at level `to`.
inline long long embed(int q, int from, long long k, int to) {
    if (to % from) throw LevelMismatch("embedding needs from | to");
    return mod(k, cyclic_order(q, from)) * (cyclic_order(q, to) / cyclic_order(q, from));
}

/// Character j at level `from` viewed at level `to` (dual of the relative norm).
inline long long lift_character(int q, int from, long long j, int to) {
    if (to % from) throw LevelMismatch("lift needs from | to");
    const long long nt = cyclic_order(q, to);
    const long long step = nt / cyclic_order(q, from);
    const long long sign = ((to - from) % 2) ? -1 : 1;
    return mod(sign * mod(j, cyclic_order(q, from)) * step, nt);
}

/// Smallest d | m such that residue k at level m comes from level d.
inline int primitive_level(int q, int m, long long k) {
    const long long nm = cyclic_order(q, m);
    k = mod(k, nm);
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        if (k % (nm / cyclic_order(q, d)) == 0) return d;
    }
    return m;
}

/// Minimal element of the orbit of k under multiplication by -q modulo N_d.
inline long long canonical_residue(int q, int d, long long k) {
    const long long nd = cyclic_order(q, d);
    long long x = mod(k, nd), best = x;
    for (int i = 1; i < d; ++i) {
        x = mod(x * -q, nd);
        best = std::min(best, x);
    }
    return best;
}

/// Residues at level size making up the orbit, in the order k, -qk, q^2 k, ...
inline std::vector<long long> orbit_residues(const OrbitId& o) {
    const long long n = cyclic_order(o.q, o.size);
    std::vector<long long> out;
    long long x = o.residue;
    for (int i = 0; i < o.size; ++i) {
        out.push_back(x);
        x = mod(x * -o.q, n);
    }
    return out;
}

/// The Phi-orbit of x together with its degree.
inline std::pair<OrbitId, int> f_of_x(const CyclicElt& x) {
    const int d = primitive_level(x.q, x.level, x.residue);
    const long long step = cyclic_order(x.q, x.level) / cyclic_order(x.q, d);
    const long long kd = mod(x.residue, cyclic_order(x.q, x.level)) / step;
    return {OrbitId{OrbitKind::phi, x.q, d, canonical_residue(x.q, d, kd)}, d};
}

/// The Theta-orbit of the character xi.
inline OrbitId theta_orbit_of(const CyclicElt& xi) {
    const int d = primitive_level(xi.q, xi.level, xi.residue);
    const long long step = cyclic_order(xi.q, xi.level) / cyclic_order(xi.q, d);
    const long long sign = ((xi.level - d) % 2) ? -1 : 1;
    const long long jd = mod(sign * (mod(xi.residue, cyclic_order(xi.q, xi.level)) / step), cyclic_order(xi.q, d));
    return OrbitId{OrbitKind::theta, xi.q, d, canonical_residue(xi.q, d, jd)};
}

/// xi(x) for xi at level r and x at level m, r | m; conductor defaults to N_m.
inline Cyclotomic char_eval(const CyclicElt& xi, const CyclicElt& x, long long conductor = 0) {
    if (xi.q != x.q) throw std::invalid_argument("char_eval: q differs");
    if (x.level % xi.level) throw LevelMismatch("char_eval needs the character level to divide the element level");
    const long long nm = cyclic_order(x.q, x.level);
    if (conductor == 0) conductor = nm;
    if (conductor % nm) throw ConductorMismatch("conductor is not a multiple of N_m");
    const long long j = lift_character(x.q, xi.level, xi.residue, x.level);
    const long long e = mod(j * mod(x.residue, nm), nm);
    return Cyclotomic::root(static_cast<int>(conductor), static_cast<long>(e * (conductor / nm)));
}

/// lcm of N_m for 1 <= m <= n: every character value for U_n lies in Q(zeta_N).
inline long long conductor_for(int q, int n) {
    long long l = 1;
    for (int m = 1; m <= n; ++m) l = std::lcm(l, cyclic_order(q, m));
    return l;
}

/// All orbits of size <= max_size, sorted by (size, residue).
inline const std::vector<OrbitId>& enumerate_orbits(int q, OrbitKind kind, int max_size) {
    static detail::OnceCache<std::tuple<int, OrbitKind, int>, std::vector<OrbitId>> cache;
    return cache.get({q, kind, max_size}, [&] {
        std::vector<OrbitId> out;
        for (int d = 1; d <= max_size; ++d) {
            const long long nd = cyclic_order(q, d);
            for (long long k = 0; k < nd; ++k)
                if (primitive_level(q, d, k) == d && canonical_residue(q, d, k) == k) out.push_back({kind, q, d, k});
        }
        return out;
    });
}

using TransformKey = std::pair<OrbitId, int>;

/// p_n(phi) in terms of Phi-power sums: (-1)^{M-1} sum_{x in M_M} xi(x) p_{M/d(f_x)}(f_x), M = n|phi|.
inline std::map<TransformKey, Cyclotomic> transform_p(const OrbitId& phi, int n, long long conductor) {
    if (phi.kind != OrbitKind::theta) throw std::invalid_argument("transform_p expects a theta orbit");
    if (n < 1) throw std::invalid_argument("transform_p needs n >= 1");
    const int q = phi.q;
    const int M = n * phi.size;
    const long long nM = cyclic_order(q, M);
    if (conductor % nM) throw ConductorMismatch("conductor is not a multiple of N_M");
    const long long jM = lift_character(q, phi.size, phi.residue, M);
    const Rational sign = (M - 1) % 2 ? -1 : 1;
    std::map<TransformKey, Cyclotomic> out;
    for (const OrbitId& f : enumerate_orbits(q, OrbitKind::phi, M)) {
        if (M % f.size) continue;
        RootAccumulator acc(static_cast<int>(conductor));
        for (long long k : orbit_residues(f)) {
            long long e = embed(q, f.size, k, M);
            acc.add(static_cast<long>(mod(jM * e, nM) * (conductor / nM)), sign);
        }
        Cyclotomic c = acc.finish();
        if (!c.is_zero()) out.emplace(TransformKey{f, M / f.size}, std::move(c));
    }
    return out;
}

}  // namespace unitary

#endif  // UNITARY_ORBITS_HPP
