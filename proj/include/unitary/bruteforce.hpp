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

#ifndef UNITARY_BRUTEFORCE_HPP
#define UNITARY_BRUTEFORCE_HPP

// Explicit U(n, F_{q^2}) for tiny (n, q). All arithmetic happens in one field
// F_Q, Q = q^{2L} with L = lcm(1..n), which holds every M_d for d <= n.
// Residues of M_d are taken with respect to gamma^{(Q-1)/N_d} for a fixed
// primitive gamma, so they agree with the embeddings of the cyclic model.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "charmap.hpp"
#include "multipartitions.hpp"
#include "orbits.hpp"

namespace unitary {

class BoundExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class UnsupportedSize : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// F_{p^degree}; elements are integers sum c_i p^i, the modulus is the first primitive
/// monic polynomial in that order (lexicographic on (c_{D-1}, ..., c_0)).
class GF {
   public:
    using Elt = std::uint32_t;

    GF(int p, int degree) : p_(p), degree_(degree) {
        if (p < 2) throw std::invalid_argument("GF: p must be prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("GF: p must be prime");
        Integer size = integer_pow(p, degree);
        if (size > (1 << 20)) throw std::invalid_argument("GF: field too large");
        size_ = size.get_si();
        for (long m = 0; m < size_; ++m) {
            modulus_ = digits(m);
            if (modulus_[0] == 0) continue;
            if (build_tables()) return;
        }
        throw std::logic_error("GF: no primitive polynomial found");
    }

    int characteristic() const { return p_; }
    int degree() const { return degree_; }
    long size() const { return size_; }
    /// Coefficients c_0..c_{D-1} of the modulus below the leading 1.
    const std::vector<int>& modulus() const { return modulus_; }

    Elt add(Elt a, Elt b) const {
        if (p_ == 2) return a ^ b;
        Elt r = 0, scale = 1;
        while (a || b) {
            r += static_cast<Elt>(((a % p_) + (b % p_)) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }
    Elt neg(Elt a) const {
        if (p_ == 2) return a;
        Elt r = 0, scale = 1;
        while (a) {
            r += static_cast<Elt>((p_ - a % p_) % p_) * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (size_ - 1)];
    }
    Elt inv(Elt a) const {
        if (a == 0) throw DivisionByZero("GF: inverse of zero");
        return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    }
    Elt pow(Elt a, long long e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        const long long o = size_ - 1;
        return exp_[static_cast<size_t>(mod(static_cast<long long>(log_[a]) * mod(e, o), o))];
    }
    /// gamma^k for the primitive element gamma = t.
    Elt exp(long long k) const { return exp_[static_cast<size_t>(mod(k, size_ - 1))]; }
    long long log(Elt a) const {
        if (a == 0) throw DivisionByZero("GF: log of zero");
        return log_[a];
    }

   private:
    std::vector<int> digits(long m) const {
        std::vector<int> d(degree_);
        for (int i = 0; i < degree_; ++i, m /= p_) d[i] = static_cast<int>(m % p_);
        return d;
    }

    bool build_tables() {
        exp_.assign(size_ - 1, 0);
        log_.assign(size_, -1);
        std::vector<int> cur(degree_, 0);
        cur[0] = 1;
        for (long k = 0; k < size_ - 1; ++k) {
            Elt e = 0;
            for (int i = degree_ - 1; i >= 0; --i) e = e * p_ + cur[i];
            if (log_[e] != -1) return false;
            exp_[k] = e;
            log_[e] = k;
            const int top = cur[degree_ - 1];
            for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < degree_; ++i) cur[i] = ((cur[i] - top * modulus_[i]) % p_ + p_) % p_;
        }
        Elt back = 0;
        for (int i = degree_ - 1; i >= 0; --i) back = back * p_ + cur[i];
        return back == 1;
    }

    int p_;
    int degree_;
    long size_ = 0;
    std::vector<int> modulus_;
    std::vector<Elt> exp_;
    std::vector<long> log_;
};

/// n x n matrix over F_Q, row-major.
struct UMatrix {
    int n = 0;
    std::vector<GF::Elt> a;

    GF::Elt operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    GF::Elt& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    friend auto operator<=>(const UMatrix&, const UMatrix&) = default;
    friend bool operator==(const UMatrix&, const UMatrix&) = default;
};

struct BruteOptions {
    long max_group_order = 100000;
    bool allow_large = false;  // admits U(3, F_4)
};

inline bool brute_supported(int n, int q, bool allow_large) {
    if (n == 1) return q >= 2 && q <= 5;
    if (n == 2) return q == 2 || q == 3;
    if (n == 3) return q == 2 && allow_large;
    return false;
}

/// F_Q with its subfield F_{q^2} and the matrix operations over it.
class BruteField {
   public:
    BruteField(int n, int q) : n_(n), q_(q), field_(prime_of(q), field_degree(n, q)) {
        const long Q = field_.size();
        const long q2 = static_cast<long>(q) * q;
        for (long k = 0; k < q2 - 1; ++k) sub_.push_back(field_.exp(k * ((Q - 1) / (q2 - 1))));
        sub_.push_back(0);
        std::sort(sub_.begin(), sub_.end());
    }

    int n() const { return n_; }
    int q() const { return q_; }
    const GF& field() const { return field_; }
    /// Elements of F_{q^2} inside F_Q.
    const std::vector<GF::Elt>& subfield() const { return sub_; }

    GF::Elt frob(GF::Elt x) const { return field_.pow(x, q_); }

    /// Generator of M_d: gamma^{(Q-1)/N_d}.
    GF::Elt cyclic_element(int d, long long k) const {
        return field_.exp(k * ((field_.size() - 1) / cyclic_order(q_, d)));
    }

    UMatrix identity(int n) const {
        UMatrix m{n, std::vector<GF::Elt>(static_cast<size_t>(n) * n, 0)};
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    UMatrix multiply(const UMatrix& x, const UMatrix& y) const {
        UMatrix r{x.n, std::vector<GF::Elt>(x.a.size(), 0)};
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                const GF::Elt v = x(i, k);
                if (!v) continue;
                for (int j = 0; j < x.n; ++j) r(i, j) = field_.add(r(i, j), field_.mul(v, y(k, j)));
            }
        return r;
    }
    UMatrix transpose(const UMatrix& x) const {
        UMatrix r = x;
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
        return r;
    }
    /// Entrywise q-power.
    UMatrix frobenius(const UMatrix& x) const {
        UMatrix r = x;
        for (auto& v : r.a) v = frob(v);
        return r;
    }
    bool is_unitary(const UMatrix& x) const { return multiply(x, transpose(frobenius(x))) == identity(x.n); }

    int rank(UMatrix m) const {
        const int n = m.n;
        int r = 0;
        for (int c = 0; c < n && r < n; ++c) {
            int piv = r;
            while (piv < n && m(piv, c) == 0) ++piv;
            if (piv == n) continue;
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(r, j));
            const GF::Elt inv = field_.inv(m(r, c));
            for (int i = 0; i < n; ++i) {
                if (i == r || m(i, c) == 0) continue;
                const GF::Elt f = field_.mul(m(i, c), inv);
                for (int j = 0; j < n; ++j) m(i, j) = field_.sub(m(i, j), field_.mul(f, m(r, j)));
            }
            ++r;
        }
        return r;
    }

    /// Conjugacy class label from the Jordan structure at one root per F-orbit.
    MultiPartition classify(const UMatrix& g) const {
        std::vector<MultiPartition::Entry> e;
        int seen = 0;
        for (const auto& f : enumerate_orbits(q_, OrbitKind::phi, g.n)) {
            const GF::Elt x = cyclic_element(f.size, f.residue);
            UMatrix a = g;
            for (int i = 0; i < g.n; ++i) a(i, i) = field_.sub(a(i, i), x);
            std::vector<int> ranks{g.n};
            UMatrix power = a;
            for (int j = 1; j <= g.n; ++j) {
                ranks.push_back(rank(power));
                if (ranks.back() == ranks[ranks.size() - 2]) break;
                power = multiply(power, a);
            }
            std::vector<int> cols;
            for (size_t j = 1; j < ranks.size(); ++j)
                if (ranks[j - 1] > ranks[j]) cols.push_back(ranks[j - 1] - ranks[j]);
            if (cols.empty()) continue;
            Partition lam = conjugate(Partition(cols));
            seen += f.size * lam.size();
            e.emplace_back(f, std::move(lam));
        }
        if (seen != g.n) throw std::logic_error("classify: eigenvalues outside the cyclic model");
        return MultiPartition(OrbitKind::phi, q_, std::move(e));
    }

    /// Block diagonal sum of companion matrices of h^m (and h~^m) over F_{q^2}.
    UMatrix class_representative(const MultiPartition& mu) const {
        if (mu.kind() != OrbitKind::phi || mu.q() != q_) throw std::invalid_argument("class_representative expects a phi-partition");
        if (mu.size() > n_) throw UnsupportedSize("class_representative: size exceeds the field tower");
        const int n = static_cast<int>(mu.size());
        UMatrix out{n, std::vector<GF::Elt>(static_cast<size_t>(n) * n, 0)};
        int offset = 0;
        auto place = [&](const std::vector<GF::Elt>& poly) {
            const int s = static_cast<int>(poly.size()) - 1;
            for (int i = 1; i < s; ++i) out(offset + i, offset + i - 1) = 1;
            for (int i = 0; i < s; ++i) out(offset + i, offset + s - 1) = field_.neg(poly[i]);
            offset += s;
        };
        for (const auto& [f, lam] : mu.entries()) {
            const auto res = orbit_residues(f);
            std::vector<std::vector<GF::Elt>> factors(f.size % 2 ? 1 : 2, std::vector<GF::Elt>{1});
            for (size_t i = 0; i < res.size(); ++i) {
                const GF::Elt x = cyclic_element(f.size, res[i]);
                auto& h = factors[f.size % 2 ? 0 : i % 2];
                h = poly_mul(h, {field_.neg(x), 1});
            }
            for (const auto& h : factors)
                for (GF::Elt c : h)
                    if (!std::binary_search(sub_.begin(), sub_.end(), c)) throw std::logic_error("factor is not defined over F_{q^2}");
            for (int m : lam.parts())
                for (const auto& h : factors) {
                    std::vector<GF::Elt> hm{1};
                    for (int i = 0; i < m; ++i) hm = poly_mul(hm, h);
                    place(hm);
                }
        }
        return out;
    }

   private:
    static int prime_of(int q) {
        if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
        int p = 2;
        while (q % p) ++p;
        return p;
    }
    static int field_degree(int n, int q) {
        const int p = prime_of(q);
        int e = 0;
        for (long v = 1; v < q; v *= p) ++e;
        int L = 1;
        for (int m = 1; m <= n; ++m) L = std::lcm(L, m);
        return 2 * e * L;
    }
    std::vector<GF::Elt> poly_mul(const std::vector<GF::Elt>& a, const std::vector<GF::Elt>& b) const {
        std::vector<GF::Elt> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(a[i], b[j]));
        return r;
    }

    int n_;
    int q_;
    GF field_;
    std::vector<GF::Elt> sub_;
};

/// The group U(n, F_{q^2}) listed explicitly.
struct BruteGroup {
    BruteField field;
    std::vector<UMatrix> elements;

    int n() const { return field.n(); }
    int q() const { return field.q(); }
};

/// All unitary matrices, found row by row among vectors of hermitian norm 1.
inline BruteGroup enumerate_group(int n, int q, const BruteOptions& opt = {}) {
    if (!brute_supported(n, q, opt.allow_large)) throw UnsupportedSize("bruteforce: (n, q) outside the supported list");
    const Integer order = unitary_group_order(n, q);
    if (order > opt.max_group_order) throw BoundExceeded("bruteforce: group order exceeds the bound");
    BruteGroup g{BruteField(n, q), {}};
    const BruteField& bf = g.field;
    const GF& F = bf.field();
    const auto& sub = bf.subfield();
    auto hermitian = [&](const std::vector<GF::Elt>& u, const std::vector<GF::Elt>& v) {
        GF::Elt s = 0;
        for (int k = 0; k < n; ++k) s = F.add(s, F.mul(u[k], bf.frob(v[k])));
        return s;
    };
    std::vector<std::vector<GF::Elt>> unit;
    std::vector<GF::Elt> v(n, 0);
    std::vector<size_t> idx(n, 0);
    while (true) {
        for (int k = 0; k < n; ++k) v[k] = sub[idx[k]];
        if (hermitian(v, v) == 1) unit.push_back(v);
        int k = n - 1;
        while (k >= 0 && ++idx[k] == sub.size()) idx[k--] = 0;
        if (k < 0) break;
    }
    std::vector<int> rows;
    std::function<void()> rec = [&] {
        if (static_cast<int>(rows.size()) == n) {
            UMatrix m{n, {}};
            for (int r : rows) m.a.insert(m.a.end(), unit[r].begin(), unit[r].end());
            g.elements.push_back(std::move(m));
            return;
        }
        for (size_t c = 0; c < unit.size(); ++c) {
            bool ok = true;
            for (int r : rows)
                if (hermitian(unit[c], unit[r]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            rows.push_back(static_cast<int>(c));
            rec();
            rows.pop_back();
        }
    };
    rec();
    if (Integer(static_cast<long>(g.elements.size())) != order) throw std::logic_error("bruteforce: group order mismatch");
    return g;
}

/// Class sizes by enumeration.
inline std::map<MultiPartition, long> class_census(const BruteGroup& g) {
    std::map<MultiPartition, long> out;
    for (const auto& x : g.elements) ++out[g.field.classify(x)];
    return out;
}

inline long symmetric_count(const BruteGroup& g) {
    long c = 0;
    for (const auto& x : g.elements)
        if (g.field.transpose(x) == x) ++c;
    return c;
}

/// Stabilizer orders of the orbits of s -> u^t s u on symmetric elements, sorted.
inline std::vector<Integer> symmetric_stabilizers(const BruteGroup& g) {
    std::set<UMatrix> sym;
    for (const auto& x : g.elements)
        if (g.field.transpose(x) == x) sym.insert(x);
    std::vector<Integer> out;
    std::set<UMatrix> seen;
    for (const auto& s : sym) {
        if (seen.count(s)) continue;
        std::set<UMatrix> orbit;
        for (const auto& u : g.elements) orbit.insert(g.field.multiply(g.field.multiply(g.field.transpose(u), s), u));
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(Integer(static_cast<long>(g.elements.size())) / static_cast<long>(orbit.size()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Stabilizer orders predicted by the orthogonal and symplectic group orders, sorted.
inline std::vector<Integer> expected_symmetric_stabilizers(int n, long q) {
    auto prod = [&](int top) {
        Integer r = 1;
        for (int i = 1; i <= top; ++i) r *= integer_pow(q, 2 * i) - 1;
        return r;
    };
    std::vector<Integer> out;
    if (q % 2) {
        if (n % 2) {
            Integer o = 2 * integer_pow(q, static_cast<unsigned long>((n - 1) * (n - 1) / 4)) * prod((n - 1) / 2);
            out = {o, o};
        } else {
            Integer base = 2 * integer_pow(q, static_cast<unsigned long>((n * n - 2 * n) / 4)) * prod((n - 2) / 2);
            out = {base * (integer_pow(q, n / 2) - 1), base * (integer_pow(q, n / 2) + 1)};
        }
    } else if (n % 2) {
        out = {integer_pow(q, static_cast<unsigned long>((n - 1) * (n - 1) / 4)) * prod((n - 1) / 2)};
    } else {
        out = {integer_pow(q, static_cast<unsigned long>(n * n / 4)) * prod((n - 2) / 2),
               integer_pow(q, static_cast<unsigned long>(n * n / 4)) * prod(n / 2)};
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Involution { transpose_inverse, trivial };

struct IndicatorReport {
    std::map<MultiPartition, Cyclotomic> indicators;  // by theta-multipartition
    Cyclotomic weighted_sum;                          // sum eps(chi) chi(1)
    long fixed_count = 0;                             // #{g : iota(g)^{-1} = g}
};

/// eps(chi) = |G|^{-1} sum_g chi(g iota(g)), looked up through classify.
inline IndicatorReport twisted_fs(const BruteGroup& g, Context& ctx, Involution iota) {
    const int n = g.n();
    if (ctx.q() != g.q()) throw std::invalid_argument("twisted_fs: q differs");
    const BruteField& bf = g.field;
    std::map<MultiPartition, long> counts;
    IndicatorReport rep;
    for (const auto& x : g.elements) {
        // For unitary x, (x^t)^{-1} is the entrywise q-power of x.
        const UMatrix y = iota == Involution::transpose_inverse ? bf.frobenius(x) : x;
        ++counts[bf.classify(bf.multiply(x, y))];
        const UMatrix inv_iota = iota == Involution::transpose_inverse ? bf.transpose(x) : bf.transpose(bf.frobenius(x));
        if (inv_iota == x) ++rep.fixed_count;
    }
    const auto& table = ctx.char_table(n);
    const auto& rows = enumerate_mp(g.q(), OrbitKind::theta, n);
    const auto& cols = enumerate_mp(g.q(), OrbitKind::phi, n);
    std::map<MultiPartition, size_t> col_index;
    for (size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);
    const Rational inv_order = ratio(1, static_cast<long>(g.elements.size()));
    rep.weighted_sum = ctx.zero();
    for (size_t i = 0; i < rows.size(); ++i) {
        RootAccumulator acc(ctx.N());
        for (const auto& [mu, c] : counts) acc.add(table[i][col_index.at(mu)], inv_order * c);
        Cyclotomic eps = acc.finish();
        rep.weighted_sum += eps * table[i][0];
        rep.indicators.emplace(rows[i], std::move(eps));
    }
    return rep;
}

}  // namespace unitary

#endif  // UNITARY_BRUTEFORCE_HPP
