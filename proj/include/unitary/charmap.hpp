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

#ifndef UNITARY_CHARMAP_HPP
#define UNITARY_CHARMAP_HPP

// Class functions of U_n and their images under the characteristic map.
// Bases: P and pi (Phi-indexed, identified coefficientwise; the pi coefficient
// is the value on the class), p_phi (Phi power sums), p_theta and s_theta.

#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "exactnum.hpp"
#include "multipartitions.hpp"
#include "orbits.hpp"
#include "partitions.hpp"
#include "symfunc.hpp"

namespace unitary {

enum class Basis { P, pi, p_phi, p_theta, s_theta };

inline const char* to_string(Basis b) {
    switch (b) {
        case Basis::P:
            return "P";
        case Basis::pi:
            return "pi";
        case Basis::p_phi:
            return "p_phi";
        case Basis::p_theta:
            return "p_theta";
        case Basis::s_theta:
            return "s_theta";
    }
    return "?";
}

inline OrbitKind basis_kind(Basis b) {
    return (b == Basis::p_theta || b == Basis::s_theta) ? OrbitKind::theta : OrbitKind::phi;
}

/// Homogeneous element of degree n in one of the bases, coefficients in Q(zeta_N).
struct SymElement {
    int q = 2;
    int n = 0;
    Basis basis = Basis::P;
    long long conductor = 1;
    std::map<MultiPartition, Cyclotomic> coeffs;

    void add(const MultiPartition& mu, const Cyclotomic& c) {
        if (mu.size() != n) throw SizeMismatch("SymElement: degree mix");
        if (mu.kind() != basis_kind(basis)) throw std::invalid_argument("SymElement: orbit kind does not match basis");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    void add(const MultiPartition& mu, const Rational& c) { add(mu, Cyclotomic(static_cast<int>(conductor), c)); }

    Cyclotomic coefficient(const MultiPartition& mu) const {
        auto it = coeffs.find(mu);
        return it == coeffs.end() ? Cyclotomic(static_cast<int>(conductor)) : it->second;
    }

    friend bool operator==(const SymElement& a, const SymElement& b) {
        return a.q == b.q && a.n == b.n && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

/// tau(lambda) mod 2 = floor(n/2) + n(lambda).
inline int tau_parity(const MultiPartition& lambda) {
    return static_cast<int>((lambda.size() / 2 + lambda.n_stat()) % 2);
}

inline Rational parity_sign(long e) { return (e % 2) ? Rational(-1) : Rational(1); }

/// Torus label: blocks nu_i with a character theta_i of M_{nu_i} given by its residue.
struct TorusLabel {
    Partition nu;
    std::vector<long long> theta;
};

namespace detail {

using RationalRow = std::vector<std::pair<Partition, Rational>>;

// Product over the entries of mu of per-orbit expansions.
inline std::map<MultiPartition, Rational> expand_orbitwise(
    const MultiPartition& mu, OrbitKind target,
    const std::function<const RationalRow&(const OrbitId&, const Partition&)>& row) {
    std::map<MultiPartition, Rational> out;
    std::vector<MultiPartition::Entry> cur;
    const auto& e = mu.entries();
    std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& c) {
        if (i == e.size()) {
            out[MultiPartition(target, mu.q(), cur)] += c;
            return;
        }
        for (const auto& [p, v] : row(e[i].first, e[i].second)) {
            OrbitId o = e[i].first;
            o.kind = target;
            cur.emplace_back(o, p);
            rec(i + 1, c * v);
            cur.pop_back();
        }
    };
    rec(0, Rational(1));
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline void add_scaled(std::map<MultiPartition, Cyclotomic>& acc, const MultiPartition& mu, const Cyclotomic& c,
                       const Rational& s) {
    if (c.is_zero() || s == 0) return;
    Cyclotomic t = c;
    t *= s;
    auto [it, inserted] = acc.emplace(mu, t);
    if (!inserted) {
        it->second += t;
        if (it->second.is_zero()) acc.erase(it);
    }
}

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const size_t m = a.size();
    std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, 0));
    for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < m; ++c) {
        size_t piv = c;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) throw DivisionByZero("singular matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const Rational d = a[c][c];
        for (size_t j = 0; j < m; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (size_t j = 0; j < m; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace detail

/// Shared state for one q: caches are write-once and safe to read from several threads.
class Context {
   public:
    Context(int q, int max_n, unsigned threads = 1) : q_(q), max_n_(max_n), threads_(threads ? threads : 1) {
        if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
        if (max_n < 1) throw std::invalid_argument("max_n must be positive");
        conductor_ = conductor_for(q, max_n);
        if (conductor_ > (1 << 24)) throw std::overflow_error("conductor too large");
    }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    int q() const { return q_; }
    int max_n() const { return max_n_; }
    unsigned threads() const { return threads_; }
    long long conductor() const { return conductor_; }
    int N() const { return static_cast<int>(conductor_); }

    Cyclotomic zero() const { return Cyclotomic(N()); }
    Cyclotomic scalar(const Rational& r) const { return Cyclotomic(N(), r); }

    SymElement element(int n, Basis b) const { return SymElement{q_, n, b, conductor_, {}}; }

    void check_degree(long n) const {
        if (n > max_n_) throw std::invalid_argument("degree exceeds the context bound");
    }

    const std::map<TransformKey, Cyclotomic>& transform(const OrbitId& phi, int k) {
        return transform_.get({phi, k}, [&] { return transform_p(phi, k, conductor_); });
    }

    /// G[nu][mu] = Q_nu^mu((-q)^d), rows and columns in partitions_of(m) order.
    const std::vector<std::vector<Rational>>& green_matrix(int m, int d) {
        return green_.get({m, d}, [&] {
            const auto& parts = partitions_of(m);
            const Rational x = rational_pow(Rational(-q_), d);
            std::vector<std::vector<Rational>> g(parts.size(), std::vector<Rational>(parts.size()));
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = 0; j < parts.size(); ++j) g[i][j] = green_poly(parts[i], parts[j]).eval(x);
            return g;
        });
    }

    const std::vector<std::vector<Rational>>& inverse_green_matrix(int m, int d) {
        return green_inv_.get({m, d}, [&] { return detail::invert(green_matrix(m, d)); });
    }

    /// p_nu(f) = sum_mu Q_nu^mu((-q)^d) P_mu(f).
    const detail::RationalRow& green_row(const Partition& nu, int d) {
        return green_rows_.get({nu, d}, [&] { return matrix_row(green_matrix(nu.size(), d), nu); });
    }
    /// P_mu(f) = sum_nu Ginv[mu][nu] p_nu(f).
    const detail::RationalRow& inverse_green_row(const Partition& mu, int d) {
        return green_inv_rows_.get({mu, d}, [&] { return matrix_row(inverse_green_matrix(mu.size(), d), mu); });
    }

    /// p_gamma (Phi) in the P basis.
    const std::map<MultiPartition, Rational>& power_sum_in_P(const MultiPartition& gamma) {
        return power_in_P_.get(gamma, [&] {
            return detail::expand_orbitwise(gamma, OrbitKind::phi, [&](const OrbitId& f, const Partition& nu) -> const detail::RationalRow& {
                return green_row(nu, f.size);
            });
        });
    }

    /// P_mu in the p_phi basis.
    const std::map<MultiPartition, Rational>& P_in_power_sums(const MultiPartition& mu) {
        return P_in_power_.get(mu, [&] {
            return detail::expand_orbitwise(mu, OrbitKind::phi, [&](const OrbitId& f, const Partition& m) -> const detail::RationalRow& {
                return inverse_green_row(m, f.size);
            });
        });
    }

    /// p_gamma (Theta) in the p_phi basis.
    const std::map<MultiPartition, Cyclotomic>& theta_power_in_phi(const MultiPartition& gamma) {
        return theta_power_.get(gamma, [&] {
            check_degree(gamma.size());
            std::map<MultiPartition, Cyclotomic> cur{{MultiPartition(OrbitKind::phi, q_), scalar(1)}};
            for (const auto& [phi, lam] : gamma.entries()) {
                for (int k : lam.parts()) {
                    std::map<MultiPartition, Cyclotomic> next;
                    for (const auto& [mu, c] : cur)
                        for (const auto& [key, v] : transform(phi, k)) {
                            MultiPartition m2 = concatenate(mu, MultiPartition::single(key.first, Partition{key.second}));
                            Cyclotomic t = c * v;
                            auto [it, inserted] = next.emplace(std::move(m2), t);
                            if (!inserted) it->second += t;
                        }
                    cur.clear();
                    for (auto& [mu, c] : next)
                        if (!c.is_zero()) cur.emplace(mu, std::move(c));
                }
            }
            return cur;
        });
    }

    /// s_lambda in the p_theta basis (rational coefficients).
    const std::map<MultiPartition, Rational>& schur_in_power_sums(const MultiPartition& lambda) {
        return schur_in_p_.get(lambda, [&] {
            return detail::expand_orbitwise(lambda, OrbitKind::theta, [&](const OrbitId&, const Partition& l) -> const detail::RationalRow& {
                return schur_row(l);
            });
        });
    }

    /// p_gamma (Theta) in the s_theta basis.
    const std::map<MultiPartition, Rational>& power_sum_in_schur(const MultiPartition& gamma) {
        return p_in_schur_.get(gamma, [&] {
            return detail::expand_orbitwise(gamma, OrbitKind::theta, [&](const OrbitId&, const Partition& r) -> const detail::RationalRow& {
                return power_row(r);
            });
        });
    }

    /// s_lambda in the P basis.
    const SymElement& schur_in_P(const MultiPartition& lambda) {
        return schur_in_P_.get(lambda, [&] {
            if (lambda.kind() != OrbitKind::theta || lambda.q() != q_) throw std::invalid_argument("schur_in_P expects a theta-multipartition");
            check_degree(lambda.size());
            std::map<MultiPartition, Cyclotomic> pphi;
            for (const auto& [gamma, c] : schur_in_power_sums(lambda))
                for (const auto& [mu, v] : theta_power_in_phi(gamma)) detail::add_scaled(pphi, mu, v, c);
            SymElement out = element(static_cast<int>(lambda.size()), Basis::P);
            for (const auto& [gamma, c] : pphi)
                for (const auto& [mu, g] : power_sum_in_P(gamma)) detail::add_scaled(out.coeffs, mu, c, g);
            return out;
        });
    }

    const Integer& centralizer(const MultiPartition& mu) {
        return centralizers_.get(mu, [&] { return centralizer_order(mu); });
    }

    /// Rows enumerate_mp(theta, n), columns enumerate_mp(phi, n).
    const std::vector<std::vector<Cyclotomic>>& char_table(int n) {
        return tables_.get(n, [&] {
            check_degree(n);
            const auto& rows = enumerate_mp(q_, OrbitKind::theta, n);
            const auto& cols = enumerate_mp(q_, OrbitKind::phi, n);
            std::vector<std::vector<Cyclotomic>> table(rows.size());
            auto fill = [&](size_t i) {
                const SymElement& s = schur_in_P(rows[i]);
                const Rational sign = parity_sign(tau_parity(rows[i]));
                std::vector<Cyclotomic> row;
                row.reserve(cols.size());
                for (const auto& mu : cols) {
                    Cyclotomic v = s.coefficient(mu);
                    v *= sign;
                    row.push_back(std::move(v));
                }
                table[i] = std::move(row);
            };
            if (threads_ <= 1) {
                for (size_t i = 0; i < rows.size(); ++i) fill(i);
            } else {
                std::atomic<size_t> next{0};
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < threads_; ++t)
                    pool.emplace_back([&] {
                        for (size_t i = next++; i < rows.size(); i = next++) fill(i);
                    });
                for (auto& th : pool) th.join();
            }
            return table;
        });
    }

    /// Hall values g_{mu nu}^lambda((-q)^d), nonzero only.
    const detail::RationalRow& hall_values(const Partition& mu, const Partition& nu, int d) {
        return hall_.get({{mu, nu}, d}, [&] {
            detail::RationalRow out;
            const Rational x = rational_pow(Rational(-q_), d);
            for (const auto& lam : partitions_of(mu.size() + nu.size())) {
                Rational v = hall_polynomial(mu, nu, lam).eval(x);
                if (v != 0) out.emplace_back(lam, v);
            }
            return out;
        });
    }

   private:
    static detail::RationalRow matrix_row(const std::vector<std::vector<Rational>>& g, const Partition& p) {
        const auto& parts = partitions_of(p.size());
        const int i = degree_tables(p.size()).index.at(p);
        detail::RationalRow out;
        for (size_t j = 0; j < parts.size(); ++j)
            if (g[i][j] != 0) out.emplace_back(parts[j], g[i][j]);
        return out;
    }

    const detail::RationalRow& schur_row(const Partition& lam) {
        return schur_rows_.get(lam, [&] {
            const auto& t = degree_tables(lam.size());
            const int l = t.index.at(lam);
            detail::RationalRow out;
            for (size_t j = 0; j < t.parts.size(); ++j)
                if (t.chi[l][j] != 0) out.emplace_back(t.parts[j], ratio(t.chi[l][j], t.z[j]));
            return out;
        });
    }

    const detail::RationalRow& power_row(const Partition& rho) {
        return power_rows_.get(rho, [&] {
            const auto& t = degree_tables(rho.size());
            const int j = t.index.at(rho);
            detail::RationalRow out;
            for (size_t l = 0; l < t.parts.size(); ++l)
                if (t.chi[l][j] != 0) out.emplace_back(t.parts[l], Rational(t.chi[l][j]));
            return out;
        });
    }

    int q_;
    int max_n_;
    unsigned threads_;
    long long conductor_;
    detail::OnceCache<std::pair<OrbitId, int>, std::map<TransformKey, Cyclotomic>> transform_;
    detail::OnceCache<std::pair<int, int>, std::vector<std::vector<Rational>>> green_, green_inv_;
    detail::OnceCache<std::pair<Partition, int>, detail::RationalRow> green_rows_, green_inv_rows_;
    detail::OnceCache<MultiPartition, std::map<MultiPartition, Rational>> power_in_P_, P_in_power_;
    detail::OnceCache<MultiPartition, std::map<MultiPartition, Cyclotomic>> theta_power_;
    detail::OnceCache<MultiPartition, std::map<MultiPartition, Rational>> schur_in_p_, p_in_schur_;
    detail::OnceCache<Partition, detail::RationalRow> schur_rows_, power_rows_;
    detail::OnceCache<MultiPartition, SymElement> schur_in_P_;
    detail::OnceCache<MultiPartition, Integer> centralizers_;
    detail::OnceCache<int, std::vector<std::vector<Cyclotomic>>> tables_;
    detail::OnceCache<std::pair<std::pair<Partition, Partition>, int>, detail::RationalRow> hall_;
};

/// s_lambda expanded in the P basis.
inline SymElement expand_schur(Context& ctx, const MultiPartition& lambda) { return ctx.schur_in_P(lambda); }

inline SymElement convert(Context& ctx, const SymElement& x, Basis target);

/// <a, b> = sum_mu a_mu^{-1} a(mu) conj(b(mu)) in the P basis.
inline Cyclotomic inner_product(Context& ctx, const SymElement& a, const SymElement& b) {
    if (a.n != b.n) throw SizeMismatch("inner_product: degrees differ");
    if (a.q != b.q || a.q != ctx.q()) throw std::invalid_argument("inner_product: q differs");
    const SymElement pa = convert(ctx, a, Basis::P);
    const SymElement pb = convert(ctx, b, Basis::P);
    RootAccumulator acc(ctx.N());
    for (const auto& [mu, ca] : pa.coeffs) {
        auto it = pb.coeffs.find(mu);
        if (it == pb.coeffs.end()) continue;
        acc.add(ca * it->second.conj(), ratio(1, ctx.centralizer(mu)));
    }
    return acc.finish();
}

inline SymElement convert(Context& ctx, const SymElement& x, Basis target) {
    if (x.q != ctx.q()) throw std::invalid_argument("convert: q differs");
    auto relabel = [](SymElement e, Basis b) {
        e.basis = b;
        return e;
    };
    if (x.basis == target) return x;
    const bool x_pi = x.basis == Basis::P || x.basis == Basis::pi;
    const bool t_pi = target == Basis::P || target == Basis::pi;
    if (x_pi && t_pi) return relabel(x, target);
    SymElement out = ctx.element(x.n, target);
    switch (x.basis) {
        case Basis::s_theta:
            if (target == Basis::p_theta) {
                for (const auto& [lam, c] : x.coeffs)
                    for (const auto& [g, v] : ctx.schur_in_power_sums(lam)) detail::add_scaled(out.coeffs, g, c, v);
                return out;
            }
            return convert(ctx, convert(ctx, x, Basis::p_theta), target);
        case Basis::p_theta:
            if (target == Basis::s_theta) {
                for (const auto& [g, c] : x.coeffs)
                    for (const auto& [lam, v] : ctx.power_sum_in_schur(g)) detail::add_scaled(out.coeffs, lam, c, v);
                return out;
            }
            {
                ctx.check_degree(x.n);
                SymElement pphi = ctx.element(x.n, Basis::p_phi);
                for (const auto& [g, c] : x.coeffs)
                    for (const auto& [mu, v] : ctx.theta_power_in_phi(g)) {
                        Cyclotomic t = c * v;
                        pphi.add(mu, t);
                    }
                return convert(ctx, pphi, target);
            }
        case Basis::p_phi:
            if (t_pi) {
                for (const auto& [g, c] : x.coeffs)
                    for (const auto& [mu, v] : ctx.power_sum_in_P(g)) detail::add_scaled(out.coeffs, mu, c, v);
                return out;
            }
            return convert(ctx, convert(ctx, x, Basis::P), target);
        case Basis::P:
        case Basis::pi:
            if (target == Basis::p_phi) {
                for (const auto& [mu, c] : x.coeffs)
                    for (const auto& [g, v] : ctx.P_in_power_sums(mu)) detail::add_scaled(out.coeffs, g, c, v);
                return out;
            }
            if (target == Basis::s_theta) {
                for (const auto& lam : enumerate_mp(ctx.q(), OrbitKind::theta, x.n)) {
                    Cyclotomic c = inner_product(ctx, x, ctx.schur_in_P(lam));
                    out.add(lam, c);
                }
                return out;
            }
            return convert(ctx, convert(ctx, x, Basis::s_theta), target);
    }
    throw std::invalid_argument("convert: unknown basis");
}

/// Irreducible character chi^lambda as a class function.
inline SymElement character(Context& ctx, const MultiPartition& lambda) {
    SymElement s = ctx.schur_in_P(lambda);
    s.basis = Basis::pi;
    const Rational sign = parity_sign(tau_parity(lambda));
    for (auto& [mu, c] : s.coeffs) c *= sign;
    return s;
}

/// Multiplicities <alpha, chi^lambda> over all lambda, nonzero entries only.
inline std::map<MultiPartition, Cyclotomic> multiplicities(Context& ctx, const SymElement& alpha) {
    const SymElement s = convert(ctx, alpha, Basis::s_theta);
    std::map<MultiPartition, Cyclotomic> out;
    for (const auto& [lam, c] : s.coeffs) {
        Cyclotomic m = c;
        m *= parity_sign(tau_parity(lam));
        out.emplace(lam, std::move(m));
    }
    return out;
}

/// The Theta-multipartition mu_{nu theta} attached to a torus label.
inline MultiPartition torus_multipartition(int q, const TorusLabel& t) {
    if (static_cast<int>(t.theta.size()) != t.nu.length()) throw std::invalid_argument("torus label: one character per block");
    std::map<OrbitId, std::vector<int>> parts;
    for (int i = 0; i < t.nu.length(); ++i) {
        const OrbitId phi = theta_orbit_of(CyclicElt{q, t.nu[i], t.theta[i]});
        parts[phi].push_back(t.nu[i] / phi.size);
    }
    std::vector<MultiPartition::Entry> e;
    for (auto& [o, ps] : parts) e.emplace_back(o, Partition::from_unsorted(std::move(ps)));
    return MultiPartition(OrbitKind::theta, q, std::move(e));
}

enum class DlPath { transform, torus_sum };

/// R_T(theta) as a class function (pi basis), computed through the transform or by summing over the torus.
inline SymElement dl_character(Context& ctx, const TorusLabel& label, DlPath path = DlPath::transform) {
    const int q = ctx.q();
    const int n = label.nu.size();
    ctx.check_degree(n);
    if (path == DlPath::transform) {
        const MultiPartition gamma = torus_multipartition(q, label);
        SymElement p = ctx.element(n, Basis::p_theta);
        p.add(gamma, parity_sign(gamma.size() - gamma.length()));
        return convert(ctx, p, Basis::pi);
    }
    const int blocks = label.nu.length();
    if (static_cast<int>(label.theta.size()) != blocks) throw std::invalid_argument("torus label: one character per block");
    std::map<MultiPartition, RootAccumulator> by_class;
    std::vector<long long> k(blocks, 0);
    std::vector<long long> orders(blocks);
    for (int i = 0; i < blocks; ++i) orders[i] = cyclic_order(q, label.nu[i]);
    while (true) {
        std::vector<std::pair<int, CyclicElt>> b;
        long long e = 0;
        for (int i = 0; i < blocks; ++i) {
            b.emplace_back(label.nu[i], CyclicElt{q, label.nu[i], k[i]});
            e += mod(label.theta[i] * k[i], orders[i]) * (ctx.conductor() / orders[i]);
        }
        auto it = by_class.try_emplace(gamma_t(q, b), ctx.N()).first;
        it->second.add(static_cast<long>(mod(e, ctx.conductor())));
        int i = 0;
        while (i < blocks && ++k[i] == orders[i]) k[i++] = 0;
        if (i == blocks) break;
    }
    SymElement out = ctx.element(n, Basis::pi);
    for (const auto& [g, acc] : by_class) {
        const Cyclotomic c = acc.finish();
        for (const auto& [mu, v] : ctx.power_sum_in_P(g)) detail::add_scaled(out.coeffs, mu, c, v);
    }
    return out;
}

/// Lusztig-Srinivasan sum R(lambda) as a class function (pi basis).
inline SymElement ls_sum(Context& ctx, const MultiPartition& lambda) {
    if (lambda.kind() != OrbitKind::theta) throw std::invalid_argument("ls_sum expects a theta-multipartition");
    const long n = lambda.size();
    long e = lambda.conjugate().n_stat() + n / 2;
    for (const auto& [phi, l] : lambda.entries()) e += phi.size * (l.size() / 2) + l.size() + phi.size * ((l.size() + 1) / 2);
    const Rational sign = parity_sign(e);
    SymElement p = ctx.element(static_cast<int>(n), Basis::p_theta);
    for (const auto& gamma : semisimple_class(lambda)) {
        Rational w = sign / z_stat(gamma);
        for (const auto& [phi, l] : lambda.entries()) w *= sn_char(l, gamma.at(phi));
        p.add(gamma, w * parity_sign(n - gamma.length()));
    }
    return convert(ctx, p, Basis::pi);
}

/// Ennola's product through Hall values at (-q)^{d(f)}; result in the pi basis.
inline SymElement star_product(Context& ctx, const SymElement& a, const SymElement& b) {
    const SymElement pa = convert(ctx, a, Basis::pi);
    const SymElement pb = convert(ctx, b, Basis::pi);
    ctx.check_degree(a.n + b.n);
    SymElement out = ctx.element(a.n + b.n, Basis::pi);
    for (const auto& [m1, c1] : pa.coeffs)
        for (const auto& [m2, c2] : pb.coeffs) {
            const Cyclotomic c = c1 * c2;
            std::map<OrbitId, std::pair<Partition, Partition>> joint;
            for (const auto& [f, p] : m1.entries()) joint[f].first = p;
            for (const auto& [f, p] : m2.entries()) joint[f].second = p;
            std::vector<std::pair<OrbitId, const detail::RationalRow*>> rows;
            std::vector<detail::RationalRow> singles;
            singles.reserve(joint.size());
            for (const auto& [f, pr] : joint) {
                if (pr.first.empty() || pr.second.empty()) {
                    singles.push_back({{pr.first.empty() ? pr.second : pr.first, Rational(1)}});
                    rows.emplace_back(f, &singles.back());
                } else {
                    rows.emplace_back(f, &ctx.hall_values(pr.first, pr.second, f.size));
                }
            }
            std::vector<MultiPartition::Entry> cur;
            std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& v) {
                if (i == rows.size()) {
                    detail::add_scaled(out.coeffs, MultiPartition(OrbitKind::phi, ctx.q(), cur), c, v);
                    return;
                }
                for (const auto& [lam, g] : *rows[i].second) {
                    cur.emplace_back(rows[i].first, lam);
                    rec(i + 1, v * g);
                    cur.pop_back();
                }
            };
            rec(0, Rational(1));
        }
    return out;
}

/// Product of characteristic images in a power-sum basis; result in the basis of a.
inline SymElement circ_product(Context& ctx, const SymElement& a, const SymElement& b) {
    const bool theta = basis_kind(a.basis) == OrbitKind::theta && basis_kind(b.basis) == OrbitKind::theta;
    const Basis work = theta ? Basis::p_theta : Basis::p_phi;
    if (!theta) ctx.check_degree(a.n + b.n);
    const SymElement pa = convert(ctx, a, work);
    const SymElement pb = convert(ctx, b, work);
    SymElement out = ctx.element(a.n + b.n, work);
    for (const auto& [m1, c1] : pa.coeffs)
        for (const auto& [m2, c2] : pb.coeffs) out.add(concatenate(m1, m2), c1 * c2);
    return convert(ctx, out, a.basis);
}

}  // namespace unitary

#endif  // UNITARY_CHARMAP_HPP
