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

#ifndef UNITARY_REPTABLES_HPP
#define UNITARY_REPTABLES_HPP

// Degrees, degree sums and the Gelfand-Graev, symplectic and model decompositions.

#include <set>
#include <stdexcept>
#include <vector>

#include "charmap.hpp"

namespace unitary {

class EvenQ : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// q^{n(lambda')} prod_{i <= n} (q^i - (-1)^i) / prod_cells (q^h - (-1)^h), h = |phi| * hook, as a polynomial in q.
inline QPoly degree_hook_poly(const MultiPartition& lambda) {
    const QPoly x = QPoly::variable();
    auto factor = [&](long e) { return x.pow(static_cast<unsigned>(e)) - QPoly(e % 2 ? -1 : 1); };
    QPoly num = QPoly::monomial(static_cast<int>(lambda.conjugate().n_stat()));
    for (long i = 1; i <= lambda.size(); ++i) num *= factor(i);
    QPoly den = 1;
    for (const auto& [phi, l] : lambda.entries())
        for (int h : hooks(l)) den *= factor(static_cast<long>(phi.size) * h);
    return num.divide_exact(den);
}

/// Degree of chi^lambda from the hook formula.
inline Integer degree_hook(const MultiPartition& lambda) {
    Rational v = degree_hook_poly(lambda).eval(Rational(lambda.q()));
    if (v.get_den() != 1 || v <= 0) throw std::logic_error("hook degree is not a positive integer");
    return v.get_num();
}

/// Degree of chi^lambda through the principal specialization: (-1)^tau psi_n(-q) delta(s_lambda).
inline Integer degree_delta(const MultiPartition& lambda) {
    const Rational q = lambda.q();
    Rational v = parity_sign(tau_parity(lambda));
    for (long i = 1; i <= lambda.size(); ++i) v *= 1 - rational_pow(-q, i);
    for (const auto& [phi, l] : lambda.entries()) v *= delta_spec(SymFn1::element(SymBasis::s, l), phi.size, q);
    if (v.get_den() != 1) throw std::logic_error("delta degree is not an integer");
    return v.get_num();
}

struct DegreeRecord {
    MultiPartition lambda;
    QPoly degree_poly;
    Integer degree;
    int tau = 0;
    int height = 0;
    long odd_conjugate = 0;
};

inline std::vector<DegreeRecord> degree_records(int q, int n) {
    std::vector<DegreeRecord> out;
    for (const auto& l : enumerate_mp(q, OrbitKind::theta, n)) {
        QPoly p = degree_hook_poly(l);
        Integer d = degree_hook(l);
        out.push_back({l, std::move(p), std::move(d), tau_parity(l), l.height(), l.conjugate().odd_count()});
    }
    return out;
}

/// prod_{i <= m} (q^i + [i odd]).
inline Integer degree_sum_closed(int m, long q) {
    Integer r = 1;
    for (int i = 1; i <= m; ++i) r *= integer_pow(q, i) + (i % 2);
    return r;
}

inline Integer degree_sum(int q, int m) {
    Integer s = 0;
    for (const auto& l : enumerate_mp(q, OrbitKind::theta, m)) s += degree_hook(l);
    return s;
}

inline Integer degree_sum_delta(int q, int m) {
    Integer s = 0;
    for (const auto& l : enumerate_mp(q, OrbitKind::theta, m)) s += degree_delta(l);
    return s;
}

/// True when every part of every lambda(phi)' is even.
inline bool conjugate_even(const MultiPartition& lambda) {
    for (const auto& [phi, l] : lambda.entries()) {
        const Partition c = conjugate(l);
        for (int p : c.parts())
            if (p % 2) return false;
    }
    return true;
}

/// prod_{i <= 2m-1} (q^i + [i odd]).
inline Integer even_degree_sum_closed(int m, long q) { return degree_sum_closed(2 * m - 1, q); }

/// Sum of degrees over lambda of size 2m with lambda' even.
inline Integer even_degree_sum(int q, int m) {
    Integer s = 0;
    for (const auto& l : enumerate_mp(q, OrbitKind::theta, 2 * m))
        if (conjugate_even(l)) s += degree_hook(l);
    return s;
}

inline Integer symplectic_group_order(int m, long q) {
    Integer r = integer_pow(q, static_cast<unsigned long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= integer_pow(q, 2 * i) - 1;
    return r;
}

/// Class function sum_lambda c_lambda chi^lambda, returned as its image in the s_theta basis.
inline SymElement from_characters(Context& ctx, int n, const std::vector<MultiPartition>& lambdas) {
    SymElement out = ctx.element(n, Basis::s_theta);
    for (const auto& l : lambdas) out.add(l, parity_sign(tau_parity(l)));
    return out;
}

/// ch(Gamma_m) = (-1)^{floor(m/2)} sum_gamma p_gamma / z_gamma, returned in the s_theta basis.
inline SymElement gelfand_graev(Context& ctx, int m) {
    SymElement p = ctx.element(m, Basis::p_theta);
    const Rational sign = parity_sign(m / 2);
    for (const auto& g : enumerate_mp(ctx.q(), OrbitKind::theta, m)) p.add(g, sign / z_stat(g));
    return convert(ctx, p, Basis::s_theta);
}

inline bool conjectural_sp(int q) { return q % 2 == 0; }

/// Ind_{Sp_2r}^{U_2r}(1) as the sum of chi^lambda over lambda' even (s_theta basis).
inline SymElement sp_induction(Context& ctx, int r, bool allow_even_q = false) {
    if (conjectural_sp(ctx.q()) && !allow_even_q) throw EvenQ("symplectic induction needs odd q");
    std::vector<MultiPartition> support;
    for (const auto& l : enumerate_mp(ctx.q(), OrbitKind::theta, 2 * r))
        if (conjugate_even(l)) support.push_back(l);
    return from_characters(ctx, 2 * r, support);
}

/// Degree of a class function given in the s_theta basis, via hook degrees.
inline Cyclotomic degree_of(Context& ctx, const SymElement& f) {
    const SymElement s = convert(ctx, f, Basis::s_theta);
    Cyclotomic d = ctx.zero();
    for (const auto& [l, c] : s.coeffs) {
        Cyclotomic t = c;
        t *= parity_sign(tau_parity(l)) * Rational(degree_hook(l));
        d += t;
    }
    return d;
}

struct ModelTerm {
    int r = 0;
    std::map<MultiPartition, Cyclotomic> multiplicities;
    bool support_ok = false;  // support is {o(lambda') = m - 2r} with multiplicity 1
};

struct ModelDecomposition {
    int m = 0;
    int q = 0;
    bool conjectural = false;
    std::vector<ModelTerm> terms;
    bool union_ok = false;  // every lambda of size m exactly once over all r
};

inline ModelDecomposition model_decomposition(Context& ctx, int m, bool allow_even_q = false) {
    ModelDecomposition out;
    out.m = m;
    out.q = ctx.q();
    out.conjectural = conjectural_sp(ctx.q());
    std::map<MultiPartition, Cyclotomic> total;
    const Cyclotomic one = ctx.scalar(1);
    for (int r = 0; 2 * r <= m; ++r) {
        ModelTerm t;
        t.r = r;
        t.multiplicities = multiplicities(ctx, circ_product(ctx, gelfand_graev(ctx, m - 2 * r), sp_induction(ctx, r, allow_even_q)));
        std::set<MultiPartition> expect;
        for (const auto& l : enumerate_mp(ctx.q(), OrbitKind::theta, m))
            if (l.conjugate().odd_count() == m - 2 * r) expect.insert(l);
        t.support_ok = t.multiplicities.size() == expect.size();
        for (const auto& [l, c] : t.multiplicities) {
            if (!expect.count(l) || !(c == one)) t.support_ok = false;
            auto [it, inserted] = total.emplace(l, c);
            if (!inserted) it->second += c;
        }
        out.terms.push_back(std::move(t));
    }
    const auto& all = enumerate_mp(ctx.q(), OrbitKind::theta, m);
    out.union_ok = total.size() == all.size();
    for (const auto& l : all) {
        auto it = total.find(l);
        if (it == total.end() || !(it->second == one)) out.union_ok = false;
    }
    return out;
}

/// True iff chi^mu o chi^nu is a character: every constituent lambda of s_mu s_nu has
/// n(mu) + n(nu) = n(lambda) + |mu||nu| mod 2.
inline bool charprod_parity(const MultiPartition& mu, const MultiPartition& nu) {
    if (mu.kind() != OrbitKind::theta || nu.kind() != OrbitKind::theta) throw std::invalid_argument("charprod_parity expects theta-multipartitions");
    const long target = (mu.n_stat() + nu.n_stat() + mu.size() * nu.size()) % 2;
    std::map<OrbitId, std::pair<Partition, Partition>> joint;
    for (const auto& [o, p] : mu.entries()) joint[o].first = p;
    for (const auto& [o, p] : nu.entries()) joint[o].second = p;
    std::set<long> reach{0};
    for (const auto& [o, pr] : joint) {
        std::set<long> local;
        const SymFn1 prod = multiply(SymFn1::element(SymBasis::s, pr.first), SymFn1::element(SymBasis::s, pr.second));
        for (const auto& [l, c] : prod.coeffs)
            if (c.coefficient(0) > 0) local.insert((o.size * n_stat(l)) % 2);
        std::set<long> next;
        for (long a : reach)
            for (long b : local) next.insert((a + b) % 2);
        reach = std::move(next);
    }
    for (long p : reach)
        if (p != target) return false;
    return true;
}

}  // namespace unitary

#endif  // UNITARY_REPTABLES_HPP
