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

#ifndef UNITARY_SYMFUNC_HPP
#define UNITARY_SYMFUNC_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "exactnum.hpp"
#include "partitions.hpp"

namespace unitary {

class SizeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline long sn_char_beta(std::vector<int> beta, const std::vector<int>& nu, size_t pos,
                         std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (pos == nu.size()) return 1;
    auto key = std::make_pair(beta, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = nu[pos];
    long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i] - r;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > b && x < beta[i]) ++between;
        std::vector<int> next = beta;
        next[i] = b;
        std::sort(next.begin(), next.end(), std::greater<>());
        long v = sn_char_beta(std::move(next), nu, pos + 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// Irreducible S_n character omega^lambda at cycle type nu (Murnaghan-Nakayama on beta-sets).
inline long sn_char(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size()) throw SizeMismatch("sn_char: |lambda| != |nu|");
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
    std::map<std::pair<std::vector<int>, size_t>, long> memo;
    return detail::sn_char_beta(std::move(beta), nu.parts(), 0, memo);
}

/// True iff lambda/nu is a horizontal strip of size r.
inline bool horizontal_strip(const Partition& lambda, const Partition& nu, int r) {
    if (!contains(lambda, nu) || lambda.size() - nu.size() != r) return false;
    for (int i = 0; i + 1 < lambda.length(); ++i)
        if (lambda[i + 1] > nu[i]) return false;
    return true;
}

/// All nu with lambda/nu a horizontal strip of size r.
inline std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int r) {
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> nu(len);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == len) {
            if (left == 0) out.push_back(Partition(nu));
            return;
        }
        const int lo = lambda[i + 1];
        for (int v = lambda[i]; v >= lo; --v) {
            int take = lambda[i] - v;
            if (take > left) break;
            nu[i] = v;
            self(self, i + 1, left - take);
        }
    };
    rec(rec, 0, r);
    return out;
}

using Tableau = std::vector<std::vector<int>>;

/// Semistandard tableaux of the given shape and (partition) content.
inline std::vector<Tableau> ssyt(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) throw SizeMismatch("ssyt: shape and content sizes differ");
    std::vector<Tableau> out;
    // Peel horizontal strips labelled k, k-1, ..., 1 off the shape.
    std::vector<Partition> chain{shape};
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 0) {
            if (!chain.back().empty()) return;
            Tableau t(shape.length());
            for (int label = 1; label <= content.length(); ++label) {
                const Partition& outer = chain[content.length() - label];
                const Partition& inner = chain[content.length() - label + 1];
                for (int i = 0; i < outer.length(); ++i)
                    for (int j = inner[i]; j < outer[i]; ++j) t[i].push_back(label);
            }
            out.push_back(std::move(t));
            return;
        }
        for (const auto& nu : remove_horizontal_strips(chain.back(), content[k - 1])) {
            chain.push_back(nu);
            self(self, k - 1);
            chain.pop_back();
        }
    };
    rec(rec, content.length());
    return out;
}

/// Rows from bottom to top, each read left to right.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
inline long charge(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::vector<bool> used(len, false);
    int remaining = len;
    long total = 0;
    while (remaining > 0) {
        int pos = len;  // scanning starts just past the right end
        int letter = 1;
        int index = 0;
        while (true) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= len; ++step) {
                int p = pos - step;
                if (p < 0) {
                    p += len;
                    wrapped = true;
                }
                if (!used[p] && word[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0) break;
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[found] = true;
            --remaining;
            pos = found;
            ++letter;
        }
    }
    return total;
}

/// K_{lambda mu}(t) as the charge generating function over SSYT(lambda, mu).
inline QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch("kostka_foulkes: sizes differ");
    if (!dominates(lambda, mu)) return QPoly();
    QPoly k;
    for (const auto& t : ssyt(lambda, mu)) k += QPoly::monomial(static_cast<int>(charge(reading_word(t))));
    return k;
}

namespace detail {

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<long>> chi;       // chi[lambda][nu]
    std::vector<Integer> z;                   // z[nu]
    std::vector<std::vector<QPoly>> K;        // s_lambda = sum_mu K[lambda][mu] P_mu
    std::vector<std::vector<QPoly>> Kinv;     // P_mu = sum_lambda Kinv[mu][lambda] s_lambda
};

inline DegreeTables build_degree_tables(int n) {
    DegreeTables t;
    t.parts = partitions_of(n);
    const int m = static_cast<int>(t.parts.size());
    for (int i = 0; i < m; ++i) t.index.emplace(t.parts[i], i);
    t.chi.assign(m, std::vector<long>(m));
    t.K.assign(m, std::vector<QPoly>(m));
    t.Kinv.assign(m, std::vector<QPoly>(m));
    for (int i = 0; i < m; ++i) {
        t.z.push_back(z_stat(t.parts[i]));
        for (int j = 0; j < m; ++j) {
            t.chi[i][j] = sn_char(t.parts[i], t.parts[j]);
            t.K[i][j] = kostka_foulkes(t.parts[i], t.parts[j]);
        }
    }
    // Reverse-lex order refines dominance, so K is upper unitriangular.
    for (int i = 0; i < m; ++i) {
        t.Kinv[i][i] = 1;
        for (int j = i + 1; j < m; ++j) {
            QPoly acc;
            for (int k = i; k < j; ++k)
                if (!t.K[k][j].is_zero() && !t.Kinv[i][k].is_zero()) acc += t.Kinv[i][k] * t.K[k][j];
            t.Kinv[i][j] = -acc;
        }
    }
    return t;
}

}  // namespace detail

inline const detail::DegreeTables& degree_tables(int n) {
    static detail::OnceCache<int, detail::DegreeTables> cache;
    return cache.get(n, [n] { return detail::build_degree_tables(n); });
}

/// Q_nu^mu(t) via t^{n(mu)} Q_nu^mu(1/t) = sum_lambda omega^lambda(nu) K_{lambda mu}(t).
inline QPoly green_poly(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) throw SizeMismatch("green_poly: sizes differ");
    const auto& t = degree_tables(nu.size());
    const int iv = t.index.at(nu);
    const int im = t.index.at(mu);
    QPoly x;
    for (size_t l = 0; l < t.parts.size(); ++l)
        if (t.chi[l][iv] != 0) x += Rational(t.chi[l][iv]) * t.K[l][im];
    QPoly q = x.inverted().shifted(static_cast<int>(n_stat(mu)));
    if (!q.is_polynomial()) throw std::logic_error("green polynomial is not a polynomial");
    return q;
}

enum class SymBasis { p, s, hl };

/// Homogeneous symmetric function in one set of variables.
struct SymFn1 {
    int degree = 0;
    SymBasis basis = SymBasis::s;
    std::map<Partition, QPoly> coeffs;

    static SymFn1 element(SymBasis b, const Partition& lambda, const QPoly& c = 1) {
        SymFn1 f{lambda.size(), b, {}};
        f.add(lambda, c);
        return f;
    }

    void add(const Partition& lambda, const QPoly& c) {
        if (lambda.size() != degree) throw SizeMismatch("SymFn1: degree mix");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    QPoly coefficient(const Partition& lambda) const {
        auto it = coeffs.find(lambda);
        return it == coeffs.end() ? QPoly() : it->second;
    }

    friend bool operator==(const SymFn1&, const SymFn1&) = default;
};

namespace detail {

inline SymFn1 to_s(const SymFn1& f) {
    if (f.basis == SymBasis::s) return f;
    const auto& t = degree_tables(f.degree);
    SymFn1 out{f.degree, SymBasis::s, {}};
    for (const auto& [lam, c] : f.coeffs) {
        auto it = t.index.find(lam);
        if (it == t.index.end()) throw SizeMismatch("SymFn1: degree mix");
        const int j = it->second;
        for (size_t l = 0; l < t.parts.size(); ++l) {
            if (f.basis == SymBasis::p) {
                if (t.chi[l][j] != 0) out.add(t.parts[l], Rational(t.chi[l][j]) * c);
            } else {
                if (!t.Kinv[j][l].is_zero()) out.add(t.parts[l], t.Kinv[j][l] * c);
            }
        }
    }
    return out;
}

inline SymFn1 from_s(const SymFn1& f, SymBasis target) {
    if (target == SymBasis::s) return f;
    const auto& t = degree_tables(f.degree);
    SymFn1 out{f.degree, target, {}};
    for (const auto& [lam, c] : f.coeffs) {
        auto it = t.index.find(lam);
        if (it == t.index.end()) throw SizeMismatch("SymFn1: degree mix");
        const int l = it->second;
        for (size_t j = 0; j < t.parts.size(); ++j) {
            if (target == SymBasis::p) {
                if (t.chi[l][j] != 0) out.add(t.parts[j], ratio(t.chi[l][j], t.z[j]) * c);
            } else {
                if (!t.K[l][j].is_zero()) out.add(t.parts[j], t.K[l][j] * c);
            }
        }
    }
    return out;
}

}  // namespace detail

inline SymFn1 convert(const SymFn1& f, SymBasis target) {
    if (f.basis == target) return f;
    return detail::from_s(detail::to_s(f), target);
}

/// Product computed in the p-basis; returned in the common basis of f and g, else in p.
inline SymFn1 multiply(const SymFn1& f, const SymFn1& g) {
    SymFn1 a = convert(f, SymBasis::p);
    SymFn1 b = convert(g, SymBasis::p);
    SymFn1 out{f.degree + g.degree, SymBasis::p, {}};
    for (const auto& [la, ca] : a.coeffs)
        for (const auto& [lb, cb] : b.coeffs) out.add(merge(la, lb), ca * cb);
    return f.basis == g.basis ? convert(out, f.basis) : out;
}

inline long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size()) throw SizeMismatch("lr_coefficient: sizes differ");
    static detail::OnceCache<std::pair<Partition, Partition>, SymFn1> cache;
    const SymFn1& prod = cache.get({mu, nu}, [&] {
        return multiply(SymFn1::element(SymBasis::s, mu), SymFn1::element(SymBasis::s, nu));
    });
    QPoly c = prod.coefficient(lambda);
    return c.is_zero() ? 0 : c.coefficient(0).get_num().get_si();
}

/// Hall polynomial g_{mu nu}^lambda(t).
inline QPoly hall_polynomial(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size()) throw SizeMismatch("hall_polynomial: sizes differ");
    static detail::OnceCache<std::pair<Partition, Partition>, SymFn1> cache;
    const SymFn1& prod = cache.get({mu, nu}, [&] {
        return multiply(SymFn1::element(SymBasis::hl, mu), SymFn1::element(SymBasis::hl, nu));
    });
    QPoly f = prod.coefficient(lambda);
    QPoly g = f.inverted().shifted(static_cast<int>(n_stat(lambda) - n_stat(mu) - n_stat(nu)));
    if (!g.is_polynomial()) throw std::logic_error("hall polynomial is not a polynomial");
    return g;
}

/// Principal specialization p_m -> (-1)^{dm} / ((-q)^{dm} - 1) for orbit size d.
inline Rational delta_spec(const SymFn1& f, int orbit_size, const Rational& q) {
    if (f.basis == SymBasis::hl) throw std::invalid_argument("delta_spec expects the p or s basis");
    SymFn1 p = convert(f, SymBasis::p);
    Rational total = 0;
    for (const auto& [nu, c] : p.coeffs) {
        if (!c.is_constant()) throw std::invalid_argument("delta_spec expects rational coefficients");
        Rational term = c.coefficient(0);
        for (int part : nu.parts()) {
            const long e = static_cast<long>(orbit_size) * part;
            Rational den = rational_pow(-q, e) - 1;
            if (den == 0) throw DivisionByZero("delta_spec denominator vanishes");
            term *= Rational(e % 2 ? -1 : 1) / den;
        }
        total += term;
    }
    return total;
}

}  // namespace unitary

#endif  // UNITARY_SYMFUNC_HPP
