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

#ifndef UNITARY_EXACTNUM_HPP
#define UNITARY_EXACTNUM_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace unitary {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class ConductorMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Canonicalized num/den; mpq_class's two-argument constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer integer_pow(long base, unsigned long e) {
    Integer r;
    Integer b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& v, long e) {
    if (e < 0) {
        if (v == 0) throw DivisionByZero("zero raised to a negative power");
        Rational inv = 1 / v;
        return rational_pow(inv, -e);
    }
    Rational r = 1;
    Rational b = v;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string rational_string(const Rational& r) { return r.get_str(); }

/// Laurent polynomial in one variable with rational coefficients.
class QPoly {
   public:
    QPoly() = default;
    QPoly(const Rational& c) {  // NOLINT: implicit constant embedding is intended
        if (c != 0) c_[0] = c;
    }
    QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT
    QPoly(int c) : QPoly(Rational(c)) {}   // NOLINT

    static QPoly monomial(int exponent, const Rational& c = 1) {
        QPoly p;
        if (c != 0) p.c_[exponent] = c;
        return p;
    }
    static QPoly variable() { return monomial(1); }

    const std::map<int, Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational coefficient(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
        return c_.rbegin()->first;
    }
    int low_degree() const {
        if (c_.empty()) throw std::domain_error("low degree of the zero polynomial");
        return c_.begin()->first;
    }
    bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    bool has_integer_coefficients() const {
        for (const auto& [e, c] : c_)
            if (c.get_den() != 1) return false;
        return true;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.c_) accumulate(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.c_) accumulate(e, -c);
        return *this;
    }
    QPoly& operator*=(const QPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(QPoly a) {
        for (auto& [e, c] : a.c_) c = -c;
        return a;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.accumulate(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// t^k * p
    QPoly shifted(int k) const {
        QPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    /// p(1/t)
    QPoly inverted() const {
        QPoly r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    QPoly pow(unsigned k) const {
        QPoly r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    Rational eval(const Rational& v) const {
        if (c_.empty()) return 0;
        if (v == 0 && c_.begin()->first < 0) throw DivisionByZero("Laurent polynomial evaluated at 0");
        Rational r = 0;
        for (const auto& [e, c] : c_) r += c * rational_pow(v, e);
        return r;
    }

    /// Exact quotient by a nonzero divisor; throws if the division leaves a remainder.
    QPoly divide_exact(const QPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
        QPoly rem = *this;
        QPoly quo;
        const int dlo = d.low_degree();
        const int dhi = d.degree();
        const Rational lead = d.c_.rbegin()->second;
        while (!rem.is_zero() && rem.degree() - dhi >= rem.low_degree() - dlo) {
            int e = rem.degree() - dhi;
            Rational c = rem.c_.rbegin()->second / lead;
            QPoly term = monomial(e, c);
            quo += term;
            rem -= term * d;
        }
        if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
        return quo;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << a.get_str();
                continue;
            }
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

   private:
    void accumulate(int e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = c_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<int, Rational> c_;
};

inline Rational qpoly_eval(const QPoly& p, const Rational& v) { return p.eval(v); }

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace detail {

// Write-once memo keyed by K; values are never replaced once stored.
template <class K, class V>
class OnceCache {
   public:
    template <class F>
    const V& get(const K& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<V>(compute());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return *it->second;
    }

   private:
    std::mutex mu_;
    std::map<K, std::unique_ptr<V>> map_;
};

inline std::vector<Integer> compute_cyclotomic(int N, const std::vector<Integer>* (*lookup)(int)) {
    // x^N - 1 divided by Phi_d for every proper divisor d
    std::vector<Integer> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d) continue;
        const std::vector<Integer>& den = *lookup(d);
        const int dd = static_cast<int>(den.size()) - 1;
        const int nd = static_cast<int>(num.size()) - 1;
        std::vector<Integer> quo(nd - dd + 1, 0);
        for (int i = nd; i >= dd; --i) {
            Integer c = num[i];
            if (c == 0) continue;
            quo[i - dd] = c;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(quo);
    }
    return num;
}

struct CyclotomicCache {
    std::mutex mu;
    std::map<int, std::unique_ptr<std::vector<Integer>>> polys;
};

inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

}  // namespace detail

/// Coefficients of Phi_N, lowest degree first. Computed once per N.
inline const std::vector<Integer>& cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic polynomial needs N >= 1");
    auto& cache = detail::cyclotomic_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.polys.find(N);
        if (it != cache.polys.end()) return *it->second;
    }
    std::vector<Integer> poly;
    if (N == 1) {
        poly = {-1, 1};
    } else {
        poly = detail::compute_cyclotomic(N, [](int d) { return &cyclotomic_polynomial(d); });
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    auto [it, inserted] = cache.polys.emplace(N, std::make_unique<std::vector<Integer>>(std::move(poly)));
    return *it->second;
}

/// Element of Q(zeta_N), stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}
/// with trailing zeros trimmed.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    explicit Cyclotomic(int N, const Rational& r = 0) : N_(N) {
        if (N < 1) throw std::invalid_argument("conductor must be positive");
        if (r != 0) c_.push_back(r);
    }

    static Cyclotomic root(int N, long k) {
        std::vector<Rational> dense(N, 0);
        long e = ((k % N) + N) % N;
        dense[e] = 1;
        return from_powers(N, std::move(dense));
    }

    /// Reduces an arbitrary-length vector of coefficients of zeta^i.
    static Cyclotomic from_powers(int N, std::vector<Rational> v) {
        Cyclotomic r(N);
        reduce(N, v);
        r.c_ = std::move(v);
        r.trim();
        return r;
    }

    int conductor() const { return N_; }
    int dimension() const { return static_cast<int>(euler_phi(N_)); }

    const std::vector<Rational>& trimmed() const { return c_; }

    std::vector<Rational> coefficients() const {
        std::vector<Rational> out = c_;
        out.resize(dimension(), 0);
        return out;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
        return c_.empty() ? Rational(0) : c_[0];
    }
    bool is_integral() const {
        for (const auto& c : c_)
            if (c.get_den() != 1) return false;
        return true;
    }

    /// Same element viewed in Q(zeta_M) for a multiple M of the conductor.
    Cyclotomic lifted(int M) const {
        if (M % N_) throw ConductorMismatch("lift target is not a multiple of the conductor");
        if (M == N_) return *this;
        if (is_rational()) return Cyclotomic(M, rational_value());
        const int step = M / N_;
        std::vector<Rational> dense(static_cast<size_t>(step) * c_.size(), 0);
        for (size_t i = 0; i < c_.size(); ++i) dense[i * step] = c_[i];
        return from_powers(M, std::move(dense));
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Cyclotomic& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator-(Cyclotomic a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        if (a.c_.empty() || b.c_.empty()) return Cyclotomic(a.N_);
        if (a.c_.size() == 1) return b * a.c_[0];
        if (b.c_.size() == 1) return a * b.c_[0];
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                v[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return from_powers(a.N_, std::move(v));
    }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    /// Complex conjugate, zeta -> zeta^{-1}.
    Cyclotomic conj() const {
        if (is_rational()) return *this;
        std::vector<Rational> dense(N_, 0);
        for (size_t i = 0; i < c_.size(); ++i) dense[(N_ - static_cast<int>(i)) % N_] += c_[i];
        return from_powers(N_, std::move(dense));
    }

    /// Galois action zeta -> zeta^a, gcd(a, N) = 1.
    Cyclotomic galois(long a) const {
        if (std::gcd(a, static_cast<long>(N_)) != 1) throw std::invalid_argument("galois exponent not a unit");
        if (is_rational()) return *this;
        std::vector<Rational> dense(N_, 0);
        long am = ((a % N_) + N_) % N_;
        for (size_t i = 0; i < c_.size(); ++i) dense[(am * static_cast<long>(i)) % N_] += c_[i];
        return from_powers(N_, std::move(dense));
    }

    std::complex<double> to_complex() const {
        std::complex<double> r = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / N_;
            r += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return r;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        if (is_rational()) return c_[0].get_str();
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational a = abs(c_[i]);
            if (first)
                os << (c_[i] < 0 ? "-" : "");
            else
                os << (c_[i] < 0 ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << a.get_str();
                continue;
            }
            if (a != 1) os << a.get_str() << "*";
            os << "z" << N_;
            if (i != 1) os << "^" << i;
        }
        return os.str();
    }

   private:
    void check(const Cyclotomic& o) const {
        if (N_ != o.N_)
            throw ConductorMismatch("conductors differ: " + std::to_string(N_) + " vs " + std::to_string(o.N_));
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static void reduce(int N, std::vector<Rational>& v) {
        const auto& phi = cyclotomic_polynomial(N);
        const int deg = static_cast<int>(phi.size()) - 1;
        if (static_cast<int>(v.size()) <= deg) return;
        std::vector<std::pair<int, int>> small;  // (index, +-1) fast path
        bool unit_coeffs = true;
        for (int j = 0; j < deg; ++j) {
            if (phi[j] == 0) continue;
            if (phi[j] == 1 || phi[j] == -1)
                small.emplace_back(j, phi[j] == 1 ? 1 : -1);
            else
                unit_coeffs = false;
        }
        for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
            if (v[i] == 0) continue;
            Rational c = v[i];
            v[i] = 0;
            if (unit_coeffs) {
                for (const auto& [j, s] : small) {
                    if (s > 0)
                        v[i - deg + j] -= c;
                    else
                        v[i - deg + j] += c;
                }
            } else {
                for (int j = 0; j < deg; ++j)
                    if (phi[j] != 0) v[i - deg + j] -= c * phi[j];
            }
        }
        v.resize(deg);
    }

    int N_ = 1;
    std::vector<Rational> c_;
};

/// Dense accumulator for sums of rational multiples of roots of unity.
class RootAccumulator {
   public:
    explicit RootAccumulator(int N) : N_(N), dense_(N, 0) {}
    void add(long k, const Rational& c = 1) {
        long e = ((k % N_) + N_) % N_;
        dense_[e] += c;
    }
    void add(const Cyclotomic& x, const Rational& c = 1) {
        if (x.conductor() != N_) throw ConductorMismatch("accumulator conductor differs");
        const auto& t = x.trimmed();
        for (size_t i = 0; i < t.size(); ++i) dense_[i] += c * t[i];
    }
    Cyclotomic finish() const { return Cyclotomic::from_powers(N_, dense_); }

   private:
    int N_;
    std::vector<Rational> dense_;
};

enum class CycloOp { add, mul, conj, eq };

inline std::variant<Cyclotomic, bool> cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op) {
    switch (op) {
        case CycloOp::add:
            return a + b;
        case CycloOp::mul:
            return a * b;
        case CycloOp::conj:
            return a.conj();
        case CycloOp::eq:
            return a == b;
    }
    throw std::invalid_argument("unknown cyclotomic operation");
}

}  // namespace unitary

#endif  // UNITARY_EXACTNUM_HPP
