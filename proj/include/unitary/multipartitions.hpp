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

#ifndef UNITARY_MULTIPARTITIONS_HPP
#define UNITARY_MULTIPARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exactnum.hpp"
#include "orbits.hpp"
#include "partitions.hpp"

namespace unitary {

/// Finite assignment orbit -> nonempty partition, kept sorted by orbit.
class MultiPartition {
   public:
    using Entry = std::pair<OrbitId, Partition>;

    MultiPartition() = default;
    MultiPartition(OrbitKind kind, int q, std::vector<Entry> entries = {}) : kind_(kind), q_(q) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (auto& [o, p] : entries) {
            if (o.kind != kind || o.q != q) throw std::invalid_argument("multipartition orbit kind or q differs");
            if (p.empty()) continue;
            if (!entries_.empty() && entries_.back().first == o) throw std::invalid_argument("duplicate orbit in multipartition");
            entries_.emplace_back(o, std::move(p));
        }
    }

    static MultiPartition single(const OrbitId& o, Partition p) {
        return MultiPartition(o.kind, o.q, {{o, std::move(p)}});
    }

    OrbitKind kind() const { return kind_; }
    int q() const { return q_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    const Partition& at(const OrbitId& o) const {
        static const Partition none;
        for (const auto& [k, p] : entries_)
            if (k == o) return p;
        return none;
    }

    /// Copy with the partition at o replaced (removed if p is empty).
    MultiPartition with(const OrbitId& o, Partition p) const {
        std::vector<Entry> e;
        for (const auto& entry : entries_)
            if (entry.first != o) e.push_back(entry);
        e.emplace_back(o, std::move(p));
        return MultiPartition(kind_, q_, std::move(e));
    }

    /// Orbit-size weighted size.
    long size() const {
        long s = 0;
        for (const auto& [o, p] : entries_) s += static_cast<long>(o.size) * p.size();
        return s;
    }
    /// Orbit-size weighted n(.).
    long n_stat() const {
        long s = 0;
        for (const auto& [o, p] : entries_) s += o.size * unitary::n_stat(p);
        return s;
    }
    /// Total number of parts, unweighted.
    long length() const {
        long s = 0;
        for (const auto& [o, p] : entries_) s += p.length();
        return s;
    }
    int height() const {
        int h = 0;
        for (const auto& [o, p] : entries_) h = std::max(h, p.length());
        return h;
    }
    /// Orbit-size weighted number of odd parts.
    long odd_count() const {
        long s = 0;
        for (const auto& [o, p] : entries_) s += static_cast<long>(o.size) * odd_parts(p);
        return s;
    }

    MultiPartition conjugate() const {
        std::vector<Entry> e;
        for (const auto& [o, p] : entries_) e.emplace_back(o, unitary::conjugate(p));
        return MultiPartition(kind_, q_, std::move(e));
    }

    std::string to_string() const {
        if (entries_.empty()) return "{}";
        std::string s = "{";
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ", ";
            s += entries_[i].first.to_string() + ":" + entries_[i].second.to_string();
        }
        return s + "}";
    }

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

    /// Canonical order: orbit by orbit, larger |lambda| first, then lambda lexicographically.
    /// Puts the trivial character and the identity class first.
    friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        size_t i = 0, j = 0;
        while (i < a.entries_.size() && j < b.entries_.size()) {
            const auto& [oa, pa] = a.entries_[i];
            const auto& [ob, pb] = b.entries_[j];
            if (oa < ob) return std::strong_ordering::less;
            if (ob < oa) return std::strong_ordering::greater;
            if (pa.size() != pb.size()) return pa.size() > pb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
            if (auto c = pa <=> pb; c != 0) return c;
            ++i;
            ++j;
        }
        if (i < a.entries_.size()) return std::strong_ordering::less;
        if (j < b.entries_.size()) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

   private:
    OrbitKind kind_ = OrbitKind::phi;
    int q_ = 0;
    std::vector<Entry> entries_;
};

/// The orbit of 1: the trivial character for theta, t - 1 for phi.
inline OrbitId identity_orbit(OrbitKind kind, int q) { return OrbitId{kind, q, 1, 0}; }

struct MpStats {
    long size;
    long n;
    MultiPartition conjugate;
    int height;
    long odd;
};

inline MpStats mp_stats(const MultiPartition& v) {
    return {v.size(), v.n_stat(), v.conjugate(), v.height(), v.odd_count()};
}

inline MultiPartition semisimple_part(const MultiPartition& v) {
    std::vector<MultiPartition::Entry> e;
    for (const auto& [o, p] : v.entries()) e.emplace_back(o, Partition::column(p.size()));
    return MultiPartition(v.kind(), v.q(), std::move(e));
}

inline MultiPartition unipotent_part(const MultiPartition& v) {
    std::vector<int> parts;
    for (const auto& [o, p] : v.entries())
        for (int x : p.parts()) parts.push_back(o.size * x);
    return MultiPartition::single(identity_orbit(v.kind(), v.q()), Partition::from_unsorted(std::move(parts)));
}

/// Orbitwise union of parts.
inline MultiPartition concatenate(const MultiPartition& a, const MultiPartition& b) {
    if (a.kind() != b.kind() || a.q() != b.q()) throw std::invalid_argument("concatenate: kind or q differs");
    std::vector<MultiPartition::Entry> e;
    size_t i = 0, j = 0;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            e.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            e.push_back(eb[j++]);
        } else {
            e.emplace_back(ea[i].first, merge(ea[i].second, eb[j].second));
            ++i;
            ++j;
        }
    }
    return MultiPartition(a.kind(), a.q(), std::move(e));
}

/// Every gamma with gamma_s = v_s, in canonical order.
inline std::vector<MultiPartition> semisimple_class(const MultiPartition& v) {
    std::vector<MultiPartition> out;
    const auto& entries = v.entries();
    std::vector<MultiPartition::Entry> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == entries.size()) {
            out.emplace_back(v.kind(), v.q(), cur);
            return;
        }
        for (const auto& p : partitions_of(entries[i].second.size())) {
            cur.emplace_back(entries[i].first, p);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// All multipartitions of weighted size n, in canonical order.
inline const std::vector<MultiPartition>& enumerate_mp(int q, OrbitKind kind, int n) {
    static detail::OnceCache<std::tuple<int, OrbitKind, int>, std::vector<MultiPartition>> cache;
    return cache.get({q, kind, n}, [&] {
        std::vector<MultiPartition> out;
        if (n == 0) {
            out.emplace_back(kind, q);
            return out;
        }
        const auto& orbits = enumerate_orbits(q, kind, n);
        std::vector<MultiPartition::Entry> cur;
        std::function<void(size_t, int)> rec = [&](size_t i, int left) {
            if (left == 0) {
                out.emplace_back(kind, q, cur);
                return;
            }
            for (size_t k = i; k < orbits.size(); ++k) {
                const int sz = orbits[k].size;
                for (int m = 1; m * sz <= left; ++m)
                    for (const auto& p : partitions_of(m)) {
                        cur.emplace_back(orbits[k], p);
                        rec(k + 1, left - m * sz);
                        cur.pop_back();
                    }
            }
        };
        rec(0, n);
        std::sort(out.begin(), out.end());
        return out;
    });
}

/// |U(n, F_{q^2})| = q^{n(n-1)/2} prod_{i <= n} (q^i - (-1)^i).
inline Integer unitary_group_order(int n, long q) {
    Integer r = integer_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) r *= integer_pow(q, i) - (i % 2 ? -1 : 1);
    return r;
}

inline Integer general_linear_order(int n, long q) {
    Integer r = integer_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) r *= integer_pow(q, i) - 1;
    return r;
}

/// a_mu(x) = x^{|mu| + 2n(mu)} prod_j psi_{m_j}(1/x).
inline Rational centralizer_poly_value(const Partition& mu, const Rational& x) {
    Rational r = rational_pow(x, mu.size() + 2 * n_stat(mu));
    const Rational inv = 1 / x;
    auto m = mu.multiplicities();
    for (size_t j = 1; j < m.size(); ++j)
        for (int i = 1; i <= m[j]; ++i) r *= 1 - rational_pow(inv, i);
    return r;
}

/// Centralizer order of the class c_mu in U_n.
inline Integer centralizer_order(const MultiPartition& mu) {
    if (mu.kind() != OrbitKind::phi) throw std::invalid_argument("centralizer_order expects a phi-partition");
    Rational r = mu.size() % 2 ? -1 : 1;
    for (const auto& [f, p] : mu.entries()) r *= centralizer_poly_value(p, rational_pow(Rational(-mu.q()), f.size));
    if (r.get_den() != 1 || r <= 0) throw std::logic_error("centralizer order is not a positive integer");
    return r.get_num();
}

inline Integer class_size(const MultiPartition& mu) {
    return unitary_group_order(static_cast<int>(mu.size()), mu.q()) / centralizer_order(mu);
}

/// Order of the Levi subgroup attached to the semisimple data of mu.
inline Integer levi_order(const MultiPartition& mu) {
    Integer r = 1;
    for (const auto& [f, p] : mu.entries()) {
        const long Q = static_cast<long>(integer_pow(mu.q(), f.size).get_si());
        r *= (f.size % 2) ? unitary_group_order(p.size(), Q) : general_linear_order(p.size(), Q);
    }
    return r;
}

struct TorusClass {
    MultiPartition gamma;
    Integer z;
    Integer class_size;        // |W| / z
    std::vector<int> factors;  // |x| * gamma(x)_i
};

struct TorusData {
    Integer weyl_order;
    std::vector<TorusClass> classes;
};

inline Integer z_stat(const MultiPartition& gamma) {
    Integer z = 1;
    for (const auto& [o, p] : gamma.entries()) z *= z_stat(p);
    return z;
}

inline TorusData torus_data(const MultiPartition& v) {
    TorusData td;
    td.weyl_order = 1;
    for (const auto& [o, p] : v.entries()) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), p.size());
        td.weyl_order *= f;
    }
    for (auto& g : semisimple_class(v)) {
        TorusClass c;
        c.z = z_stat(g);
        c.class_size = td.weyl_order / c.z;
        for (const auto& [o, p] : g.entries())
            for (int x : p.parts()) c.factors.push_back(o.size * x);
        std::sort(c.factors.begin(), c.factors.end(), std::greater<>());
        c.gamma = std::move(g);
        td.classes.push_back(std::move(c));
    }
    return td;
}

/// gamma_t for a torus element given as blocks (nu_i, x_i in M_{nu_i}).
inline MultiPartition gamma_t(int q, const std::vector<std::pair<int, CyclicElt>>& blocks) {
    std::map<OrbitId, std::vector<int>> parts;
    for (const auto& [nu, x] : blocks) {
        if (x.level != nu || x.q != q) throw std::invalid_argument("gamma_t: element must lie in M_{nu_i}");
        auto [f, d] = f_of_x(x);
        parts[f].push_back(nu / d);
    }
    std::vector<MultiPartition::Entry> e;
    for (auto& [f, ps] : parts) e.emplace_back(f, Partition::from_unsorted(std::move(ps)));
    return MultiPartition(OrbitKind::phi, q, std::move(e));
}

}  // namespace unitary

#endif  // UNITARY_MULTIPARTITIONS_HPP
