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

#ifndef UNITARY_PARTITIONS_HPP
#define UNITARY_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactnum.hpp"

namespace unitary {

/// Integer partition stored as a weakly decreasing list of positive parts.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Builds a partition from parts in any order.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }
    static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }
    static Partition column(int n) { return Partition(std::vector<int>(n, 1)); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Part i (0-based), zero past the end.
    int operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// m[i] = number of parts equal to i, for i in 0..largest part.
    std::vector<int> multiplicities() const {
        std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
        for (int p : parts_) ++m[p];
        return m;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

   private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(std::move(out));
}

inline long n_stat(const Partition& lambda) {
    long s = 0;
    for (int i = 0; i < lambda.length(); ++i) s += static_cast<long>(i) * lambda[i];
    return s;
}

inline Integer z_stat(const Partition& lambda) {
    Integer z = 1;
    auto m = lambda.multiplicities();
    for (size_t i = 1; i < m.size(); ++i) {
        for (int k = 1; k <= m[i]; ++k) z *= static_cast<long>(i) * k;
    }
    return z;
}

/// Hook lengths in row-major cell order.
inline std::vector<int> hooks(const Partition& lambda) {
    Partition c = conjugate(lambda);
    std::vector<int> h;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) h.push_back(lambda[i] + c[j] - i - j - 1);
    return h;
}

inline int odd_parts(const Partition& lambda) {
    return static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p % 2; }));
}

inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

/// Union of the multisets of parts.
inline Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(v));
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto out = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, *out);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(out));
    return *it->second;
}

}  // namespace unitary

#endif  // UNITARY_PARTITIONS_HPP
