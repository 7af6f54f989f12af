#include <gtest/gtest.h>

#include <memory>

#include "oracles/gf64.hpp"
#include "unitary/bruteforce.hpp"
#include "unitary/reptables.hpp"

using namespace unitary;

namespace {

const BruteGroup& group(int n, int q) {
    static std::map<std::pair<int, int>, std::unique_ptr<BruteGroup>> pool;
    auto& g = pool[{n, q}];
    if (!g) g = std::make_unique<BruteGroup>(enumerate_group(n, q, BruteOptions{100000, true}));
    return *g;
}

Context& ctx_for(int q, int n) {
    static std::map<std::pair<int, int>, std::unique_ptr<Context>> pool;
    auto& p = pool[{q, n}];
    if (!p) p = std::make_unique<Context>(q, n);
    return *p;
}

// Order of the subgroup generated by all commutators.
long derived_order(const BruteGroup& g) {
    const BruteField& f = g.field;
    std::set<UMatrix> sub{f.identity(g.n())};
    std::vector<UMatrix> gens;
    for (const auto& x : g.elements) {
        const UMatrix xi = f.transpose(f.frobenius(x));
        for (const auto& y : g.elements) {
            const UMatrix yi = f.transpose(f.frobenius(y));
            UMatrix c = f.multiply(f.multiply(x, y), f.multiply(xi, yi));
            if (sub.insert(c).second) gens.push_back(c);
        }
    }
    std::vector<UMatrix> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
        std::vector<UMatrix> next;
        for (const auto& a : frontier)
            for (const auto& b : gens) {
                UMatrix c = f.multiply(a, b);
                if (sub.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return static_cast<long>(sub.size());
}

}  // namespace

TEST(GF, SmallModuli) {
    EXPECT_EQ(GF(2, 2).modulus(), (std::vector<int>{1, 1}));
    EXPECT_EQ(GF(2, 6).modulus(), (std::vector<int>{1, 1, 0, 0, 0, 0}));
    EXPECT_EQ(GF(3, 1).modulus(), (std::vector<int>{1}));  // t + 1, root -1 = 2 generates F_3^*
}

TEST(GF, MatchesTableOracle) {
    GF f(2, 6);
    oracle::GF64 o;
    for (GF::Elt a = 0; a < 64; ++a)
        for (GF::Elt b = 0; b < 64; ++b) EXPECT_EQ(f.mul(a, b), static_cast<GF::Elt>(o.mul(static_cast<int>(a), static_cast<int>(b))));
}

TEST(GF, FieldAxioms) {
    for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 4}, {5, 2}, {2, 4}}) {
        GF f(p, d);
        const long Q = f.size();
        for (GF::Elt a = 0; a < Q; ++a) {
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            EXPECT_EQ(f.pow(a, Q), a);
            for (GF::Elt b = 0; b < Q; b += 7) {
                const GF::Elt c = static_cast<GF::Elt>((a * 5 + b) % Q);
                EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
        // Frobenius is additive.
        for (GF::Elt a = 0; a < Q; ++a)
            for (GF::Elt b = 0; b < Q; b += 5) EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }
}

TEST(EnumerateGroup, Orders) {
    EXPECT_EQ(group(1, 2).elements.size(), 3u);
    EXPECT_EQ(group(2, 2).elements.size(), 18u);
    EXPECT_EQ(group(2, 3).elements.size(), 96u);
    for (int q = 2; q <= 5; ++q) EXPECT_EQ(group(1, q).elements.size(), static_cast<size_t>(q + 1));
    EXPECT_EQ(group(3, 2).elements.size(), 648u);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto& g = group(n, q);
        std::set<UMatrix> distinct(g.elements.begin(), g.elements.end());
        EXPECT_EQ(distinct.size(), g.elements.size());
        for (const auto& x : g.elements) {
            EXPECT_TRUE(g.field.is_unitary(x));
            for (auto v : x.a) EXPECT_TRUE(std::binary_search(g.field.subfield().begin(), g.field.subfield().end(), v));
        }
    }
}

TEST(EnumerateGroup, Guards) {
    EXPECT_THROW(enumerate_group(3, 2), UnsupportedSize);
    EXPECT_THROW(enumerate_group(2, 4), UnsupportedSize);
    EXPECT_THROW(enumerate_group(2, 3, BruteOptions{50, false}), BoundExceeded);
}

TEST(Classify, Examples) {
    const auto& g = group(2, 2);
    const OrbitId one{OrbitKind::phi, 2, 1, 0};
    EXPECT_EQ(g.field.classify(g.field.identity(2)), MultiPartition::single(one, Partition{1, 1}));
    int found = 0;
    for (const auto& x : g.elements) {
        UMatrix a = x;
        for (int i = 0; i < 2; ++i) a(i, i) = g.field.field().sub(a(i, i), 1);
        UMatrix a2 = g.field.multiply(a, a);
        if (g.field.rank(a) == 1 && g.field.rank(a2) == 0) {
            EXPECT_EQ(g.field.classify(x), MultiPartition::single(one, Partition{2}));
            ++found;
        }
    }
    EXPECT_EQ(found, 3);
}

TEST(ClassRepresentative, RoundTrip) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
        BruteField f(n, q);
        for (int m = 1; m <= n; ++m)
            for (const auto& mu : enumerate_mp(q, OrbitKind::phi, m)) {
                UMatrix r = f.class_representative(mu);
                for (auto v : r.a) EXPECT_TRUE(std::binary_search(f.subfield().begin(), f.subfield().end(), v));
                EXPECT_EQ(f.classify(r), mu) << mu.to_string();
            }
        EXPECT_EQ(f.class_representative(MultiPartition::single({OrbitKind::phi, q, 1, 0}, Partition::column(n))), f.identity(n));
    }
}

TEST(ClassCensus, MatchesCentralizerOrders) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        auto census = class_census(group(n, q));
        EXPECT_EQ(census.size(), enumerate_mp(q, OrbitKind::phi, n).size());
        for (const auto& [mu, size] : census) EXPECT_EQ(Integer(size), class_size(mu)) << mu.to_string();
    }
    auto c22 = class_census(group(2, 2));
    EXPECT_EQ(c22.size(), 9u);
    EXPECT_EQ(c22.at(MultiPartition::single({OrbitKind::phi, 2, 1, 0}, Partition{1, 1})), 1);
    EXPECT_EQ(c22.at(MultiPartition::single({OrbitKind::phi, 2, 1, 0}, Partition{2})), 3);
}

TEST(SymmetricCount, EqualsDegreeSum) {
    EXPECT_EQ(symmetric_count(group(2, 2)), 12);
    EXPECT_EQ(symmetric_count(group(1, 2)), 3);
    EXPECT_EQ(symmetric_count(group(2, 3)), 36);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
        const auto& g = group(n, q);
        EXPECT_EQ(Integer(symmetric_count(g)), degree_sum(q, n)) << n << " " << q;
        EXPECT_EQ(symmetric_stabilizers(g), expected_symmetric_stabilizers(n, q)) << n << " " << q;
    }
}

TEST(TwistedFs, TransposeInverseIndicatorsAreOne) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
        Context& ctx = ctx_for(q, n);
        const auto& g = group(n, q);
        IndicatorReport r = twisted_fs(g, ctx, Involution::transpose_inverse);
        EXPECT_EQ(r.indicators.size(), enumerate_mp(q, OrbitKind::theta, n).size());
        for (const auto& [l, e] : r.indicators) EXPECT_EQ(e, ctx.scalar(1)) << l.to_string();
        EXPECT_EQ(r.fixed_count, symmetric_count(g));
        EXPECT_EQ(r.weighted_sum, ctx.scalar(Rational(r.fixed_count)));
    }
}

TEST(TwistedFs, ClassicalIndicatorCountsInvolutions) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
        Context& ctx = ctx_for(q, n);
        const auto& g = group(n, q);
        long inv = 0;
        for (const auto& x : g.elements)
            if (g.field.multiply(x, x) == g.field.identity(n)) ++inv;
        IndicatorReport r = twisted_fs(g, ctx, Involution::trivial);
        EXPECT_EQ(r.fixed_count, inv);
        EXPECT_EQ(r.weighted_sum, ctx.scalar(Rational(inv)));
        for (const auto& [l, e] : r.indicators) {
            ASSERT_TRUE(e.is_rational());
            const Rational v = e.rational_value();
            EXPECT_TRUE(v == 0 || v == 1 || v == -1);
        }
    }
}

TEST(CharTable, ColumnOrthogonalityWithBruteClassSizes) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        Context& ctx = ctx_for(q, n);
        const auto& t = ctx.char_table(n);
        const auto& cols = enumerate_mp(q, OrbitKind::phi, n);
        auto census = class_census(group(n, q));
        const long order = static_cast<long>(group(n, q).elements.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            Cyclotomic s = ctx.zero();
            for (const auto& row : t) s += row[j] * row[j].conj();
            EXPECT_EQ(s, ctx.scalar(ratio(order, census.at(cols[j]))));
        }
    }
}

TEST(CharTable, ValuesAreClassFunctionsOfBruteElements) {
    // Every character is constant on brute classes and the table values agree with
    // the trace-free check sum_g chi(g) conj(chi(g)) = |G|.
    const int n = 2, q = 3;
    Context& ctx = ctx_for(q, n);
    const auto& g = group(n, q);
    const auto& t = ctx.char_table(n);
    const auto& cols = enumerate_mp(q, OrbitKind::phi, n);
    std::map<MultiPartition, size_t> idx;
    for (size_t j = 0; j < cols.size(); ++j) idx.emplace(cols[j], j);
    std::vector<size_t> cls;
    for (const auto& x : g.elements) cls.push_back(idx.at(g.field.classify(x)));
    for (const auto& row : t) {
        RootAccumulator acc(ctx.N());
        for (size_t c : cls) acc.add(row[c] * row[c].conj());
        EXPECT_EQ(acc.finish(), ctx.scalar(Rational(static_cast<long>(g.elements.size()))));
    }
}

TEST(LinearCharacters, MatchAbelianization) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto& g = group(n, q);
        const long index = static_cast<long>(g.elements.size()) / derived_order(g);
        Context& ctx = ctx_for(q, n);
        long linear = 0;
        for (const auto& row : ctx.char_table(n))
            if (row[0] == ctx.scalar(1)) ++linear;
        EXPECT_EQ(linear, index) << n << " " << q;
    }
}

TEST(CharTable, DegreeMultisetOfU2F4) {
    Context& ctx = ctx_for(2, 2);
    std::multiset<long> degrees;
    for (const auto& row : ctx.char_table(2)) degrees.insert(row[0].rational_value().get_num().get_si());
    // U(2, F_4) = C_3 x S_3.
    EXPECT_EQ(derived_order(group(2, 2)), 3);
    EXPECT_EQ(degrees, (std::multiset<long>{1, 1, 1, 1, 1, 1, 2, 2, 2}));
}
