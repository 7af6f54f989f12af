#include <gtest/gtest.h>

#include "unitary/multipartitions.hpp"

using namespace unitary;

namespace {

OrbitId phi(int q, int size, long long residue) { return OrbitId{OrbitKind::phi, q, size, residue}; }

// Coefficient list of prod_r (sum_lambda x^{r|lambda|})^{d_r} up to degree n.
std::vector<long long> generating_count(int q, int n) {
    std::vector<long long> total(n + 1, 0);
    total[0] = 1;
    for (int r = 1; r <= n; ++r) {
        std::vector<long long> factor(n + 1, 0);
        for (int k = 0; r * k <= n; ++k) factor[r * k] = static_cast<long long>(partitions_of(k).size());
        for (long long i = 0; i < orbit_count(q, r); ++i) {
            std::vector<long long> next(n + 1, 0);
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) next[a + b] += total[a] * factor[b];
            total = next;
        }
    }
    return total;
}

// The worked example: f of degree 1 with (2,2), g and h of degree 2 with (2) and (4,1).
MultiPartition worked_example() {
    const auto& orbits = enumerate_orbits(3, OrbitKind::phi, 2);
    std::vector<OrbitId> deg2;
    for (const auto& o : orbits)
        if (o.size == 2) deg2.push_back(o);
    return MultiPartition(OrbitKind::phi, 3, {{phi(3, 1, 0), Partition{2, 2}}, {deg2[0], Partition{2}}, {deg2[1], Partition{4, 1}}});
}

}  // namespace

TEST(MultiPartition, WorkedExampleStatistics) {
    MultiPartition mu = worked_example();
    EXPECT_EQ(mu.size(), 18);
    EXPECT_EQ(mu.n_stat(), 4);
    MultiPartition s = semisimple_part(mu);
    EXPECT_EQ(s.at(phi(3, 1, 0)), Partition::column(4));
    EXPECT_EQ(s.entries()[1].second, Partition::column(2));
    EXPECT_EQ(s.entries()[2].second, Partition::column(5));
    MultiPartition u = unipotent_part(mu);
    EXPECT_EQ(u.at(phi(3, 1, 0)), (Partition{8, 4, 2, 2, 2}));
    EXPECT_EQ(u.size(), mu.size());
}

TEST(MultiPartition, SingleBoxStatistics) {
    auto st = mp_stats(MultiPartition::single(phi(2, 1, 1), Partition{1}));
    EXPECT_EQ(st.size, 1);
    EXPECT_EQ(st.n, 0);
    EXPECT_EQ(st.height, 1);
    EXPECT_EQ(st.odd, 1);
    OrbitId th{OrbitKind::theta, 3, 1, 0};
    EXPECT_EQ(MultiPartition::single(th, Partition{2, 2}).conjugate().odd_count(), 0);
}

TEST(MultiPartition, SemisimpleAndUnipotentParts) {
    MultiPartition cols(OrbitKind::phi, 2, {{phi(2, 1, 0), Partition{1, 1}}, {phi(2, 1, 2), Partition{1}}});
    EXPECT_EQ(semisimple_part(cols), cols);
    auto deg3 = enumerate_orbits(2, OrbitKind::phi, 3).back();
    ASSERT_EQ(deg3.size, 3);
    EXPECT_EQ(unipotent_part(MultiPartition::single(deg3, Partition{1})).at(phi(2, 1, 0)), Partition{3});
    for (int q : {2, 3})
        for (int n = 0; n <= 4; ++n)
            for (const auto& v : enumerate_mp(q, OrbitKind::phi, n)) {
                EXPECT_EQ(v.conjugate().conjugate(), v);
                EXPECT_EQ(semisimple_part(semisimple_part(v)), semisimple_part(v));
                EXPECT_EQ(unipotent_part(v).size(), v.size());
            }
}

TEST(EnumerateMp, Counts) {
    EXPECT_EQ(enumerate_mp(2, OrbitKind::phi, 1).size(), 3u);
    EXPECT_EQ(enumerate_mp(2, OrbitKind::phi, 2).size(), 9u);
    EXPECT_EQ(enumerate_mp(3, OrbitKind::theta, 1).size(), 4u);
    for (int q : {2, 3})
        for (int n = 0; n <= 6; ++n) {
            auto expect = generating_count(q, n);
            EXPECT_EQ(static_cast<long long>(enumerate_mp(q, OrbitKind::phi, n).size()), expect[n]) << q << " " << n;
            EXPECT_EQ(enumerate_mp(q, OrbitKind::theta, n).size(), enumerate_mp(q, OrbitKind::phi, n).size());
        }
}

TEST(EnumerateMp, IdentityComesFirst) {
    for (int q : {2, 3})
        for (int n = 1; n <= 4; ++n) {
            EXPECT_EQ(enumerate_mp(q, OrbitKind::phi, n).front(), MultiPartition::single(phi(q, 1, 0), Partition::column(n)));
            const auto& v = enumerate_mp(q, OrbitKind::phi, n);
            for (size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i - 1], v[i]);
        }
}

TEST(Centralizer, Examples) {
    EXPECT_EQ(centralizer_order(MultiPartition::single(phi(2, 1, 0), Partition{1, 1})), 18);
    MultiPartition reg = MultiPartition::single(phi(2, 1, 0), Partition{2});
    EXPECT_EQ(centralizer_order(reg), 6);
    EXPECT_EQ(class_size(reg), 3);
    for (long long k = 0; k < 3; ++k) EXPECT_EQ(centralizer_order(MultiPartition::single(phi(2, 1, k), Partition{1})), 3);
}

TEST(Centralizer, ClassEquation) {
    for (int q : {2, 3})
        for (int n = 1; n <= 4; ++n) {
            Integer order = unitary_group_order(n, q);
            Integer total = 0;
            for (const auto& mu : enumerate_mp(q, OrbitKind::phi, n)) {
                Integer a = centralizer_order(mu);
                EXPECT_EQ(order % a, 0);
                total += order / a;
            }
            EXPECT_EQ(total, order);
        }
}

TEST(Centralizer, LeviOrderOfSemisimplePart) {
    for (int q : {2, 3})
        for (int n = 1; n <= 4; ++n)
            for (const auto& mu : enumerate_mp(q, OrbitKind::phi, n))
                EXPECT_EQ(centralizer_order(semisimple_part(mu)), levi_order(mu)) << mu.to_string();
}

TEST(TorusData, Examples) {
    auto td = torus_data(MultiPartition::single(phi(2, 1, 0), Partition{1, 1}));
    EXPECT_EQ(td.weyl_order, 2);
    ASSERT_EQ(td.classes.size(), 2u);
    EXPECT_EQ(td.classes[0].z, 2);
    EXPECT_EQ(td.classes[1].z, 2);
    auto td2 = torus_data(MultiPartition(OrbitKind::phi, 2, {{phi(2, 1, 0), Partition{1}}, {phi(2, 1, 1), Partition{1}}}));
    EXPECT_EQ(td2.weyl_order, 1);
    ASSERT_EQ(td2.classes.size(), 1u);
    EXPECT_EQ(td2.classes[0].z, 1);
}

TEST(TorusData, WeylClassEquation) {
    for (int q : {2, 3})
        for (int n = 1; n <= 4; ++n)
            for (const auto& v : enumerate_mp(q, OrbitKind::theta, n)) {
                auto td = torus_data(v);
                Integer total = 0;
                for (const auto& c : td.classes) {
                    total += c.class_size;
                    int s = 0;
                    for (int f : c.factors) s += f;
                    EXPECT_EQ(s, n);
                }
                EXPECT_EQ(total, td.weyl_order);
            }
}

TEST(GammaT, IdentityElement) {
    MultiPartition g = gamma_t(2, {{2, CyclicElt{2, 2, 0}}, {1, CyclicElt{2, 1, 0}}});
    EXPECT_EQ(g, MultiPartition::single(phi(2, 1, 0), Partition{2, 1}));
}

TEST(GammaT, WorkedExampleMixedBlocks) {
    // q = 5: t^2 + 1 is F-irreducible of degree 2 (roots of order 4, not in M_1 of order 6).
    const int q = 5;
    const long long n2 = cyclic_order(q, 2);  // 24
    long long i_res = n2 / 4;                // an element of order 4
    auto [f, d] = f_of_x({q, 2, i_res});
    ASSERT_EQ(d, 2);
    std::vector<std::pair<int, CyclicElt>> blocks{
        {4, CyclicElt{q, 4, 0}},                          // t - 1, m = 4
        {4, CyclicElt{q, 4, embed(q, 2, i_res, 4)}},      // t^2 + 1, m = 2
        {2, CyclicElt{q, 2, 0}},                          // t - 1, m = 2
        {2, CyclicElt{q, 2, i_res}},                      // t^2 + 1, m = 1
        {1, CyclicElt{q, 1, 0}}};                         // t - 1, m = 1
    MultiPartition g = gamma_t(q, blocks);
    EXPECT_EQ(g.at(phi(q, 1, 0)), (Partition{4, 2, 1}));
    EXPECT_EQ(g.at(f), (Partition{2, 1}));
    EXPECT_EQ(unipotent_part(g).at(phi(q, 1, 0)), (Partition{4, 4, 2, 2, 1}));
}

TEST(GammaT, UnipotentPartIsNu) {
    const int q = 2;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 3; ++b) {
            MultiPartition g = gamma_t(q, {{3, CyclicElt{q, 3, a}}, {1, CyclicElt{q, 1, b}}});
            EXPECT_EQ(unipotent_part(g).at(phi(q, 1, 0)), (Partition{3, 1}));
        }
}
