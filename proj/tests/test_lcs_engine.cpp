#include <catch2/catch_amalgamated.hpp>

#include "lcsq/dense_oracle.hpp"
#include "lcsq/lcs_engine.hpp"
#include "lcsq/rearrangement.hpp"

#include <numeric>

using namespace lcsq;

namespace {

// (1/d) sum_{e|d} phi(e) n^(d/e); counts cyclic words = dim B_1(A_n)[d]
uint64_t necklace(uint64_t n, uint64_t d) {
    if (d == 0) return 1;
    auto phi = [](uint64_t m) {
        uint64_t r = m;
        for (uint64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                r -= r / p;
                while (m % p == 0) m /= p;
            }
        if (m > 1) r -= r / m;
        return r;
    };
    auto ipow = [](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    uint64_t total = 0;
    for (uint64_t e = 1; e <= d; ++e)
        if (d % e == 0) total += phi(e) * ipow(n, d / e);
    return total / d;
}

} // namespace

TEST_CASE("L_2(A_2) in multidegree (1,1) is the commutator line") {
    auto table = build_lcs_table(2, 1, 2);
    CHECK(table.dim(2, MultiDegree({1, 1})) == 1);
    CHECK(table.dim(2, MultiDegree({2, 0})) == 0);
    CHECK(table.dim(1, MultiDegree({1, 1})) == 2);
}

TEST_CASE("dim B_1 equals the necklace numbers") {
    for (uint32_t n : {1u, 2u, 3u}) {
        uint32_t deg_max = n == 3 ? 5 : 7;
        auto table = build_lcs_table(n, 1, deg_max);
        auto chi = b_character(table, 1);
        auto series = chi.total_degree_series();
        for (uint32_t d = 0; d <= deg_max; ++d)
            CHECK(series[d] == necklace(n, d));
    }
}

TEST_CASE("constants bracket to zero") {
    auto one = FreeAlgebraElement::unit(2);
    auto x = FreeAlgebraElement::generator(2, 1);
    CHECK(bracket(one, x).is_zero());
    CHECK(bracket(x, one).is_zero());
}

TEST_CASE("dim B_3(A_3)[3] = 8, matching the brute-force oracle") {
    auto table = build_lcs_table(3, 3, 4);
    auto series = b_character(table, 3).total_degree_series();
    CHECK(series[3] == 8);

    auto dims = oracle::b_dims(3, 3, 4);
    for (uint32_t d = 0; d <= 4; ++d) {
        CHECK(series[d] == dims[3][d]);
        CHECK(b_character(table, 2).total_degree_series()[d] == dims[2][d]);
    }
}

TEST_CASE("dim B_2(A_2)[l] = l - 1") {
    auto table = build_lcs_table(2, 2, 8);
    auto series = b_character(table, 2).total_degree_series();
    for (uint32_t l = 2; l <= 8; ++l) CHECK(series[l] == l - 1);
    CHECK(series[0] == 0);
    CHECK(series[1] == 0);
}

TEST_CASE("successive terms are nested subspaces with weakly decreasing dims") {
    auto table = build_lcs_table(2, 3, 6);
    for (const auto& delta : multidegrees_up_to(2, 6)) {
        for (uint32_t m = 1; m <= 3; ++m) {
            const GradedSubspace* outer = table.space(m, delta);
            const GradedSubspace* inner = table.space(m + 1, delta);
            if (!inner) continue;
            REQUIRE(outer != nullptr);
            CHECK(inner->rank() <= outer->rank());
            CHECK(outer->contains_subspace(*inner));
        }
    }
}

TEST_CASE("dim B_m[delta] is invariant under permuting the multidegree") {
    auto table = build_lcs_table(3, 3, 5);
    for (uint32_t m = 1; m <= 3; ++m) {
        auto chi = b_character(table, m);
        for (const auto& delta : multidegrees_up_to(3, 5)) {
            auto sorted = delta.sorted_descending();
            CHECK(chi.at(delta) == chi.at(sorted));
        }
    }
}

TEST_CASE("resource cap aborts oversized blocks") {
    CHECK_THROWS_AS(build_lcs_table(2, 2, 8, 10), ResourceLimitError);
}

TEST_CASE("Z vanishes below degree 3 and for n = 1") {
    auto z2 = z_subspace(2, 3);
    for (const auto& [delta, space] : z2) {
        if (delta.total() <= 2) CHECK(space.rank() == 0);
    }
    // A_1 is commutative: every [[a,b],c] is zero
    auto z1 = z_subspace(1, 6);
    for (const auto& [delta, space] : z1) CHECK(space.rank() == 0);
}

TEST_CASE("Z dims match the golden values from the dense oracle") {
    auto golden = oracle::z_dims(2, 6);
    auto z = z_subspace(2, 6);
    std::vector<uint64_t> by_degree(7, 0);
    for (const auto& [delta, space] : z) by_degree[delta.total()] += space.rank();
    for (uint32_t d = 0; d <= 6; ++d) CHECK(by_degree[d] == golden[d]);
    CHECK(by_degree[3] == 0); // pinned: the degree-3 commutators die in A/[A,A]
    CHECK(by_degree[4] == 1);
}

TEST_CASE("bbar1 of A_2 counts 1, 2, 3, 4, ... by degree") {
    auto chi = bbar1_character(2, 6);
    auto series = chi.total_degree_series();
    CHECK(series[0] == 1);
    CHECK(series[1] == 2);
    for (uint32_t d = 1; d <= 6; ++d) CHECK(series[d] == d + 1);
}

TEST_CASE("bbar1 of A_1 is one-dimensional in every degree") {
    auto series = bbar1_character(1, 6).total_degree_series();
    for (uint32_t d = 0; d <= 6; ++d) CHECK(series[d] == 1);
}

TEST_CASE("rearrangement base cases match antisymmetry and Jacobi") {
    auto c22 = rearrangement(2, 2);
    REQUIRE(c22.terms.size() == 1);
    CHECK(c22.terms[0].first == std::vector<uint32_t>{1});
    CHECK(c22.terms[0].second == Rational(-1));

    // [[b1,b2],b3] = [[b3,b2],b1] - [[b3,b1],b2]
    auto c33 = rearrangement(3, 3);
    REQUIRE(c33.terms.size() == 2);
    std::map<std::vector<uint32_t>, Rational> got(c33.terms.begin(), c33.terms.end());
    CHECK(got[{2, 1}] == Rational(1));
    CHECK(got[{1, 2}] == Rational(-1));
}

TEST_CASE("rearrangement certificates expand to zero for all m <= 5") {
    for (uint32_t m = 2; m <= 5; ++m)
        for (uint32_t k = 1; k <= m; ++k) {
            auto cert = rearrangement(m, k);
            INFO("m=" << m << " k=" << k);
            CHECK(certificate_holds(cert));
            for (const auto& [sigma, c] : cert.terms) {
                CHECK(sigma.size() == m - 1);
                CHECK(!is_zero(c));
            }
        }
}

TEST_CASE("pipeline agrees with the dense oracle on B_m(A_2) through degree 6") {
    auto table = build_lcs_table(2, 3, 6);
    auto dims = oracle::b_dims(2, 3, 6);
    for (uint32_t m = 1; m <= 3; ++m) {
        auto series = b_character(table, m).total_degree_series();
        for (uint32_t d = 0; d <= 6; ++d) CHECK(series[d] == dims[m][d]);
    }
}
