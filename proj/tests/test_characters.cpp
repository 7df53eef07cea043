#include <catch2/catch_amalgamated.hpp>

#include "lcsq/schur.hpp"
#include "lcsq/tensor_field.hpp"

using namespace lcsq;

namespace {

Rational eval_at_ones(const Character& c, uint32_t degree) {
    Rational sum(0);
    for (const auto& [d, coef] : c.coefficients())
        if (d.total() == degree) sum += coef;
    return sum;
}

// coefficients of (1-t)^n * f for a truncated single-t series f
std::vector<Rational> killed_poles(const std::vector<Rational>& f, uint32_t n) {
    std::vector<Rational> out = f;
    for (uint32_t rep = 0; rep < n; ++rep)
        for (size_t i = out.size(); i-- > 1;) out[i] -= out[i - 1];
    return out;
}

} // namespace

TEST_CASE("schur basics") {
    // s_(1) over two variables is t1 + t2
    auto s1 = schur(Partition({1}), 2, 4);
    CHECK(s1.coeff(MultiDegree({1, 0})) == Rational(1));
    CHECK(s1.coeff(MultiDegree({0, 1})) == Rational(1));
    CHECK(s1.single_t()[1] == Rational(2));

    // empty diagram
    CHECK(schur(Partition({0}), 3, 4) == Character::one(3, 4));

    // dimension of the GL_3 module F_(2,1): 8 semistandard tableaux
    CHECK(eval_at_ones(schur(Partition({2, 1, 0}), 3, 5), 3) == Rational(8));

    CHECK_THROWS_AS(schur(Partition({1, 1, 1}), 2, 5), std::invalid_argument);
}

TEST_CASE("schur polynomials are symmetric and homogeneous") {
    for (uint32_t n : {2u, 3u})
        for (uint32_t s = 1; s <= 5; ++s)
            for (const auto& D : partitions_of(s, n)) {
                auto c = schur(D, n, 6);
                CHECK(c.is_symmetric());
                for (const auto& [d, coef] : c.coefficients())
                    CHECK(d.total() == D.size());
            }
}

TEST_CASE("Pieri cross-check: s_1 * s_1 = s_2 + s_11") {
    for (uint32_t n : {2u, 3u}) {
        auto lhs = schur(Partition({1}), n, 6) * schur(Partition({1}), n, 6);
        auto rhs = schur(Partition({2}), n, 6) + schur(Partition({1, 1}), n, 6);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Jacobi-Trudi determinant agrees with tableau enumeration") {
    for (uint32_t n : {2u, 3u})
        for (uint32_t s = 1; s <= 6; ++s)
            for (const auto& D : partitions_of(s, n))
                CHECK(schur(D, n, 7) == jacobi_trudi(D, n, 7));
}

TEST_CASE("every 1-form on C^1 is closed") {
    auto c = char_tensor_field(Partition({1}), 1, 6);
    auto f = c.single_t();
    CHECK(f[0] == Rational(0));
    for (uint32_t d = 1; d <= 6; ++d) CHECK(f[d] == Rational(1));
}

TEST_CASE("closed 2-forms on C^2 are all 2-forms") {
    auto c = char_tensor_field(Partition({1, 1}), 2, 8);
    auto f = c.single_t();
    for (uint32_t d = 0; d <= 8; ++d)
        CHECK(f[d] == Rational(d >= 2 ? d - 1 : 0)); // t^2/(1-t)^2

    // recursion consistency: closed^2 = Omega^1 - closed^1,
    // closed^1 = Omega^0 - 1
    auto closed1 = char_omega_k(2, 0, 8) - Character::one(2, 8);
    CHECK(char_closed_k(2, 1, 8) == closed1);
    CHECK(c == char_omega_k(2, 1, 8) - closed1);
}

TEST_CASE("multi-column tensor fields: F_(2,1,0) over W_3") {
    auto c = char_tensor_field(Partition({2, 1, 0}), 3, 7);
    auto f = c.single_t();
    // 8 t^3 / (1-t)^3
    CHECK(f[3] == Rational(8));
    CHECK(f[4] == Rational(24));
    CHECK(f[5] == Rational(48));
    CHECK(f[6] == Rational(80));
    CHECK(f[7] == Rational(120));
    CHECK(c.is_symmetric());

    CHECK_THROWS_AS(char_tensor_field(Partition({0}), 3, 5), std::invalid_argument);
}

TEST_CASE("(1-t)^n * char F_D is N_D t^|D| for multi-column D") {
    for (uint32_t n : {2u, 3u})
        for (uint32_t s = 2; s <= 4; ++s)
            for (const auto& D : partitions_of(s, n)) {
                if (D.columns() < 2) continue;
                auto numer =
                    killed_poles(char_tensor_field(D, n, 9).single_t(), n);
                Rational nd = eval_at_ones(schur(D, n, 9), D.size());
                for (uint32_t l = 0; l <= 9; ++l)
                    CHECK(numer[l] == (l == D.size() ? nd : Rational(0)));
            }
}

TEST_CASE("(1-t)^n * char F_D has degree exactly n for one-column D") {
    for (uint32_t n : {1u, 2u, 3u})
        for (uint32_t k = 1; k <= n; ++k) {
            std::vector<uint32_t> col(k, 1);
            auto numer =
                killed_poles(char_tensor_field(Partition(col), n, 9).single_t(), n);
            CHECK(numer[n] != Rational(0));
            for (uint32_t l = n + 1; l <= 9; ++l) CHECK(numer[l] == Rational(0));
        }
}

TEST_CASE("decompose round-trips single tensor field modules") {
    for (uint32_t n : {2u, 3u})
        for (uint32_t s = 1; s <= 4; ++s)
            for (const auto& D : partitions_of(s, n)) {
                auto chi = char_tensor_field(D, n, 8);
                auto dec = decompose(chi, 8 - n);
                REQUIRE(dec.multiplicities.size() == 1);
                CHECK(dec.multiplicities.at(D) == 1);
                CHECK(dec.remainder.is_zero());
                CHECK(dec.ok());
            }
}

TEST_CASE("decompose is additive") {
    auto chi = char_tensor_field(Partition({2, 1}), 3, 8) +
               Rational(2) * char_tensor_field(Partition({1, 1}), 3, 8);
    auto dec = decompose(chi, 5);
    CHECK(dec.multiplicities.at(Partition({2, 1})) == 1);
    CHECK(dec.multiplicities.at(Partition({1, 1})) == 2);
    CHECK(dec.multiplicities.size() == 2);
    CHECK(dec.ok());
}

TEST_CASE("decompose of zero is empty") {
    auto dec = decompose(Character(3, 6), 3);
    CHECK(dec.multiplicities.empty());
    CHECK(dec.ok());
}

TEST_CASE("decompose reports a failure degree and shape") {
    // the degree-2 slice of char F_(1,1) with no tail: peeling (1,1) makes
    // degree 3 go negative
    Character chi(2, 6);
    chi.add(MultiDegree({1, 1}), Rational(1));
    CHECK_THROWS_AS(decompose(chi, 5), DecompositionError);
    try {
        decompose(chi, 5);
    } catch (const DecompositionError& e) {
        CHECK(e.degree == 3);
    }
}

TEST_CASE("decompose rejects non-symmetric and negative input") {
    Character bad(2, 4);
    bad.add(MultiDegree({1, 0}), Rational(1)); // t1 without t2
    CHECK_THROWS_AS(decompose(bad, 3), std::invalid_argument);

    Character neg(2, 4);
    neg.add(MultiDegree({1, 0}), Rational(-1));
    neg.add(MultiDegree({0, 1}), Rational(-1));
    CHECK_THROWS_AS(decompose(neg, 3), std::invalid_argument);
}

TEST_CASE("diagram size bound values") {
    CHECK(diagram_size_bound(3, 3) == 4);
    CHECK(diagram_size_bound(4, 2) == 9);
    CHECK(diagram_size_bound(3, 2) == 4);
    CHECK(diagram_size_bound(3, 4) == 8);
    CHECK_THROWS_AS(diagram_size_bound(2, 2), OutOfHypothesisError);
    CHECK_THROWS_AS(diagram_size_bound(3, 1), OutOfHypothesisError);
}

TEST_CASE("check_bound pass and fail") {
    Decomposition dec{{}, Character(3, 7), 4};
    dec.multiplicities[Partition({2, 1, 0})] = 1;
    auto report = check_bound(dec, 3, 3);
    CHECK(report.pass);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].squares == 3);
    CHECK(report.entries[0].bound == 4);

    Decomposition bad{{}, Character(2, 7), 4};
    bad.multiplicities[Partition({5})] = 1;
    auto fail = check_bound(bad, 3, 2);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.entries.size() == 1);
    CHECK(fail.entries[0].squares == 5);

    Decomposition empty{{}, Character(2, 7), 4};
    CHECK(check_bound(empty, 3, 2).pass);
}

TEST_CASE("symmetric characters detect asymmetry") {
    Character c(2, 4);
    c.add(MultiDegree({2, 0}), Rational(1));
    CHECK_FALSE(c.is_symmetric());
    c.add(MultiDegree({0, 2}), Rational(1));
    CHECK(c.is_symmetric());
}

TEST_CASE("times_geometric builds the polynomial ring character") {
    // prod 1/(1-t_i) = sum_k h_k
    auto ring = Character::one(3, 6).times_full_polynomial_ring();
    for (uint32_t k = 0; k <= 6; ++k)
        CHECK(ring.degree_slice(k) == complete_homogeneous(3, k, 6));
}
