#include "support.hpp"

#include <birack/smith.hpp>

#include <doctest.h>

#include <random>

using namespace birack;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range, int density_percent) {
    IntegerMatrix m(r, c);
    std::uniform_int_distribution<int> val(-range, range), pct(0, 99);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pct(rng) < density_percent) m(i, j) = val(rng);
    return m;
}

SparseIntegerMatrix to_sparse(const IntegerMatrix& m) {
    SparseIntegerMatrix s;
    s.rows = m.rows();
    s.cols = m.cols();
    s.columns.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) s.columns[j].emplace_back(i, static_cast<std::int64_t>(m(i, j)));
    return s;
}

std::vector<BigInt> diagonal(const IntegerMatrix& d) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

}  // namespace

TEST_CASE("textbook example") {
    const auto m = IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto s = smith_normal_form(m);
    CHECK(s.invariant_factors() == std::vector<BigInt>{2, 6, 12});
    CHECK(validate_smith(m, s).ok());
    CHECK(invariant_factors(m) == std::vector<BigInt>{2, 6, 12});
    CHECK(determinant(m) == -144);
}

TEST_CASE("degenerate shapes") {
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 3}, {3, 0}, {0, 0}, {1, 1}, {4, 1}}) {
        const IntegerMatrix z(r, c);
        const auto s = smith_normal_form(z, {true, true});
        CHECK(s.rank == 0);
        CHECK(validate_smith(z, s).ok());
    }
}

TEST_CASE("random matrices: validity, rank and determinant") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const auto m = random_matrix(rng, r, c, trial % 3 == 0 ? 40 : 3, 30 + trial % 60);
        const bool inv = trial % 2;
        const auto s = smith_normal_form(m, {true, inv});
        const auto v = validate_smith(m, s);
        CHECK(v.product);
        CHECK(v.diagonal);
        CHECK(v.divisibility);
        CHECK(v.u_unimodular);
        CHECK(v.v_unimodular);
        CHECK(s.rank == oracle::rational_rank(m));
        CHECK(diagonal(s.D) == invariant_factors(m));
        if (r == c) {
            BigInt prod = 1;
            for (const auto& d : s.invariant_factors()) prod *= d;
            const BigInt det = determinant(m);
            CHECK((s.rank == r ? prod : BigInt(0)) == abs(det));
        }
    }
}

TEST_CASE("a tampered decomposition is rejected") {
    const auto m = IntegerMatrix::from_rows({{2, 4}, {6, 8}});
    auto s = smith_normal_form(m);
    s.D(1, 1) += 1;
    CHECK_FALSE(validate_smith(m, s).ok());
    auto t = smith_normal_form(m);
    t.U(0, 0) *= 2;
    CHECK_FALSE(validate_smith(m, t).ok());
}

TEST_CASE("sparse invariant factors agree with the dense reduction") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 1 + rng() % 25, c = 1 + rng() % 25;
        const int range = trial % 4 == 0 ? 1 : trial % 4 == 1 ? 3 : 12;
        const auto m = random_matrix(rng, r, c, range, 10 + trial % 40);
        const auto expected = invariant_factors(m);
        CHECK(invariant_factors(to_sparse(m)) == expected);
        CHECK(invariant_factors(to_sparse(m.transpose())) == expected);
    }
}

TEST_CASE("sparse reduction survives 64-bit overflow") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        IntegerMatrix m = random_matrix(rng, 6, 6, 9, 80);
        for (std::size_t i = 0; i < 6; ++i) m(i, i) = BigInt(1) << 61;
        m(0, 1) = (BigInt(1) << 61) + 1;
        CHECK(invariant_factors(to_sparse(m)) == invariant_factors(m));
    }
}

TEST_CASE("sparse reduction of boundary matrices matches dense") {
    for (const auto& b : {fixtures::four_element(), fixtures::five_element(), fixtures::tsr_3122()})
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto sparse = sparse_boundary_matrix(b, n);
            const auto dense = boundary_matrix(b, n);
            CHECK(sparse.to_dense() == dense);
            CHECK(invariant_factors(sparse) == invariant_factors(dense));
            CHECK(invariant_factors(sparse.transpose()) == invariant_factors(dense));
        }
}

TEST_CASE("integer span membership") {
    // span of (2, 0, 0), (1, 3, 0)
    const auto g = IntegerMatrix::from_rows({{2, 1}, {0, 3}, {0, 0}});
    const IntegerSpan span(g);
    const auto c = span.solve({BigInt(5), BigInt(9), BigInt(0)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] * 2 + (*c)[1] == 5);
    CHECK((*c)[1] * 3 == 9);
    CHECK_FALSE(span.contains({BigInt(1), BigInt(0), BigInt(0)}));
    CHECK_FALSE(span.contains({BigInt(0), BigInt(1), BigInt(0)}));
    CHECK_FALSE(span.contains({BigInt(0), BigInt(0), BigInt(2)}));

    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto gens = random_matrix(rng, 5, 3, 6, 70);
        const IntegerSpan s(gens);
        std::vector<BigInt> coeff(3), v(5, 0);
        for (auto& x : coeff) x = static_cast<int>(rng() % 11) - 5;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 3; ++j) v[i] += gens(i, j) * coeff[j];
        const auto sol = s.solve(v);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < 5; ++i) {
            BigInt acc = 0;
            for (std::size_t j = 0; j < 3; ++j) acc += gens(i, j) * (*sol)[j];
            CHECK(acc == v[i]);
        }
    }
}

TEST_CASE("integer kernel is a saturated basis of the null space") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 5, 2 + rng() % 6, 5, 60);
        const auto k = integer_kernel(m);
        CHECK(k.rows() == m.cols());
        CHECK(k.cols() == m.cols() - oracle::rational_rank(m));
        CHECK((m * k).is_zero());
        for (const auto& d : invariant_factors(k)) CHECK(d == 1);
    }
}
