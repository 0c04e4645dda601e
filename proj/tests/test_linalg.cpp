#include <catch2/catch_amalgamated.hpp>

#include <goldie/linalg.hpp>

#include "test_util.hpp"

using goldie::FieldSpec;
using goldie::FieldValue;
using goldie::FMatrix;

namespace {
const FieldSpec Q = FieldSpec::rationals();
FieldValue qv(long n) { return FieldValue(Q, n); }

FMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    FMatrix m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = qv(rows[i][j]);
    return m;
}
} // namespace

TEST_CASE("rank of singular and regular matrices") {
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 2}, {3, 4}}).rank() == 2);
    CHECK(from_rows({{0, 0}, {0, 0}}).rank() == 0);
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).rank() == 2);
}

TEST_CASE("nullspace basis is deterministic and correct") {
    const FMatrix m = from_rows({{1, 2}, {2, 4}});
    const auto basis = m.nullspace();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == qv(-2));
    CHECK(basis[0][1] == qv(1));

    const auto full = from_rows({{1, 0}, {0, 1}}).nullspace();
    CHECK(full.empty());
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
    const FMatrix m = from_rows({{2, 1}, {1, 3}});
    const auto x = m.solve({qv(5), qv(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == qv(1));
    CHECK((*x)[1] == qv(3));

    const FMatrix sing = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(sing.solve({qv(0), qv(1)}).has_value());
    const auto consistent = sing.solve({qv(2), qv(2)});
    REQUIRE(consistent.has_value());
    CHECK((*consistent)[0] + (*consistent)[1] == qv(2));
}

TEST_CASE("nullspace vectors annihilate on random samples") {
    std::mt19937_64 rng(6174);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(testutil::rand_long(rng, 1, 5));
        const std::size_t cols = static_cast<std::size_t>(testutil::rand_long(rng, 1, 5));
        FMatrix m(Q, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = qv(testutil::rand_long(rng, -3, 3));
        const auto basis = m.nullspace();
        CHECK(basis.size() == cols - m.rank());
        for (const auto& v : basis) {
            bool nonzero = false;
            for (const auto& c : v) nonzero = nonzero || !c.is_zero();
            CHECK(nonzero);
            for (std::size_t i = 0; i < rows; ++i) {
                FieldValue acc = FieldValue::zero(Q);
                for (std::size_t j = 0; j < cols; ++j) acc = acc + m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("solve solutions satisfy the system on random samples") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(testutil::rand_long(rng, 1, 5));
        const std::size_t cols = static_cast<std::size_t>(testutil::rand_long(rng, 1, 5));
        FMatrix m(Q, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = qv(testutil::rand_long(rng, -3, 3));
        // build a guaranteed-consistent right-hand side
        std::vector<FieldValue> xs;
        for (std::size_t j = 0; j < cols; ++j) xs.push_back(qv(testutil::rand_long(rng, -3, 3)));
        std::vector<FieldValue> b(rows, FieldValue::zero(Q));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] = b[i] + m.at(i, j) * xs[j];
        const auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            FieldValue acc = FieldValue::zero(Q);
            for (std::size_t j = 0; j < cols; ++j) acc = acc + m.at(i, j) * (*sol)[j];
            CHECK(acc == b[i]);
        }
    }
}
