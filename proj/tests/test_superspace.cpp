#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace linf;
using linf::test::bc;
using linf::test::e;

TEST(SuperSpace, BasisCountsForTwoEvenOneOdd)
{
    SuperSpace s(1, 2, 8);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(basis_of_weight(s, n, 0).size(), std::size_t(3 * n + 2)) << n;
        EXPECT_EQ(basis_of_weight(s, n, 1).size(), std::size_t(3 * n + 1)) << n;
    }
    EXPECT_EQ(basis_of_weight(s, 1).size(), 9u);
}

TEST(SuperSpace, SingleEvenVector)
{
    SuperSpace s(0, 1, 3);
    auto b = basis_of_weight(s, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], bc({2}, 1));
    EXPECT_EQ(b[0].parity(s), 0);
}

TEST(SuperSpace, WeightOutOfRange)
{
    SuperSpace s(1, 2, 3);
    EXPECT_THROW(basis_of_weight(s, 0), RangeError);
    EXPECT_THROW(basis_of_weight(s, 4), RangeError);
    EXPECT_THROW(SuperSpace(0, 0, 3), ContractViolation);
}

TEST(SuperSpace, ParityPartitionMatchesListing)
{
    SuperSpace s(1, 2, 6);
    for (int n = 1; n <= 6; ++n) {
        std::vector<BasisCochain> even, odd;
        for (int q = 0; q <= n - 1; ++q) {
            MultiIndex I{1, std::uint8_t(q), std::uint8_t(n - q - 1)};
            even.push_back({I, 0});
            odd.push_back({I, 1});
            odd.push_back({I, 2});
        }
        for (int p = 0; p <= n; ++p) {
            MultiIndex I{0, std::uint8_t(p), std::uint8_t(n - p)};
            even.push_back({I, 1});
            even.push_back({I, 2});
            odd.push_back({I, 0});
        }
        for (auto& b : even)
            EXPECT_EQ(b.parity(s), 0);
        for (auto& b : odd)
            EXPECT_EQ(b.parity(s), 1);
        EXPECT_EQ(even.size() + odd.size(), basis_of_weight(s, n).size());
    }
}

TEST(SuperSpace, CanonicalOrder)
{
    SuperSpace s(1, 2, 3);
    auto b = basis_of_weight(s, 2);
    for (std::size_t i = 1; i < b.size(); ++i) {
        EXPECT_LT(b[i - 1], b[i]);
        EXPECT_LE(b[i - 1].target, b[i].target);
    }
}

TEST(SuperSpace, Evaluate)
{
    EXPECT_EQ(evaluate(bc({0, 2, 0}, 1), MultiIndex{0, 2, 0}), 2);
    EXPECT_EQ(evaluate(bc({0, 2, 0}, 1), MultiIndex{0, 1, 1}), 0);
    EXPECT_EQ(evaluate(bc({1, 1, 0}, 2), MultiIndex{1, 1, 0}), 1);
    EXPECT_EQ(evaluate(bc({0, 3, 2}, 2), MultiIndex{0, 3, 2}), 12);
    EXPECT_THROW(evaluate(bc({0, 2, 0}, 1), MultiIndex{0, 1, 0}), ContractViolation);
}

TEST(SuperSpace, LinearCombinations)
{
    SuperSpace s(1, 2, 4);
    auto c = e(s, {1, 0, 0}, 1, 2) + e(s, {0, 1, 0}, 2);
    EXPECT_TRUE((c + Rational(-1) * c).is_zero());
    EXPECT_EQ(c.coefficient(bc({1, 0, 0}, 1)), 2);
    EXPECT_EQ(c.parity(), 0);
    auto h = scale(e(s, {0, 0, 1}, 1), Rational(1, 2));
    EXPECT_EQ(h.coefficient(bc({0, 0, 1}, 1)), Rational(1, 2));
    EXPECT_EQ((c + h).parity(), -1);
    EXPECT_THROW(c + e(SuperSpace(1, 2, 5), {0, 0, 1}, 1), ContractViolation);
}

TEST(SuperSpace, ParseExamples)
{
    SuperSpace s(1, 2, 6);
    EXPECT_EQ(parse_cochain(s, "psi[0,2,0;1]"), e(s, {0, 2, 0}, 1));
    EXPECT_EQ(parse_cochain(s, "psi[0,1,1;1]"), e(s, {0, 1, 1}, 1));
    EXPECT_EQ(parse_cochain(s, "2*phi[1,0,0;1] + phi[0,1,0;2]"), e(s, {1, 0, 0}, 1, 2) + e(s, {0, 1, 0}, 2));
    EXPECT_EQ(parse_cochain(s, " -1/2 * phi[0,1,1;3]-psi[0,0,1;1] "),
              e(s, {0, 1, 1}, 3, Rational(-1, 2)) - e(s, {0, 0, 1}, 1));
    EXPECT_TRUE(parse_cochain(s, "0").is_zero());
}

TEST(SuperSpace, ParseErrors)
{
    SuperSpace s(1, 2, 6);
    EXPECT_THROW(parse_cochain(s, "psi[2,0,0;1]"), ParseError);
    EXPECT_THROW(parse_cochain(s, "phi[0,2,0;1]"), ParseError);
    EXPECT_THROW(parse_cochain(s, "psi[0,2;1]"), ParseError);
    EXPECT_THROW(parse_cochain(s, "psi[0,7,0;1]"), ParseError);
    EXPECT_THROW(parse_cochain(s, "1/0*psi[0,2,0;1]"), ParseError);
    try {
        parse_cochain(s, "psi[0,2,0;1] + foo");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.position, 15u);
    }
}

TEST(SuperSpace, FormatParseRoundTrip)
{
    SuperSpace s(2, 2, 4);
    std::mt19937 rng(7);
    std::vector<BasisCochain> all;
    for (int n = 1; n <= 4; ++n)
        for (auto& b : basis_of_weight(s, n))
            all.push_back(b);
    for (auto& b : all) {
        Cochain c(s, b);
        EXPECT_EQ(parse_cochain(s, format_cochain(c)), c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int t = 0; t < 200; ++t) {
        Cochain c(s);
        for (int i = 0; i < 6; ++i)
            {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            c.add_term(all[pick(rng)], q);
        }
        auto text = format_cochain(c);
        EXPECT_EQ(parse_cochain(s, text), c) << text;
        EXPECT_EQ(format_cochain(parse_cochain(s, text)), text);
    }
}
