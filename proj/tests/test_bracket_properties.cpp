#include "linf/bracket.hpp"
#include "linf/presets.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace linf;

namespace {

// Evaluates (f o g)(w_J) from the coderivation extension of g, summing over
// subsets of positions of the word w_J.
Rational oracle_compose(const SuperSpace& s, const BasisCochain& f, const BasisCochain& g, const MultiIndex& J)
{
    std::vector<int> word;
    for (int i = 0; i < s.dim(); ++i)
        for (int r = 0; r < J[i]; ++r)
            word.push_back(i);
    int m = static_cast<int>(word.size());
    int l = g.weight();
    auto odd = [&](int slot) { return s.is_odd(slot) ? 1 : 0; };
    auto sort_sign = [&](std::vector<int> w, MultiIndex& out) {
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
                if (w[j] > w[j + 1]) {
                    if (odd(w[j]) && odd(w[j + 1]))
                        sign = -sign;
                    std::swap(w[j], w[j + 1]);
                }
        out.assign(s.dim(), 0);
        for (int x : w) {
            if (odd(x) && out[x])
                return 0;
            out[x]++;
        }
        return sign;
    };
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != l)
            continue;
        int sign = 1;
        std::vector<int> picked, rest;
        int odd_rest = 0;
        for (int p = 0; p < m; ++p) {
            if (mask & (1u << p)) {
                if (odd(word[p]) && (odd_rest & 1))
                    sign = -sign;
                picked.push_back(word[p]);
            } else {
                rest.push_back(word[p]);
                odd_rest += odd(word[p]);
            }
        }
        MultiIndex K;
        int s1 = sort_sign(picked, K);
        if (s1 == 0 || K != g.index)
            continue;
        std::vector<int> next{g.target};
        next.insert(next.end(), rest.begin(), rest.end());
        MultiIndex K2;
        int s2 = sort_sign(next, K2);
        if (s2 == 0 || K2 != f.index)
            continue;
        total += Rational(sign * s1 * s2) * index_factorial(g.index) * index_factorial(f.index);
    }
    return total;
}

void check_oracle(const SuperSpace& s, int max_weight)
{
    std::vector<BasisCochain> all;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& b : basis_of_weight(s, w))
            all.push_back(b);
    std::size_t checked = 0;
    for (auto& f : all)
        for (auto& g : all) {
            int n = f.weight() + g.weight() - 1;
            auto c = compose(s, f, g);
            for (auto& J : monomials_of_degree(s, n)) {
                Rational expected = oracle_compose(s, f, g, J);
                Rational got = c.coefficient({J, f.target}) * index_factorial(J);
                ASSERT_EQ(got, expected) << format_basis(s, f) << " o " << format_basis(s, g);
                ++checked;
            }
        }
    EXPECT_GT(checked, 500u);
}

Cochain random_homogeneous(const SuperSpace& s, std::mt19937& rng, int max_weight)
{
    std::uniform_int_distribution<int> wd(1, max_weight), pd(0, 1), cd(-3, 3), nd(1, 4);
    int w = wd(rng), p = pd(rng);
    auto basis = basis_of_weight(s, w, p);
    while (basis.empty()) {
        w = wd(rng);
        basis = basis_of_weight(s, w, p);
    }
    std::uniform_int_distribution<std::size_t> bd(0, basis.size() - 1);
    Cochain c(s);
    int terms = nd(rng);
    for (int i = 0; i < terms; ++i)
        c.add_term(basis[bd(rng)], cd(rng));
    if (c.is_zero())
        c.add_term(basis[0], 1);
    return c;
}

int sgn(int a, int b)
{
    return (a & b) ? -1 : 1;
}

}

TEST(ComposeOracle, OneOddTwoEven)
{
    check_oracle(SuperSpace(1, 2, 5), 3);
}

TEST(ComposeOracle, TwoOddTwoEven)
{
    check_oracle(SuperSpace(2, 2, 5), 3);
}

TEST(ComposeOracle, ThreeOdd)
{
    check_oracle(SuperSpace(3, 0, 4), 3);
}

TEST(BracketProperties, GradedAntisymmetry)
{
    std::mt19937 rng(11);
    for (auto s : {SuperSpace(1, 2, 7), SuperSpace(2, 2, 7)})
        for (int t = 0; t < 200; ++t) {
            auto a = random_homogeneous(s, rng, 4);
            auto b = random_homogeneous(s, rng, 4);
            auto lhs = bracket(a, b);
            auto rhs = Rational(-sgn(a.parity(), b.parity())) * bracket(b, a);
            ASSERT_EQ(lhs, rhs) << a << " , " << b;
        }
}

TEST(BracketProperties, GradedJacobi)
{
    std::mt19937 rng(12);
    for (auto s : {SuperSpace(1, 2, 7), SuperSpace(2, 2, 7)})
        for (int t = 0; t < 200; ++t) {
            auto a = random_homogeneous(s, rng, 3);
            auto b = random_homogeneous(s, rng, 3);
            auto c = random_homogeneous(s, rng, 3);
            int pa = a.parity(), pb = b.parity(), pc = c.parity();
            auto j = Rational(sgn(pa, pc)) * bracket(bracket(a, b), c) +
                     Rational(sgn(pb, pa)) * bracket(bracket(b, c), a) +
                     Rational(sgn(pc, pb)) * bracket(bracket(c, a), b);
            ASSERT_TRUE(j.is_zero()) << a << " , " << b << " , " << c << " -> " << j;
        }
}

TEST(BracketProperties, CoboundarySquaresToZero)
{
    SuperSpace s(1, 2, 7);
    for (auto d : {type100::d(s), type010::d(s)})
        for (int w = 1; w <= 6; ++w)
            for (auto& b : basis_of_weight(s, w)) {
                auto x = Cochain(s, b);
                ASSERT_TRUE(coboundary(coboundary(x, d), d).is_zero()) << x;
            }
}

TEST(BracketProperties, CodifferentialCheck)
{
    SuperSpace s(1, 2, 6);
    EXPECT_TRUE(is_codifferential(type100::d(s)).ok);
    EXPECT_TRUE(is_codifferential(type010::d(s)).ok);
    auto mixed = type100::d(s) + linf::test::e(s, {0, 0, 1}, 3);
    EXPECT_THROW(is_codifferential(mixed), ContractViolation);
    auto bad = type100::d(s) + linf::test::e(s, {1, 0, 1}, 2);
    auto r = is_codifferential(bad);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.witness.is_zero());
}

TEST(BracketProperties, TableIsTransparent)
{
    SuperSpace s(1, 2, 6);
    BracketTable table(s);
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto a = random_homogeneous(s, rng, 3);
        auto b = random_homogeneous(s, rng, 3);
        EXPECT_EQ(table.bracket(a, b), bracket(a, b));
        EXPECT_EQ(table.bracket(a, b), bracket(a, b));
    }
    EXPECT_GT(table.size(), 0u);
}

TEST(BracketProperties, TruncationAtCutoff)
{
    SuperSpace s(1, 2, 3);
    auto a = linf::test::e(s, {0, 0, 2}, 3);
    auto b = linf::test::e(s, {0, 0, 3}, 3);
    EXPECT_TRUE(bracket(a, b).is_zero());
}
