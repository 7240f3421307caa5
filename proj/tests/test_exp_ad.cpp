#include "linf/param_cochain.hpp"
#include "linf/presets.hpp"

#include <gtest/gtest.h>

using namespace linf;

namespace {

constexpr int K = 6;

struct Fixture {
    SuperSpace space{1, 2, K + 2};
    RegistryPtr reg = make_registry({{"u", 0, 0, ""}});
    int cutoff = K + 1;
    BracketTable table{space};

    GrassmannSeries u(int n = 1) const
    {
        auto out = GrassmannSeries::constant(reg, cutoff, 1);
        for (int i = 0; i < n; ++i)
            out = out * GrassmannSeries::generator(reg, cutoff, "u");
        return out;
    }
    ParamCochain pc(const Cochain& c, const GrassmannSeries& s) const
    {
        ParamCochain out(space, reg, cutoff);
        out.add(c, s);
        return out;
    }
    ParamCochain start() const
    {
        return pc(type100::d(space), u(0)) + pc(type100::psi(space, 1), u());
    }
    ParamCochain generator() const { return pc(type100::tau(space, 2), u()); }
};

Rational pow2_over_fact(int k)
{
    Rational r(1);
    for (int i = 1; i <= k; ++i)
        r *= Rational(2, i);
    return r;
}

}

TEST(ExpAd, PsiCoefficients)
{
    Fixture S;
    auto out = exp_ad(S.generator(), K, S.start(), S.table);
    EXPECT_EQ(out.order_part(0), S.pc(type100::d(S.space), S.u(0)));
    for (int k = 0; k <= K; ++k) {
        auto expect = S.pc(type100::psi(S.space, k + 1), pow2_over_fact(k) * S.u(k + 1));
        EXPECT_EQ(out.order_part(k + 1), expect) << k;
    }
}

TEST(ExpAd, AdjointPowers)
{
    Fixture S;
    BracketTable& T = S.table;
    auto tau2 = type100::tau(S.space, 2);
    Cochain x = type100::psi(S.space, 1);
    for (int k = 1; k <= K; ++k) {
        Cochain next(S.space);
        for (auto& [a, ca] : tau2.terms())
            for (auto& [b, cb] : x.terms())
                next += (ca * cb) * T.get(a, b);
        x = next;
        Rational two_k = pow2_over_fact(k);
        for (int i = 2; i <= k; ++i)
            two_k *= Rational(i);
        EXPECT_EQ(x, two_k * type100::psi(S.space, k + 1)) << k;
    }
}

TEST(ExpAd, ResultSquaresToZero)
{
    Fixture S;
    auto out = exp_ad(S.generator(), K, S.start(), S.table);
    EXPECT_TRUE(half_square(out, S.table).is_zero()) << format_param_cochain(half_square(out, S.table));
    EXPECT_TRUE(half_square(S.start(), S.table).is_zero());
    EXPECT_FALSE(out == S.start());
}

TEST(ExpAd, ZeroGeneratorIsIdentity)
{
    Fixture S;
    ParamCochain zero(S.space, S.reg, S.cutoff);
    EXPECT_EQ(exp_ad(zero, K, S.start(), S.table), S.start());
}
