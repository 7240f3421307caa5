#include "linf/bracket.hpp"
#include "linf/presets.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace linf;
using linf::test::e;

namespace {

constexpr int kCut = 14;

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}

TEST(CodifferentialTable, Type100Coboundaries)
{
    SuperSpace s(1, 2, kCut);
    auto d = type100::d(s);
    ASSERT_TRUE(is_codifferential(d).ok);
    auto D = [&](const Cochain& x) { return coboundary(x, d); };
    for (int n = 1; n <= 6; ++n) {
        for (int q = 0; q <= n - 1; ++q) {
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 1)), e(s, {0, 2 + q, n - q - 1}, 1));
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 2)), e(s, {1, q + 1, n - q - 1}, 1, 2) + e(s, {0, q + 2, n - q - 1}, 2));
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 3)), e(s, {0, q + 2, n - q - 1}, 3));
        }
        for (int p = 0; p <= n; ++p) {
            EXPECT_EQ(D(e(s, {0, p, n - p}, 2)), e(s, {0, p + 1, n - p}, 1, -2));
            EXPECT_TRUE(D(e(s, {0, p, n - p}, 3)).is_zero());
            EXPECT_TRUE(D(e(s, {0, p, n - p}, 1)).is_zero());
        }
    }
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= 5; ++l) {
            if (k + l >= 1)
                EXPECT_EQ(D(type100::gamma(s, k, l)), -e(s, {0, k + 1, l}, 1));
            EXPECT_EQ(D(type100::alpha(s, k, l)), e(s, {1, k + 1, l}, 1, 2) + e(s, {0, k + 2, l}, 2));
            EXPECT_EQ(D(type100::beta(s, k, l)), e(s, {0, k + 2, l}, 3));
        }
}

TEST(CodifferentialTable, Type010Coboundaries)
{
    SuperSpace s(1, 2, kCut);
    auto d = type010::d(s);
    ASSERT_TRUE(is_codifferential(d).ok);
    auto D = [&](const Cochain& x) { return coboundary(x, d); };
    for (int n = 1; n <= 6; ++n) {
        for (int q = 0; q <= n - 1; ++q) {
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 1)), e(s, {0, 1 + q, n - q}, 1));
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 2)), e(s, {1, q, n - q}, 1) + e(s, {0, q + 1, n - q}, 2));
            EXPECT_EQ(D(e(s, {1, q, n - q - 1}, 3)), e(s, {1, q + 1, n - q - 1}, 1) + e(s, {0, q + 1, n - q}, 3));
        }
        for (int p = 0; p <= n; ++p) {
            EXPECT_EQ(D(e(s, {0, p, n - p}, 2)), -e(s, {0, p, n - p + 1}, 1));
            EXPECT_EQ(D(e(s, {0, p, n - p}, 3)), -e(s, {0, p + 1, n - p}, 1));
            EXPECT_TRUE(D(e(s, {0, p, n - p}, 1)).is_zero());
        }
    }
}

TEST(BracketTable100, ClassBrackets)
{
    using namespace type100;
    SuperSpace s(1, 2, kCut);
    auto dd = d(s);
    auto D = [&](const Cochain& x) { return coboundary(x, dd); };
    auto B = [](const Cochain& a, const Cochain& b) { return bracket(a, b); };
    EXPECT_EQ(B(xi(s), tau(s, 1)), -xi(s));
    EXPECT_EQ(B(psi(s, 1), sigma(s, 1)), xi(s));
    for (int k = 1; k <= 6; ++k) {
        EXPECT_TRUE(B(xi(s), phi(s, k)).is_zero());
        EXPECT_TRUE(B(xi(s), sigma(s, k)).is_zero());
        if (k > 1)
            EXPECT_EQ(B(xi(s), tau(s, k)), D(gamma(s, 0, k - 1))) << k;
        for (int l = 1; l <= 6; ++l) {
            SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l);
            EXPECT_TRUE(B(tau(s, k), tau(s, l)).is_zero());
            EXPECT_EQ(B(phi(s, k), phi(s, l)), q(k - l) * phi(s, k + l - 1));
            EXPECT_EQ(B(psi(s, k), phi(s, l)), q(k) * psi(s, k + l - 1));
            EXPECT_EQ(B(phi(s, k), sigma(s, l)), q(k - l + 1) * sigma(s, k + l - 1));
            if (k + l > 2)
                EXPECT_EQ(B(psi(s, k), sigma(s, l)), q(-k) * D(gamma(s, 0, k + l - 2)));
            EXPECT_EQ(B(phi(s, k), tau(s, l)), q(1 - l) * tau(s, k + l - 1));
            EXPECT_EQ(B(psi(s, k), tau(s, l)), q(-2) * psi(s, k + l - 1));
            if (k + l >= 3) {
                EXPECT_EQ(B(sigma(s, k), sigma(s, l)), q(k - l) * D(beta(s, 0, k + l - 3)));
                EXPECT_EQ(B(sigma(s, k), tau(s, l)), sigma(s, k + l - 1) + q(1 - l) * D(alpha(s, 0, k + l - 3)));
            } else {
                EXPECT_TRUE(B(sigma(s, k), sigma(s, l)).is_zero());
                EXPECT_EQ(B(sigma(s, k), tau(s, l)), sigma(s, 1));
            }
        }
    }
}

TEST(BracketTable100, PreimageBrackets)
{
    using namespace type100;
    SuperSpace s(1, 2, kCut);
    auto B = [](const Cochain& a, const Cochain& b) { return bracket(a, b); };
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(B(xi(s), alpha(s, 0, n)), q(1, 2) * tau(s, n + 1) + gamma(s, 1, n));
        EXPECT_EQ(B(xi(s), beta(s, 0, n)), sigma(s, n + 1));
        if (n > 0)
            EXPECT_EQ(B(xi(s), gamma(s, 0, n)), q(1, 2) * psi(s, n));
    }
    for (int k = 1; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l) {
            SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l);
            EXPECT_EQ(B(psi(s, k), alpha(s, 0, l)), q(2) * gamma(s, 0, k + l));
            if (l > 0) {
                EXPECT_TRUE(B(psi(s, k), gamma(s, 0, l)).is_zero());
                EXPECT_EQ(B(phi(s, k), gamma(s, 0, l)), q(-l) * gamma(s, 0, k + l - 1));
                EXPECT_EQ(B(tau(s, k), gamma(s, 0, l)), gamma(s, 0, k + l - 1));
                EXPECT_EQ(B(sigma(s, k), gamma(s, 0, l)), q(1, 2) * phi(s, k + l - 1) + q(-l) * gamma(s, 1, k + l - 2));
            }
            EXPECT_EQ(B(psi(s, k), beta(s, 0, l)), phi(s, k + l) + q(k, 2) * tau(s, k + l) + q(-k) * gamma(s, 1, k + l - 1));
        }
    for (int k = 0; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l);
            EXPECT_EQ(B(alpha(s, 0, k), phi(s, l)), q(k) * alpha(s, 0, k + l - 1));
            EXPECT_EQ(B(alpha(s, 0, k), sigma(s, l)), q(k) * alpha(s, 1, k + l - 2) - beta(s, 0, k + l - 1));
            EXPECT_EQ(B(alpha(s, 0, k), tau(s, l)), alpha(s, 0, k + l - 1));
            EXPECT_EQ(B(beta(s, 0, k), phi(s, l)), q(k - l) * beta(s, 0, k + l - 1));
            EXPECT_EQ(B(beta(s, 0, k), sigma(s, l)), q(k + 1 - l) * beta(s, 1, k + l - 2));
            EXPECT_EQ(B(beta(s, 0, k), tau(s, l)), q(1 - l) * alpha(s, 1, k + l - 2) + q(2) * beta(s, 0, k + l - 1));
        }
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l) {
            SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l);
            EXPECT_TRUE(B(alpha(s, 0, k), alpha(s, 0, l)).is_zero());
            EXPECT_TRUE(B(alpha(s, 0, k), beta(s, 0, l)).is_zero());
            EXPECT_TRUE(B(beta(s, 0, k), beta(s, 0, l)).is_zero());
            if (l > 0) {
                EXPECT_TRUE(B(alpha(s, 0, k), gamma(s, 0, l)).is_zero());
                EXPECT_EQ(B(beta(s, 0, k), gamma(s, 0, l)), q(-l, 2) * alpha(s, 0, k + l - 1));
                if (k > 0)
                    EXPECT_TRUE(B(gamma(s, 0, k), gamma(s, 0, l)).is_zero());
            }
        }
}

TEST(BracketTable010, FirstOrder)
{
    using namespace type010;
    SuperSpace s(1, 2, kCut);
    auto dd = d(s);
    auto D = [&](const Cochain& x) { return coboundary(x, dd); };
    auto B = [](const Cochain& a, const Cochain& b) { return bracket(a, b); };
    for (int k = 0; k <= 6; ++k) {
        SCOPED_TRACE(k);
        EXPECT_TRUE(B(psi1(s), phi(s, k)).is_zero());
        EXPECT_TRUE(B(psi2(s), sigma(s, k)).is_zero());
        EXPECT_EQ(B(psi1(s), sigma(s, k)), k == 0 ? -psi1(s) : k == 1 ? D(epsilon(s, 1)) : D(gamma(s, k - 1)));
        EXPECT_EQ(B(psi2(s), phi(s, k)), k == 0 ? -psi2(s) : D(epsilon(s, k)));
        for (int l = 0; l <= 6; ++l) {
            EXPECT_TRUE(B(phi(s, k), sigma(s, l)).is_zero());
            EXPECT_EQ(B(phi(s, k), phi(s, l)), q(k - l) * phi(s, k + l));
            EXPECT_EQ(B(sigma(s, k), sigma(s, l)), q(k - l) * sigma(s, k + l));
        }
    }
}

TEST(BracketTable010, PreimageBrackets)
{
    using namespace type010;
    SuperSpace s(1, 2, kCut);
    auto dd = d(s);
    auto D = [&](const Cochain& x) { return coboundary(x, dd); };
    auto B = [](const Cochain& a, const Cochain& b) { return bracket(a, b); };
    for (int k = 1; k <= 6; ++k) {
        SCOPED_TRACE(k);
        EXPECT_EQ(B(psi1(s), gamma(s, k)), k == 1 ? -D(epsilon(s, 1)) : -D(gamma(s, k - 1)));
        EXPECT_EQ(B(psi1(s), epsilon(s, k)), k == 1 ? psi1(s) : -D(beta(s, k - 1)));
        EXPECT_TRUE(B(psi2(s), gamma(s, k)).is_zero());
        EXPECT_TRUE(B(psi2(s), epsilon(s, k)).is_zero());
        EXPECT_TRUE(B(psi1(s), beta(s, k)).is_zero());
        EXPECT_EQ(B(psi2(s), beta(s, k)), k == 1 ? psi1(s) : -D(beta(s, k - 1)));
        for (int n = 0; n <= 6; ++n) {
            SCOPED_TRACE(n);
            EXPECT_EQ(B(phi(s, n), gamma(s, k)), q(n) * D(xi(s, k - 1, n)));
            EXPECT_EQ(B(phi(s, n), epsilon(s, k)), q(n) * phi(s, n + k - 1) + q(1 - k) * epsilon(s, n + k));
            EXPECT_EQ(B(sigma(s, n), gamma(s, k)), q(-k) * gamma(s, n + k));
            EXPECT_TRUE(B(sigma(s, n), epsilon(s, k)).is_zero());
            EXPECT_EQ(B(phi(s, n), beta(s, k)), q(-k) * beta(s, n + k));
            Cochain sb = n == 0   ? beta(s, k)
                         : n == 1 ? q(2) * D(tau(s, 0, k - 1)) - phi(s, k) + epsilon(s, k + 1)
                                  : q(n + 1) * D(tau(s, n - 1, k - 1)) - D(xi(s, n - 2, k)) + alpha(s, n - 1, k + 1);
            EXPECT_EQ(B(sigma(s, n), beta(s, k)), sb);
        }
        for (int l = 1; l <= 6; ++l) {
            SCOPED_TRACE(l);
            EXPECT_TRUE(B(gamma(s, k), gamma(s, l)).is_zero());
            EXPECT_EQ(B(gamma(s, k), epsilon(s, l)), q(1 - l) * alpha(s, k, l));
            EXPECT_EQ(B(epsilon(s, k), epsilon(s, l)), q(k - l) * epsilon(s, k + l - 1));
            EXPECT_EQ(B(epsilon(s, k), beta(s, l)), q(-l) * beta(s, k + l - 1));
            Cochain gb = k == 1 ? q(-l) * D(tau(s, 0, l - 1)) + q(l) * phi(s, l) + q(1 - l) * epsilon(s, l + 1)
                                : q(-l) * D(tau(s, k - 1, l - 1)) + q(l) * D(xi(s, k - 2, l)) +
                                      q(k - l) * alpha(s, k - 1, l + 1);
            EXPECT_EQ(B(gamma(s, k), beta(s, l)), gb);
        }
    }
}

TEST(BracketTable010, OddPreimageBrackets)
{
    using namespace type010;
    SuperSpace s(1, 2, kCut);
    auto dd = d(s);
    auto D = [&](const Cochain& x) { return coboundary(x, dd); };
    auto B = [](const Cochain& a, const Cochain& b) { return bracket(a, b); };
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= 5; ++l) {
            if (k + l == 0)
                continue;
            SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l);
            EXPECT_EQ(B(psi1(s), xi(s, k, l)), k == 0 ? phi(s, l) : D(xi(s, k - 1, l)));
            if (l >= 1)
                EXPECT_EQ(B(psi2(s), xi(s, k, l)), l == 1 ? gamma(s, k + 1) : alpha(s, k + 1, l));
            Cochain pt = k == 0   ? beta(s, l + 1)
                         : k == 1 ? D(tau(s, 0, l)) - phi(s, l + 1) + epsilon(s, l + 2)
                                  : D(tau(s, k - 1, l)) - D(xi(s, k - 2, l + 1)) + alpha(s, k - 1, l + 2);
            EXPECT_EQ(B(psi1(s), tau(s, k, l)), pt);
            EXPECT_EQ(B(psi2(s), tau(s, k, l)), l == 0 ? sigma(s, k) : D(tau(s, k, l - 1)));
            for (int n = 0; n <= 5; ++n) {
                SCOPED_TRACE(n);
                EXPECT_EQ(B(phi(s, n), xi(s, k, l)), q(n - l) * xi(s, k, n + l));
                EXPECT_EQ(B(sigma(s, n), xi(s, k, l)), q(-(k + 1)) * xi(s, k + n, l));
                EXPECT_EQ(B(tau(s, k, l), phi(s, n)), q(l + 1) * tau(s, k, n + l));
                EXPECT_EQ(B(tau(s, k, l), sigma(s, n)), q(k - n) * tau(s, k + n, l));
            }
            for (int n = 1; n <= 5; ++n) {
                SCOPED_TRACE(n);
                EXPECT_EQ(B(xi(s, k, l), gamma(s, n)), q(l - 1) * xi(s, k + n, l));
                EXPECT_EQ(B(xi(s, k, l), epsilon(s, n)), q(l - n) * xi(s, k, l + n - 1));
                EXPECT_EQ(B(xi(s, k, l), beta(s, n)), q(-n) * tau(s, k, l + n - 1) + q(k) * xi(s, k - 1, l + n));
                EXPECT_EQ(B(tau(s, k, l), gamma(s, n)), q(l) * tau(s, k + n, l) - q(n) * xi(s, k + n - 1, l + 1));
                EXPECT_EQ(B(tau(s, k, l), epsilon(s, n)), q(l) * tau(s, k, l + n - 1));
                EXPECT_EQ(B(tau(s, k, l), beta(s, n)), q(k) * tau(s, k - 1, l + n));
            }
        }
}
