#include "rcalab/dmod.hpp"

#include <gtest/gtest.h>

using namespace rcalab;

namespace {

const int T = 12;

LaurentAQ series(const RationalAQ& f, int trunc = T) { return truncate_q(f.expand(trunc), trunc); }

// <s_mu, s_nu[X/(1-q)]> summed against c^nu q^{shift}: the Schur-coefficient route over all classes.
LaurentAQ class_sum_oracle(const DmodLabel& L, int k, const Partition& mu, int trunc) {
    const int n = L.rank_for(k);
    CherednikParams p = CherednikParams::from_mn(L.m, n);
    std::vector<RationalAQ> parts;
    for (auto& [nu, c] : c_coeffs(L.lam, Partition(), p.n0))
        for (auto& cls : partitions_of(n)) {
            long chi = mn_character(nu, cls) * mn_character(mu, cls);
            if (chi == 0) continue;
            Rational w = make_rational(Integer(c * chi), z_rho(cls));
            parts.push_back(RationalAQ(LaurentAQ::monomial(0, lowest_weight2(p, nu), w), cls.parts()));
        }
    return series(sum_rational(parts) * RationalAQ(LaurentAQ::one_minus_q(1)), trunc);
}

LaurentAQ qint(int k) { return q_integer(k); }

}  // namespace

TEST(DmodLabel, Validation) {
    EXPECT_THROW(DmodLabel::make(3, 3, {1}), LabelError);
    EXPECT_THROW(DmodLabel::make(4, 2, {1}), LabelError);
    auto L = DmodLabel::make(4, 2, {1, 1});
    EXPECT_EQ(L.d, 2);
    EXPECT_EQ(L.orbit(), Partition({2, 2}));
    EXPECT_EQ(DmodLabel::make(3, 0, {2, 1}).orbit(), Partition({2, 1}));
}

TEST(Dmod, MatchesClassSumOracle) {
    for (auto [m, s, lam, k] : {std::tuple{2, 0, Partition{2}, 2}, {2, 0, Partition{1, 1}, 3}, {3, 0, Partition{2, 1}, 2},
                                {2, 1, Partition{1}, 2}, {3, 1, Partition{1}, 2}, {4, 2, Partition{1, 1}, 1}}) {
        auto L = DmodLabel::make(m, s, lam);
        auto ch = dmod_character_truncated(L, k, 8);
        for (auto& mu : partitions_with_rows(L.rank_for(k), m))
            EXPECT_EQ(ch.at(mu), class_sum_oracle(L, k, mu, 8)) << m << " " << s << " " << lam << " " << mu;
    }
}

TEST(Dmod, SL2ClosedForms) {
    for (int k = 1; k <= 5; ++k) {
        auto M2 = dmod_character_truncated(DmodLabel::make(2, 0, {2}), k, T);
        auto M11 = dmod_character_truncated(DmodLabel::make(2, 0, {1, 1}), k, T);
        for (int j = 0; j <= k; ++j) {
            Partition mu({k + j, k - j});
            EXPECT_EQ(M2.at(mu), series(RationalAQ(LaurentAQ::monomial(0, -2 * j + 1), {2}))) << k << " " << j;
            EXPECT_EQ(M11.at(mu), series(RationalAQ(LaurentAQ::monomial(0, 2 * j + 3), {2}))) << k << " " << j;
        }
    }
}

TEST(Dmod, SL3ClosedForms) {
    for (int k = 1; k <= 3; ++k) {
        auto M3 = dmod_character_truncated(DmodLabel::make(3, 0, {3}), k, T);
        auto M21 = dmod_character_truncated(DmodLabel::make(3, 0, {2, 1}), k, T);
        auto M111 = dmod_character_truncated(DmodLabel::make(3, 0, {1, 1, 1}), k, T);
        for (auto& mu : partitions_with_rows(3 * k, 3)) {
            const int m1 = mu[0] - mu[2], m2 = mu[1] - mu[2];
            const int x = std::min(m1 - m2 + 1, m2 + 1);
            EXPECT_EQ(M3.at(mu), series(RationalAQ(qint(x).shifted(0, 2 * (1 - m1)), {2, 3}))) << mu;
            EXPECT_EQ(M111.at(mu), series(RationalAQ(qint(x).shifted(0, 2 * (m1 - x + 5)), {2, 3}))) << mu;
            EXPECT_EQ(M21.at(mu), series(RationalAQ(qint(2 * x).shifted(0, 2 * (3 - x)), {2, 3}))) << mu;
        }
    }
}

TEST(Dmod, HookOrbitClosedFormsViaKostkaFoulkes) {
    for (int m = 2; m <= 4; ++m)
        for (int k = 1; k <= (m == 4 ? 1 : 2); ++k) {
            auto M1m = dmod_character_truncated(DmodLabel::make(m, 0, Partition(std::vector<int>(m, 1))), k, T);
            auto Mm = dmod_character_truncated(DmodLabel::make(m, 0, {m}), k, T);
            for (auto& mu : partitions_with_rows(k * m, m)) {
                EXPECT_EQ(M1m.at(mu), series(closed_form_M_1m(mu, m))) << m << " " << mu;
                EXPECT_EQ(Mm.at(mu), series(closed_form_M_m(mu, m))) << m << " " << mu;
            }
        }
}

TEST(Dmod, Stabilization) {
    for (int m : {2, 3})
        for (int s = 0; s < m; ++s) {
            const int d = s == 0 ? m : static_cast<int>(gcd_long(m, s));
            for (auto& lam : partitions_of(d)) {
                auto L = DmodLabel::make(m, s, lam);
                const int k0 = s == 0 ? 1 : 0;
                auto lo = dmod_character_truncated(L, k0, T), hi = dmod_character_truncated(L, k0 + 1, T);
                for (auto& [mu, f] : lo.mult) {
                    auto up = gl_label(sl_weight(mu, m), m, hi.n);
                    ASSERT_TRUE(up.has_value());
                    EXPECT_EQ(hi.at(*up), f) << m << " " << s << " " << lam << " " << mu;
                }
            }
        }
}

TEST(Dmod, NonnegativeMultiplicities) {
    for (auto [m, s, lam, k] : {std::tuple{3, 0, Partition{2, 1}, 2}, {2, 1, Partition{1}, 3}, {4, 0, Partition{2, 2}, 1}}) {
        auto ch = dmod_character_truncated(DmodLabel::make(m, s, lam), k, T);
        for (auto& [mu, f] : ch.mult) EXPECT_TRUE(nonneg_coeffs(f).ok) << mu;
    }
}

TEST(ZeroWeight, Examples) {
    for (int n = 1; n <= 4; ++n)
        for (auto& mu : partitions_with_rows(2 * n, 2))
            EXPECT_EQ(p_mu_zero_weight(mu, 2, n), LaurentAQ::monomial(0, mu[0] - mu[1])) << mu;
    for (int n = 1; n <= 3; ++n)
        for (auto& mu : partitions_with_rows(3 * n, 3)) {
            const int m1 = mu[0] - mu[2], m2 = mu[1] - mu[2];
            const int x = std::min(m1 - m2 + 1, m2 + 1);
            EXPECT_EQ(p_mu_zero_weight(mu, 3, n), qint(x).shifted(0, 2 * (m1 - x + 1))) << mu;
        }
    EXPECT_EQ(p_mu_zero_weight({2, 2, 2}, 3, 2), LaurentAQ(1));
    EXPECT_THROW(p_mu_zero_weight({3, 2}, 2, 3), std::invalid_argument);
}

TEST(Euler, SL2AndSL3) {
    std::string why;
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(euler_dmod_check(2, k, T, &why)) << why;
    EXPECT_TRUE(euler_dmod_check(3, 2, T, &why)) << why;
}

TEST(Euler, SL2Display) {
    // [M_(2) - M_(1,1)] at V_{2j} is q^{-j+1/2} dim_q V_{2j} / (1+q)
    for (int j = 0; j <= 3; ++j) {
        Partition mu({3 + j, 3 - j});
        RationalAQ expect(qint(2 * j + 1).shifted(0, 1 - 2 * j) * LaurentAQ::one_minus_q(1), {2});
        EXPECT_EQ(euler_rhs(mu, 2), expect);
    }
}

TEST(SmallPart, HookPolynomialFormula) {
    for (int m = 1; m <= 5; ++m)
        for (auto& lam : partitions_of(m)) {
            std::vector<int> hooks;
            for (int r = 0; r < lam.length(); ++r)
                for (int c = 0; c < lam[r]; ++c) hooks.push_back(lam.hook(r, c));
            RationalAQ expect(LaurentAQ::monomial(0, 2 * n_statistic(lam.transpose())), hooks);
            EXPECT_EQ(small_multiplicity_E(lam, Partition(std::vector<int>(m, 1)), T), series(expect)) << lam;
        }
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(small_multiplicity_E({m}, {m}, T).coefficient(0, 0), 1);
}

TEST(SmallPart, InvariantsMatchDmod) {
    const int m = 3;
    for (auto& lam : partitions_of(m)) {
        auto ch = dmod_character_truncated(DmodLabel::make(m, 0, lam), 1, T);
        std::vector<int> hooks;
        for (int r = 0; r < lam.length(); ++r)
            for (int c = 0; c < lam[r]; ++c) hooks.push_back(lam.hook(r, c));
        RationalAQ expect(LaurentAQ::one_minus_q(1).shifted(0, (m - 1) + 2 * n_statistic(lam)), hooks);
        EXPECT_EQ(ch.at(Partition(std::vector<int>(m, 1))), series(expect)) << lam;
    }
}

TEST(SmallPart, MultiplicitySpaces) {
    // Hom(V_mu, M_lambda) = (1-q) q^{(m-1)/2 - kappa(lambda)} E_{lambda,mu}(q) for |mu| = m
    for (int m = 2; m <= 4; ++m)
        for (auto& lam : partitions_of(m)) {
            auto ch = dmod_character_truncated(DmodLabel::make(m, 0, lam), 1, T);
            for (auto& mu : partitions_of(m)) {
                LaurentAQ E = small_multiplicity_E(lam, mu, T + 8);
                LaurentAQ expect = truncate_q((E * LaurentAQ::one_minus_q(1)).shifted(0, (m - 1) - 2 * kappa(lam)), T);
                EXPECT_EQ(ch.at(mu), expect) << lam << " " << mu;
            }
        }
}

TEST(SmallPart, InvariantsSumToSymmetricAlgebra) {
    for (int m = 1; m <= 4; ++m)
        for (auto& cls : partitions_of(m)) {
            std::vector<RationalAQ> parts;
            for (auto& lam : partitions_of(m)) {
                std::vector<int> hooks;
                for (int r = 0; r < lam.length(); ++r)
                    for (int c = 0; c < lam[r]; ++c) hooks.push_back(lam.hook(r, c));
                RationalAQ inv(LaurentAQ::one_minus_q(1).shifted(0, (m - 1) + 2 * n_statistic(lam)), hooks);
                parts.push_back(inv.scaled(Rational(mn_character(lam, cls))));
            }
            EXPECT_EQ(sum_rational(parts), inverse_det_h(cls).shifted(0, m - 1)) << cls;
        }
}
