#pragma once

// Characters of Verma modules and of the minimally supported irreducibles
// L_c(n0*lambda + lambda') of the rational Cherednik algebra of S_n, c = m/n.

#include "rcalab/characters.hpp"
#include "rcalab/laurent.hpp"
#include "rcalab/parallel.hpp"
#include "rcalab/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rcalab {

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CherednikParams {
    int n = 1, m = 1;
    Rational c;
    int d = 1, m0 = 1, n0 = 1;

    static CherednikParams from_mn(int m, int n) {
        if (m < 1 || n < 1) throw LabelError("m and n must be positive");
        CherednikParams p;
        p.n = n;
        p.m = m;
        p.d = static_cast<int>(gcd_long(m, n));
        p.m0 = m / p.d;
        p.n0 = n / p.d;
        p.c = make_rational(m, n);
        return p;
    }

    // c = m0/n0 at an arbitrary rank n = d n0 + r, 0 <= r < n0 (labels n0 lambda + lambda', |lambda'| = r).
    // m is c*n when that is an integer and 0 otherwise.
    static CherednikParams from_c(int m0, int n0, int n) {
        if (m0 < 1 || n0 < 1 || n < 1) throw LabelError("m0, n0 and n must be positive");
        if (gcd_long(m0, n0) != 1) throw LabelError("m0 and n0 must be coprime");
        CherednikParams p;
        p.n = n;
        p.m0 = m0;
        p.n0 = n0;
        p.d = n / n0;
        p.m = (static_cast<long>(m0) * n) % n0 == 0 ? static_cast<int>(static_cast<long>(m0) * n / n0) : 0;
        p.c = make_rational(m0, n0);
        return p;
    }
};

// Doubled exponent of q^{(n-1)/2 - c*kappa(nu)}; must sit on the half-integer lattice.
inline int lowest_weight2(const CherednikParams& p, const Partition& nu) {
    long num = static_cast<long>(p.n - 1) * p.n0 - 2L * p.m0 * kappa(nu);
    if (num % p.n0 != 0)
        throw std::domain_error("q-exponent of M_c(" + nu.str() + ") is not in (1/2)Z for c = " + p.c.get_str());
    return static_cast<int>(num / p.n0);
}

// det_h(1 - q sigma)^{-1} = (1-q) / prod_j (1 - q^{rho_j})
inline RationalAQ inverse_det_h(const Partition& cls) {
    return RationalAQ(LaurentAQ::one_minus_q(1), cls.parts());
}

inline RationalAQ verma_character(const CherednikParams& p, const Partition& nu, const Partition& cls) {
    if (nu.size() != p.n || cls.size() != p.n)
        throw LabelError("verma_character: |nu| and |cls| must equal n = " + std::to_string(p.n));
    long chi = mn_character(nu, cls);
    if (chi == 0) return {};
    return inverse_det_h(cls).shifted(0, lowest_weight2(p, nu)).scaled(chi);
}

// (1-q)/(1-a) theta(s_nu) with the lowest-weight shift
inline RationalAQ hook_components_verma(const CherednikParams& p, const Partition& nu) {
    if (nu.size() != p.n) throw LabelError("hook_components_verma: |nu| must equal n");
    RationalAQ th = theta_schur(nu).divided_by_binomial(2, 0);
    return (th * RationalAQ(LaurentAQ::one_minus_q(1))).shifted(0, lowest_weight2(p, nu));
}

inline void check_minimal_support_label(const CherednikParams& p, const Partition& lam, const Partition& lam_prime) {
    if (p.n0 * lam.size() + lam_prime.size() != p.n)
        throw LabelError("label violates n = n0*|lambda| + |lambda'|: n0=" + std::to_string(p.n0) + ", |lambda|=" +
                         std::to_string(lam.size()) + ", |lambda'|=" + std::to_string(lam_prime.size()) +
                         ", n=" + std::to_string(p.n));
    if (lam_prime.size() >= p.n0 && !(lam_prime.empty()))
        throw LabelError("label violates |lambda'| < n0 (minimal support)");
}

// Tr_{L_c(n0 lambda + lambda')}(sigma q^h)
inline RationalAQ l_character(const CherednikParams& p, const Partition& lam, const Partition& lam_prime,
                              const Partition& cls) {
    check_minimal_support_label(p, lam, lam_prime);
    if (cls.size() != p.n) throw LabelError("class size must equal n");
    auto coeffs = c_coeffs(lam, lam_prime, p.n0);
    std::vector<std::pair<Partition, long>> items(coeffs.begin(), coeffs.end());
    auto parts = parallel_map(items, [&](const std::pair<Partition, long>& t) {
        return verma_character(p, t.first, cls).scaled(t.second);
    });
    return sum_rational(parts);
}

// sum_k (-a)^k dim_q Hom(wedge^k h, L_c(n0 lambda))
inline RationalAQ hook_components_L(const CherednikParams& p, const Partition& lam) {
    check_minimal_support_label(p, lam, Partition());
    auto coeffs = c_coeffs(lam, Partition(), p.n0);
    std::vector<std::pair<Partition, long>> items(coeffs.begin(), coeffs.end());
    auto parts = parallel_map(items, [&](const std::pair<Partition, long>& t) {
        return hook_components_verma(p, t.first).scaled(t.second);
    });
    return sum_rational(parts);
}

// sum_k a^k dim_q Hom(wedge^k h, L): the positive-a bigraded character
inline RationalAQ bigraded_character(const CherednikParams& p, const Partition& lam) {
    return hook_components_L(p, lam).negate_a();
}

// Q with ch L_c(n0 lambda) = Q / prod_{i=2}^{d}(1-q^i); throws if Q is not a Laurent polynomial.
inline LaurentAQ numerator_Q(const CherednikParams& p, const Partition& lam) {
    const int d = lam.size();
    RationalAQ ch = l_character(p, lam, Partition(), Partition(std::vector<int>(p.n, 1)));
    LaurentAQ mult(1);
    for (int i = 2; i <= d; ++i) mult *= LaurentAQ::one_minus_q(i);
    auto q = (ch * RationalAQ(mult)).as_laurent();
    if (!q) throw NotPolynomialError("numerator_Q: character times prod(1-q^i) is not a polynomial");
    return *q;
}

// sum_{|lambda|=d} dim pi_lambda * hook_components_L(lambda), d = gcd(m, n)
inline RationalAQ torus_link_hook_sum(int m, int n) {
    CherednikParams p = CherednikParams::from_mn(m, n);
    std::vector<RationalAQ> parts;
    for (auto& lam : partitions_of(p.d)) parts.push_back(hook_components_L(p, lam).scaled(Rational(dimension(lam))));
    return sum_rational(parts);
}

// The torus-link HOMFLY in the positive-a convention of the bigraded character.
inline RationalAQ torus_link_homfly(int m, int n) { return torus_link_hook_sum(m, n).negate_a(); }

// Tr_{L(n0 lambda^t)}(sigma q^h) == (-1)^{|lambda|-1} Tr_{L(n0 lambda)}(sigma q^{-h})
inline bool duality_check(const CherednikParams& p, const Partition& lam, const Partition& cls) {
    RationalAQ lhs = l_character(p, lam.transpose(), Partition(), cls);
    RationalAQ rhs = l_character(p, lam, Partition(), cls).invert_q();
    if ((lam.size() - 1) % 2) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace rcalab
