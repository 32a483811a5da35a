#pragma once

// Colored HOMFLY invariants of torus knots and uncolored torus links.

#include "rcalab/characters.hpp"
#include "rcalab/cherednik.hpp"
#include "rcalab/laurent.hpp"
#include "rcalab/parallel.hpp"
#include "rcalab/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rcalab {

struct TorusKnot {
    int m0 = 1, n0 = 1;

    TorusKnot() = default;
    TorusKnot(int m, int n) : m0(m), n0(n) {
        if (m < 1 || n < 1) throw LabelError("torus knot parameters must be positive");
        if (gcd_long(m, n) != 1)
            throw LabelError("T(" + std::to_string(m) + "," + std::to_string(n) +
                             ") is a link (gcd > 1); use the link command");
    }
    TorusKnot swapped() const { return TorusKnot(n0, m0); }
    std::string str() const { return "T(" + std::to_string(m0) + "," + std::to_string(n0) + ")"; }
};

inline RationalAQ unknot_colored(const Partition& lam) {
    const int k = lam.size();
    return theta_schur(lam).shifted(-k, k);
}

// q^{m0 n0 kappa(lambda)} a^{m0(n0-1)|lambda|/2} sum_mu c^mu_{lambda,n0} q^{-(m0/n0) kappa(mu)} P_mu
inline RationalAQ rosso_jones(const TorusKnot& K, const Partition& lam) {
    const int k = lam.size();
    if (k == 0) return RationalAQ(1);
    auto coeffs = c_coeffs(lam, Partition(), K.n0);
    std::vector<std::pair<Partition, long>> items(coeffs.begin(), coeffs.end());
    auto parts = parallel_map(items, [&](const std::pair<Partition, long>& t) {
        long num = -2L * K.m0 * kappa(t.first);
        if (num % K.n0 != 0)
            throw std::logic_error("Rosso-Jones exponent off the half-integer lattice at mu = " + t.first.str());
        return unknot_colored(t.first).shifted(0, static_cast<int>(num / K.n0)).scaled(t.second);
    });
    RationalAQ sum = sum_rational(parts);
    return sum.shifted(K.m0 * (K.n0 - 1) * k, static_cast<int>(2L * K.m0 * K.n0 * kappa(lam)));
}

// a^{(d/2)(m0+n0-m0n0)} (q^{-1/2} - q^{1/2}) / (1-a) * P
inline RationalAQ renormalize(const RationalAQ& P, const Partition& lam, const TorusKnot& K) {
    const int d = lam.size();
    RationalAQ f = P * RationalAQ(LaurentAQ::one_minus_q(1));
    f = f.shifted(d * (K.m0 + K.n0 - K.m0 * K.n0), -1);
    return f.divided_by_binomial(2, 0);
}

inline RationalAQ renormalized(const TorusKnot& K, const Partition& lam) {
    return renormalize(rosso_jones(K, lam), lam, K);
}

// P * prod_{i=1}^{|lambda|} (1 - q^i), required to be a Laurent polynomial
inline LaurentAQ partially_reduced(const TorusKnot& K, const Partition& lam) {
    RationalAQ P = rosso_jones(K, lam);
    for (int i = 1; i <= lam.size(); ++i) P = P.times_one_minus_q(i);
    auto f = P.as_laurent();
    if (!f) throw NotPolynomialError("partially reduced invariant of " + K.str() + " keeps a denominator");
    return *f;
}

// P / P_lambda(unknot)
inline LaurentAQ reduced(const TorusKnot& K, const Partition& lam) {
    RationalAQ P = rosso_jones(K, lam).shifted(lam.size(), -lam.size()).shifted(0, -2 * static_cast<int>(n_statistic(lam)));
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[r]; ++c) P = P.times_one_minus_q(lam.hook(r, c));
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[r]; ++c) P = P.divided_by_binomial(2, 2 * (c - r));
    auto f = P.as_laurent();
    if (!f) throw NotPolynomialError("reduced invariant of " + K.str() + " keeps a denominator");
    return *f;
}

// Divide out the lowest a- and q-power so that comparisons up to a monomial become exact.
inline LaurentAQ strip_monomial(const LaurentAQ& f, Exponent2* shift = nullptr) {
    Exponent2 lo = f.min_exponents();
    if (shift) *shift = lo;
    return f.shifted(-lo.first, -lo.second);
}

inline RationalAQ sl_N_specialize(const RationalAQ& P, int N) {
    if (N < 1) throw std::invalid_argument("sl_N_specialize: N must be positive");
    return P.specialize_a(N);
}

// Uncolored T(m,n) link, d = gcd(m,n) components: sum_{mu |- n} q^{-(m/n) kappa(mu)} chi_mu(n0^d) P_mu
inline RationalAQ torus_link_raw(int m, int n) {
    CherednikParams p = CherednikParams::from_mn(m, n);
    Partition cls(std::vector<int>(p.d, p.n0));
    std::vector<Partition> mus = partitions_of(n);
    auto parts = parallel_map(mus, [&](const Partition& mu) -> RationalAQ {
        long chi = mn_character(mu, cls);
        if (chi == 0) return {};
        long num = -2L * p.m * kappa(mu);
        if (num % p.n != 0) throw std::logic_error("link exponent off the half-integer lattice at mu = " + mu.str());
        return unknot_colored(mu).shifted(0, static_cast<int>(num / p.n)).scaled(chi);
    });
    return sum_rational(parts);
}

// a^{n/2} q^{-1/2} (1-q)/(1-a) * raw link; equals the hook sum of the Cherednik side.
inline RationalAQ torus_link_renormalized(int m, int n) {
    RationalAQ f = torus_link_raw(m, n) * RationalAQ(LaurentAQ::one_minus_q(1));
    return f.shifted(n, -1).divided_by_binomial(2, 0);
}

}  // namespace rcalab
