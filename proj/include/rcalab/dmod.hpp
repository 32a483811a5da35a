#pragma once

// Characters of SL_m-equivariant D-modules on the nilpotent cone, read off the
// minimally supported Cherednik modules L_{m/n}(n0 lambda) by Schur-Weyl duality.

#include "rcalab/characters.hpp"
#include "rcalab/cherednik.hpp"
#include "rcalab/laurent.hpp"
#include "rcalab/parallel.hpp"
#include "rcalab/symfunc.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcalab {

struct DmodLabel {
    int m = 1, s = 0, d = 1, m0 = 1;
    Partition lam;

    static DmodLabel make(int m, int s, const Partition& lam) {
        if (m < 1) throw LabelError("m must be positive");
        if (s < 0 || s >= m) throw LabelError("central character s must lie in [0, m-1]");
        DmodLabel L;
        L.m = m;
        L.s = s;
        L.d = s == 0 ? m : static_cast<int>(gcd_long(m, s));
        L.m0 = m / L.d;
        if (lam.size() != L.d)
            throw LabelError("orbit label must be a partition of d = gcd(m, s) = " + std::to_string(L.d));
        L.lam = lam;
        return L;
    }

    // Orbit partition m0 * lambda.
    Partition orbit() const { return lam.scaled_plus(m0, Partition()); }
    int rank_for(int k) const { return s + k * m; }
};

// Multiplicity q-series of V_mu (mu a GL_m label with |mu| = n) through q^trunc.
struct TruncatedGLCharacter {
    int m = 1, n = 0, trunc = 0;
    std::map<Partition, LaurentAQ> mult;

    const LaurentAQ& at(const Partition& mu) const {
        static const LaurentAQ zero;
        auto it = mult.find(mu);
        return it == mult.end() ? zero : it->second;
    }
};

// SL_m highest weight (mu_1 - mu_m, ..., mu_{m-1} - mu_m) of a GL_m label.
inline std::vector<int> sl_weight(const Partition& mu, int m) {
    std::vector<int> w(m - 1);
    for (int i = 0; i + 1 < m; ++i) w[i] = mu[i] - mu[m - 1];
    return w;
}

// GL_m label of size n with the given SL_m weight, if one exists.
inline std::optional<Partition> gl_label(const std::vector<int>& w, int m, int n) {
    int sum = std::accumulate(w.begin(), w.end(), 0);
    if (n < sum || (n - sum) % m) return std::nullopt;
    const int base = (n - sum) / m;
    std::vector<int> parts(m, base);
    for (int i = 0; i + 1 < m; ++i) parts[i] += w[i];
    return Partition(parts);
}

namespace detail {

using IntPoly = std::map<std::vector<int>, Integer>;

inline IntPoly power_sum_product(const Partition& rho, int m) {
    IntPoly f{{std::vector<int>(m, 0), Integer(1)}};
    for (int k : rho.parts()) {
        IntPoly g;
        for (auto& [e, c] : f)
            for (int i = 0; i < m; ++i) {
                std::vector<int> e2(e);
                e2[i] += k;
                g[e2] += c;
            }
        f = std::move(g);
    }
    return f;
}

// sum_w sgn(w) [x^{mu + delta - w delta}] f: the coefficient of s_mu(x_1..x_m) in f.
inline Integer bialternant_coefficient(const IntPoly& f, const Partition& mu, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> e(m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            e[i] = mu[i] + (m - 1 - i) - (m - 1 - perm[i]);
            ok = e[i] >= 0;
        }
        if (!ok) continue;
        auto it = f.find(e);
        if (it == f.end()) continue;
        total += (inversions % 2) ? Integer(-it->second) : it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace detail

// Ch_{M^{(n)}}, n = s + k m: (1-q) sum_nu c^nu q^{(n-1)/2 - (m/n) kappa(nu)} s_nu(x, qx, q^2 x, ...),
// Schur coefficients taken in m variables.
inline TruncatedGLCharacter dmod_character_truncated(const DmodLabel& L, int k, int trunc) {
    const int n = L.rank_for(k);
    if (n <= 0) throw LabelError("n = s + k m must be positive");
    CherednikParams p = CherednikParams::from_mn(L.m, n);
    auto coeffs = c_coeffs(L.lam, Partition(), p.n0);
    std::vector<std::pair<Partition, int>> shifts;
    for (auto& [nu, c] : coeffs) shifts.emplace_back(nu, lowest_weight2(p, nu));

    std::vector<Partition> targets = partitions_with_rows(n, L.m);
    std::vector<Partition> classes = partitions_of(n);
    // series has to reach q^{trunc} after the final (1-q); one extra degree is enough
    auto per_class = parallel_map(classes, [&](const Partition& rho) {
        LaurentAQ A;
        for (auto& [nu, e2] : shifts) {
            long chi = mn_character(nu, rho);
            if (chi) A.add_term(0, e2, Rational(coeffs.at(nu) * chi));
        }
        std::vector<LaurentAQ> out(targets.size());
        if (A.is_zero()) return out;
        LaurentAQ H = RationalAQ(A, rho.parts()).expand(trunc + 1).scaled(make_rational(1, z_rho(rho)));
        detail::IntPoly prho = detail::power_sum_product(rho, L.m);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            Integer K = detail::bialternant_coefficient(prho, targets[t], L.m);
            if (K != 0) out[t] = H.scaled(Rational(K));
        }
        return out;
    });

    TruncatedGLCharacter ch;
    ch.m = L.m;
    ch.n = n;
    ch.trunc = trunc;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        LaurentAQ s;
        for (auto& row : per_class) s += row[t];
        s = truncate_q(s * LaurentAQ::one_minus_q(1), trunc);
        if (!s.is_zero()) ch.mult[targets[t]] = std::move(s);
    }
    return ch;
}

// P_mu(q) = K_{mu,(n^m)}(q), the q-analogue of the zero-weight multiplicity of V_mu.
inline LaurentAQ p_mu_zero_weight(const Partition& mu, int m, int n) {
    if (mu.size() != n * m || mu.length() > m)
        throw std::invalid_argument("p_mu_zero_weight: need |mu| = n m with at most m rows");
    return kostka_foulkes(mu, Partition(std::vector<int>(m, n)));
}

inline LaurentAQ q_integer(int k) {
    LaurentAQ f;
    for (int i = 0; i < k; ++i) f.add_term(0, 2 * i, 1);
    return f;
}

// q^{-n(mu)} s_mu(1, q, ..., q^{m-1}): the q-dimension with constant term 1
inline LaurentAQ q_dimension(const Partition& mu, int m) {
    LaurentAQ num(1);
    std::vector<int> hooks;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            num *= LaurentAQ::one_minus_q(m + c - r);
            hooks.push_back(mu.hook(r, c));
        }
    auto f = RationalAQ(num, hooks).as_laurent();
    if (!f) throw std::logic_error("q-dimension is not a polynomial");
    return *f;
}

// Multiplicity of V_mu in the right side of the Euler identity:
// q^{-d(mu)/2} dim_q V_mu / [m]_q with d(mu) = deg dim_q V_mu - m + 1 (mu normalized to mu_m = 0).
inline RationalAQ euler_rhs(const Partition& mu, int m) {
    std::vector<int> w = sl_weight(mu, m);
    Partition base = *gl_label(w, m, std::accumulate(w.begin(), w.end(), 0));
    LaurentAQ dq = q_dimension(base, m);
    const int d = dq.max_exponents().second / 2 - m + 1;
    return RationalAQ(dq.shifted(0, -d) * LaurentAQ::one_minus_q(1), {m});
}

// sum_i (-1)^i [M_{(m-i,1^i)}] against the right side, V_mu by V_mu, for |mu| = n = k m.
inline bool euler_dmod_check(int m, int k, int trunc, std::string* failure = nullptr) {
    const int n = k * m;
    std::vector<TruncatedGLCharacter> hooks;
    for (int i = 0; i < m; ++i) hooks.push_back(dmod_character_truncated(DmodLabel::make(m, 0, hook_partition(m, i)), k, trunc));
    for (auto& mu : partitions_with_rows(n, m)) {
        LaurentAQ lhs;
        for (int i = 0; i < m; ++i) lhs += (i % 2 ? hooks[i].at(mu).scaled(-1) : hooks[i].at(mu));
        LaurentAQ rhs = truncate_q(euler_rhs(mu, m).expand(trunc), trunc);
        if (!(lhs == rhs)) {
            if (failure) *failure = "V" + mu.str() + ": " + lhs.str() + " vs " + rhs.str();
            return false;
        }
    }
    return true;
}

// Character of the multiplicity space of pi_lambda in pi_mu (x) S C^m, through q^trunc.
inline LaurentAQ small_multiplicity_E(const Partition& lam, const Partition& mu, int trunc) {
    if (lam.size() != mu.size()) throw std::invalid_argument("small_multiplicity_E: |lambda| != |mu|");
    const int m = lam.size();
    std::vector<RationalAQ> parts;
    for (auto& cls : partitions_of(m)) {
        long chi = mn_character(lam, cls) * mn_character(mu, cls);
        if (chi == 0) continue;
        parts.push_back(RationalAQ(LaurentAQ(make_rational(class_size(cls) * chi, factorial(m))), cls.parts()));
    }
    return truncate_q(sum_rational(parts).expand(trunc), trunc);
}

// Closed forms for the hook orbits (1^m) and (m) in terms of zero-weight q-analogues.
inline RationalAQ closed_form_M_1m(const Partition& mu, int m) {
    const int n = mu.size() / m;
    std::vector<int> den;
    for (int i = 2; i <= m; ++i) den.push_back(i);
    return RationalAQ(p_mu_zero_weight(mu, m, n).shifted(0, m * m - 1), den);
}

inline RationalAQ closed_form_M_m(const Partition& mu, int m) {
    const int n = mu.size() / m;
    std::vector<int> den;
    for (int i = 2; i <= m; ++i) den.push_back(i);
    return RationalAQ(p_mu_zero_weight(mu, m, n).invert_q().shifted(0, m - 1), den);
}

}  // namespace rcalab
