#pragma once

// The Calogero-Moser H_2 on S_n-invariant differential forms, and the two
// commutation checks behind the symmetrized BGG complex.

#include "rcalab/koszul.hpp"
#include "rcalab/multipoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcalab {

// p_s as polynomials in p_2..p_n on sum x = 0 (p_0 = n, p_1 = 0), from the Newton identities.
class NewtonTable {
public:
    explicit NewtonTable(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("NewtonTable: n >= 2");
        const int k = n - 1;
        p_.push_back(MultiPoly::constant(k, n));
        p_.push_back(MultiPoly(k));
        for (int s = 2; s <= n; ++s) p_.push_back(MultiPoly::variable(k, s - 2));
        e_.push_back(MultiPoly::constant(k, 1));
        for (int j = 1; j <= n; ++j) {
            MultiPoly s(k);
            for (int i = 1; i <= j; ++i) s += (e_[j - i] * p_[i]).scaled(i % 2 ? 1 : -1);
            e_.push_back(s.scaled(make_rational(1, j)));
        }
    }

    int n() const { return n_; }
    int nvars() const { return n_ - 1; }

    MultiPoly p(int s) {
        std::lock_guard lock(mu_);
        while (static_cast<int>(p_.size()) <= s) {
            const int t = static_cast<int>(p_.size());
            MultiPoly r(nvars());
            for (int i = 1; i <= n_; ++i) r += (e_[i] * p_[t - i]).scaled(i % 2 ? 1 : -1);
            p_.push_back(std::move(r));
        }
        return p_[s];
    }

    // dp_s = sum_t (d p_s / d p_t) dp_t over t = 2..n
    std::vector<std::pair<int, MultiPoly>> dp(int s) {
        std::vector<std::pair<int, MultiPoly>> out;
        const MultiPoly f = p(s);
        for (int t = 2; t <= n_; ++t) {
            MultiPoly g = f.derivative(t - 2);
            if (!g.is_zero()) out.emplace_back(t, std::move(g));
        }
        return out;
    }

private:
    int n_;
    std::vector<MultiPoly> p_, e_;
    std::mutex mu_;
};

// Element of Q[p_2..p_n] (x) wedge(dp_2..dp_n); wedge indices kept increasing.
class InvariantForm {
public:
    using Wedge = std::vector<int>;
    using Key = std::pair<Exps, Wedge>;

    explicit InvariantForm(int n = 2) : n_(n) {}

    static InvariantForm function(const MultiPoly& f) {
        InvariantForm w(f.nvars() + 1);
        for (auto& [e, c] : f.terms()) w.add_term(e, {}, c);
        return w;
    }
    static InvariantForm constant(int n, const Rational& c) { return function(MultiPoly::constant(n - 1, c)); }
    static InvariantForm p(NewtonTable& T, int s) { return function(T.p(s)); }
    static InvariantForm dp(NewtonTable& T, int s) {
        InvariantForm w(T.n());
        for (auto& [t, g] : T.dp(s))
            for (auto& [e, c] : g.terms()) w.add_term(e, {t}, c);
        return w;
    }

    int n() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Sorts the wedge with its sign; repeated indices give zero.
    void add_term(const Exps& e, Wedge w, const Rational& c) {
        if (c == 0) return;
        for (int a : w)
            if (a < 2 || a > n_) throw std::out_of_range("InvariantForm: dp index outside [2, n]");
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
                if (w[j] > w[j + 1]) {
                    std::swap(w[j], w[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1]) return;
        auto [it, fresh] = terms_.try_emplace({e, std::move(w)}, sign * c);
        if (!fresh) {
            it->second += sign * c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    InvariantForm& operator+=(const InvariantForm& o) {
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    InvariantForm& operator-=(const InvariantForm& o) {
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
    friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
    bool operator==(const InvariantForm& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    InvariantForm scaled(const Rational& s) const {
        InvariantForm r(n_);
        for (auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    // exterior product
    friend InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
        InvariantForm r(a.n_);
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_) {
                Exps e(ka.first);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += kb.first[i];
                Wedge w(ka.second);
                w.insert(w.end(), kb.second.begin(), kb.second.end());
                r.add_term(e, std::move(w), ca * cb);
            }
        return r;
    }

    // component of exterior degree k
    InvariantForm component(std::size_t k) const {
        InvariantForm r(n_);
        for (auto& [key, c] : terms_)
            if (key.second.size() == k) r.add_term(key.first, key.second, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::string> names;
        for (int s = 2; s <= n_; ++s) names.push_back("p" + std::to_string(s));
        std::string out;
        for (auto& [key, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + MultiPoly::monomial(key.first, c).str(names) + ")";
            for (int a : key.second) out += " dp" + std::to_string(a);
        }
        return out;
    }

private:
    int n_;
    std::map<Key, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const InvariantForm& w) { return os << w.str(); }

// H_2(p_k) = (1+c) k(k-1) p_{k-2} - k c sum_{s=0}^{k-2} p_s p_{k-2-s}
inline MultiPoly h2_power_sum(const Rational& c, int k, NewtonTable& T) {
    MultiPoly r(T.nvars());
    if (k < 2) return r;
    r += T.p(k - 2).scaled((1 + c) * k * (k - 1));
    for (int s = 0; s <= k - 2; ++s) r -= (T.p(s) * T.p(k - 2 - s)).scaled(c * k);
    return r;
}

// H_2 on functions of p_2..p_n: first-order part through H_2(p_s), second-order part through
// the pairing (grad p_s, grad p_t) = s t p_{s+t-2}.
inline MultiPoly h2_function(const Rational& c, const MultiPoly& f, NewtonTable& T) {
    const int n = T.n();
    MultiPoly r(T.nvars());
    for (int s = 2; s <= n; ++s) {
        MultiPoly ds = f.derivative(s - 2);
        if (ds.is_zero()) continue;
        r += ds * h2_power_sum(c, s, T);
        for (int t = 2; t <= n; ++t) {
            MultiPoly dst = ds.derivative(t - 2);
            if (!dst.is_zero()) r += (dst * T.p(s + t - 2)).scaled(s * t);
        }
    }
    return r;
}

// The four-term formula for H_2(f dp_{a_1} ^ ... ^ dp_{a_k}), applied linearly.
inline InvariantForm h2_apply(const Rational& c, const InvariantForm& form, int n) {
    if (form.n() != n) throw std::out_of_range("h2_apply: form rank differs from n");
    NewtonTable T(n);
    InvariantForm out(n);
    // f * (dp_{a_1} ^ .. (dp_new at slot j) .. ^ dp_{a_k}), dp_new reduced by the chain rule
    auto put = [&](const MultiPoly& f, const InvariantForm::Wedge& w, std::size_t j, int idx) {
        if (idx < 2) return;  // dp_0 = dp_1 = 0
        for (auto& [t, g] : T.dp(idx)) {
            MultiPoly coef = f * g;
            InvariantForm::Wedge w2(w);
            w2[j] = t;
            for (auto& [e, a] : coef.terms()) out.add_term(e, w2, a);
        }
    };
    for (auto& [key, coeff] : form.terms()) {
        const MultiPoly f = MultiPoly::monomial(key.first, coeff);
        const auto& w = key.second;
        const MultiPoly hf = h2_function(c, f, T);
        for (auto& [e, a] : hf.terms()) out.add_term(e, w, a);
        for (std::size_t j = 0; j < w.size(); ++j) {
            const int a = w[j];
            for (int s = 2; s <= n; ++s) {
                MultiPoly ds = f.derivative(s - 2);
                if (ds.is_zero()) continue;
                put(ds.scaled(make_rational(2 * s * a * (a - 1), a + s - 2)), w, j, a + s - 2);
            }
            for (int s = 0; s <= a - 2; ++s) put((f * T.p(s)).scaled(-2 * c * a), w, j, a - 2 - s);
            put(f.scaled((1 + c) * a * (a - 1)), w, j, a - 2);
        }
    }
    return out;
}

// ---- forms in x-coordinates: sum_I f_I dx_I, I a bitmask over x_1..x_n ----

using XForm = std::map<int, MultiPoly>;

namespace detail {

inline void xform_add(XForm& w, int mask, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = w.try_emplace(mask, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) w.erase(it);
    }
}

// dx_I ^ dx_J with sign, or 0 if they overlap
inline int wedge_sign(int I, int J) {
    if (I & J) return 0;
    int inversions = 0;
    for (int b = 0; b < 31; ++b)
        if (J >> b & 1) inversions += __builtin_popcount(I >> (b + 1));
    return inversions % 2 ? -1 : 1;
}

inline XForm xform_wedge(const XForm& a, const XForm& b) {
    XForm r;
    for (auto& [I, f] : a)
        for (auto& [J, g] : b) {
            const int s = wedge_sign(I, J);
            if (s) xform_add(r, I | J, (f * g).scaled(s));
        }
    return r;
}

// s_ij acting on dx_I: the permuted index set and the sign of re-sorting it
inline std::pair<int, int> swap_indices(int I, int i, int j) {
    const bool hi = I >> i & 1, hj = I >> j & 1;
    if (hi && hj) return {I, -1};
    if (!hi && !hj) return {I, 1};
    const int lo = std::min(i, j), up = std::max(i, j);
    const int between = __builtin_popcount(I & (((1 << up) - 1) & ~((1 << (lo + 1)) - 1)));
    const int J = (I & ~(1 << i) & ~(1 << j)) | (hi ? 1 << j : 1 << i);
    return {J, between % 2 ? -1 : 1};
}

}  // namespace detail

// Dunkl operator on C[x] (x) wedge(C^n)*: the reflection acts on the wedge factor too.
inline XForm dunkl_form(const Rational& c, int i, const XForm& w, int n) {
    XForm r;
    for (auto& [I, f] : w) {
        detail::xform_add(r, I, f.derivative(i));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            auto [J, s] = detail::swap_indices(I, i, j);
            detail::xform_add(r, J, f.divided_difference(i, j).scaled(-c * s));
        }
    }
    return r;
}

inline XForm h2_genuine(const Rational& c, const XForm& w, int n) {
    XForm r;
    for (int i = 0; i < n; ++i)
        for (auto& [I, f] : dunkl_form(c, i, dunkl_form(c, i, w, n), n)) detail::xform_add(r, I, f);
    return r;
}

// contraction with xi = sum_i f_i d/dx_i
inline XForm iota_xi(const XForm& w, const std::vector<MultiPoly>& f) {
    XForm r;
    for (auto& [I, g] : w) {
        int pos = 0;
        for (int b = 0; b < static_cast<int>(f.size()); ++b) {
            if (!(I >> b & 1)) continue;
            detail::xform_add(r, I & ~(1 << b), (g * f[b]).scaled(pos % 2 ? -1 : 1));
            ++pos;
        }
    }
    return r;
}

inline MultiPoly power_sum_x(int n, int k) {
    if (k == 0) return MultiPoly::constant(n, n);
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Exps e(n, 0);
        e[i] = k;
        p.add_term(e, 1);
    }
    return p;
}

// dp_k = k sum_i x_i^{k-1} dx_i
inline XForm dp_x(int n, int k) {
    XForm w;
    for (int i = 0; i < n; ++i) {
        Exps e(n, 0);
        e[i] = k - 1;
        detail::xform_add(w, 1 << i, MultiPoly::monomial(e, k));
    }
    return w;
}

// iota_xi(dp_j) = j sum_i x_i^{j-1} f_i
inline MultiPoly iota_xi_dp(int m, int n, int j) {
    auto f = singular_polys(m, n);
    MultiPoly r(n);
    for (int i = 0; i < n; ++i) {
        Exps e(n, 0);
        e[i] = j - 1;
        r += MultiPoly::monomial(e, j) * f[i];
    }
    return r;
}

// Invariant form of Q[p_2..p_n] (x) wedge(dp) written in x_1..x_n.
inline XForm to_x(const InvariantForm& w) {
    const int n = w.n();
    XForm r;
    std::vector<MultiPoly> ps;
    for (int s = 2; s <= n; ++s) ps.push_back(power_sum_x(n, s));
    for (auto& [key, c] : w.terms()) {
        XForm term{{0, MultiPoly::monomial(key.first, c).substitute(ps)}};
        for (int a : key.second) term = detail::xform_wedge(term, dp_x(n, a));
        for (auto& [I, f] : term) detail::xform_add(r, I, f);
    }
    return r;
}

// [H_2, iota_xi] = 0 on the invariant forms (prod p_s^{e_s}) dp_{a_1} ^ ... of total degree <= max_deg,
// p_s and dp_a with s, a in 1..n, using the Dunkl operators on C[x] (x) wedge(C^n)*.
inline bool h2_iota_commute(int m, int n, int max_deg, std::string* failure = nullptr) {
    const Rational c = make_rational(m, n);
    const auto f = singular_polys(m, n);
    std::vector<int> weights;
    for (int s = 1; s <= n; ++s) weights.push_back(s);
    std::vector<MultiPoly> ps;
    for (int s = 1; s <= n; ++s) ps.push_back(power_sum_x(n, s));

    struct Job {
        Exps pe;
        int mask;
    };
    std::vector<Job> jobs;
    for (int mask = 1; mask < (1 << n); ++mask) {  // nonempty wedge; iota kills functions
        int wdeg = 0;
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1) wdeg += a + 1;
        for (int d = 0; d + wdeg <= max_deg; ++d)
            for (auto& pe : monomials_of_degree(n, d, weights)) jobs.push_back({pe, mask});
    }
    auto bad = parallel_map(jobs, [&](const Job& job) -> std::string {
        XForm w{{0, MultiPoly::monomial(job.pe).substitute(ps)}};
        for (int a = 0; a < n; ++a)
            if (job.mask >> a & 1) w = detail::xform_wedge(w, dp_x(n, a + 1));
        XForm lhs = h2_genuine(c, iota_xi(w, f), n);
        XForm rhs = iota_xi(h2_genuine(c, w, n), f);
        for (auto& [I, g] : rhs) detail::xform_add(lhs, I, g.scaled(-1));
        if (lhs.empty()) return {};
        std::string s = "p^(";
        for (int v : job.pe) s += std::to_string(v) + " ";
        s += ") dp-mask " + std::to_string(job.mask);
        return s;
    });
    for (auto& s : bad)
        if (!s.empty()) {
            if (failure) *failure = "[H2, iota] != 0 on " + s;
            return false;
        }
    return true;
}

// In the free ring on p_1..p_N, pt_1..pt_N (p_0 = n, pt_0 = m), with E_i = m p_i - n pt_i:
// (1/mn) H(E_i) = H_{m/n}(p_i) - H_{n/m}(pt_i) equals the explicit cofactor combination of
// E_0..E_{i-2}, and vanishes after p_j -> (n/m) pt_j (2 <= j < i), p_1 = pt_1 = 0.
inline bool h2_ideal_check(int m, int n, int max_deg, std::string* failure = nullptr) {
    const int N = std::max(max_deg, 2);
    const int nv = 2 * N;
    auto P = [&](int s) { return s == 0 ? MultiPoly::constant(nv, n) : MultiPoly::variable(nv, s - 1); };
    auto Pt = [&](int s) { return s == 0 ? MultiPoly::constant(nv, m) : MultiPoly::variable(nv, N + s - 1); };
    auto H = [&](const Rational& c, int k, auto&& var) {
        MultiPoly r(nv);
        if (k < 2) return r;
        r += var(k - 2).scaled((1 + c) * k * (k - 1));
        for (int s = 0; s <= k - 2; ++s) r -= (var(s) * var(k - 2 - s)).scaled(c * k);
        return r;
    };
    auto E = [&](int s) { return P(s).scaled(m) - Pt(s).scaled(n); };
    const Rational mn = m * n;
    for (int i = 2; i <= max_deg; ++i) {
        MultiPoly lhs = H(make_rational(m, n), i, P) - H(make_rational(n, m), i, Pt);
        MultiPoly cof = E(i - 2).scaled(Rational(m + n) * i * (i - 1) / mn);
        for (int s = 0; s <= i - 2; ++s)
            cof -= (P(i - 2 - s) * E(s)).scaled(Rational(i * m) / mn) + (Pt(s) * E(i - 2 - s)).scaled(Rational(i * n) / mn);
        if (!(lhs == cof)) {
            if (failure) *failure = "cofactor identity fails at i = " + std::to_string(i);
            return false;
        }
        std::vector<MultiPoly> sub;
        for (int s = 1; s <= N; ++s) {
            if (s == 1) sub.push_back(MultiPoly(nv));
            else if (s < i) sub.push_back(Pt(s).scaled(make_rational(n, m)));
            else sub.push_back(P(s));
        }
        for (int s = 1; s <= N; ++s) sub.push_back(s == 1 ? MultiPoly(nv) : Pt(s));
        if (!lhs.substitute(sub).is_zero()) {
            if (failure) *failure = "H(E_" + std::to_string(i) + ") not in (E_2..E_" + std::to_string(i - 1) + ")";
            return false;
        }
    }
    return true;
}

inline bool h2_commutation_check(int m, int n, int max_deg, std::string* failure = nullptr) {
    return h2_iota_commute(m, n, max_deg, failure) && h2_ideal_check(m, n, max_deg, failure);
}

}  // namespace rcalab
