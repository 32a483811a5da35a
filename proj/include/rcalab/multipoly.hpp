#pragma once

// Sparse polynomials in x_1..x_k over Q, and the exact linear algebra the Koszul code needs.

#include "rcalab/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcalab {

using Exps = std::vector<int>;

class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly f(nvars);
        f.add_term(Exps(nvars, 0), c);
        return f;
    }
    static MultiPoly variable(int nvars, int i) {
        Exps e(nvars, 0);
        e.at(i) = 1;
        MultiPoly f(nvars);
        f.add_term(e, 1);
        return f;
    }
    static MultiPoly monomial(const Exps& e, const Rational& c = 1) {
        MultiPoly f(static_cast<int>(e.size()));
        f.add_term(e, c);
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exps& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }
    bool is_homogeneous(int d) const {
        for (auto& [e, c] : terms_)
            if (total(e) != d) return false;
        return true;
    }
    static int total(const Exps& e) {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator-(const MultiPoly& x) { return x.scaled(-1); }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        x.check(y);
        MultiPoly r(x.nvars_);
        Exps e(x.nvars_);
        for (auto& [ex, cx] : x.terms_)
            for (auto& [ey, cy] : y.terms_) {
                for (int i = 0; i < x.nvars_; ++i) e[i] = ex[i] + ey[i];
                r.add_term(e, cx * cy);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    MultiPoly scaled(const Rational& s) const {
        if (s == 0) return MultiPoly(nvars_);
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    MultiPoly pow(int k) const {
        MultiPoly r = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    MultiPoly derivative(int i) const {
        MultiPoly r(nvars_);
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exps e2(e);
            --e2[i];
            r.add_term(e2, c * e[i]);
        }
        return r;
    }

    // x_i -> x_{perm[i]}
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r(nvars_);
        for (auto& [e, c] : terms_) {
            Exps e2(nvars_, 0);
            for (int i = 0; i < nvars_; ++i) e2[perm[i]] += e[i];
            r.add_term(e2, c);
        }
        return r;
    }

    MultiPoly swapped(int i, int j) const {
        std::vector<int> perm(nvars_);
        for (int k = 0; k < nvars_; ++k) perm[k] = k;
        std::swap(perm[i], perm[j]);
        return permuted(perm);
    }

    // (f - s_ij f) / (x_i - x_j), exact
    MultiPoly divided_difference(int i, int j) const {
        MultiPoly r(nvars_);
        for (auto& [e, c] : terms_) {
            const int a = e[i], b = e[j];
            if (a == b) continue;
            // x_i^a x_j^b - x_i^b x_j^a = sgn (x_i - x_j) x_i^lo x_j^lo sum_t x_i^t x_j^{hi-lo-1-t}
            const int lo = std::min(a, b), hi = std::max(a, b);
            const Rational s = a > b ? c : Rational(-c);
            for (int t = 0; t < hi - lo; ++t) {
                Exps e2(e);
                e2[i] = lo + t;
                e2[j] = lo + (hi - lo - 1 - t);
                r.add_term(e2, s);
            }
        }
        return r;
    }

    // Substitute x_i -> g_i for every i; all g_i live in the same target ring.
    MultiPoly substitute(const std::vector<MultiPoly>& g) const {
        if (static_cast<int>(g.size()) != nvars_) throw std::invalid_argument("substitute: arity mismatch");
        const int target = g.empty() ? 0 : g.front().nvars();
        std::vector<std::vector<MultiPoly>> powers(nvars_);
        MultiPoly r(target);
        for (auto& [e, c] : terms_) {
            MultiPoly term = constant(target, c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(target, 1));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * g[i]);
                term *= pw[e[i]];
            }
            r += term;
        }
        return r;
    }

    // Restrict to x_1 + ... + x_k = 0 by x_k -> -(x_1 + ... + x_{k-1}).
    MultiPoly eliminate_last() const {
        const int k = nvars_;
        std::vector<MultiPoly> g;
        for (int i = 0; i + 1 < k; ++i) g.push_back(variable(k - 1, i));
        MultiPoly last(k - 1);
        for (int i = 0; i + 1 < k; ++i) last -= variable(k - 1, i);
        g.push_back(last);
        return substitute(g);
    }

    Rational eval(const std::vector<Rational>& x) const {
        Rational s = 0;
        for (auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i) t *= rational_pow(x[i], e[i]);
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = abs(c);
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            bool unit = true;
            std::string vars;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
                unit = false;
            }
            if (unit) os << a.get_str();
            else if (a == 1) os << vars;
            else os << a.get_str() << "*" << vars;
        }
        return os.str();
    }

private:
    void check(const MultiPoly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    int nvars_;
    std::map<Exps, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.str(); }

// Exponent vectors of total degree d in k variables, each weighted by weights[i] (default 1).
inline std::vector<Exps> monomials_of_degree(int k, int d, const std::vector<int>& weights = {}) {
    std::vector<Exps> out;
    Exps e(k, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            if (left == 0) out.push_back(e);
            return;
        }
        const int w = weights.empty() ? 1 : weights[i];
        for (int a = 0; a * w <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a * w);
        }
        e[i] = 0;
    };
    if (d >= 0) rec(0, d);
    return out;
}

// ---- exact linear algebra over Q ----

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Mat& a) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        const Rational inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (int j = c; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

inline int rank_of(Mat a) { return static_cast<int>(rref(a).size()); }

// Basis of {v : A v = 0}, A given as rows x cols.
inline std::vector<Vec> nullspace(Mat a, int cols) {
    std::vector<int> piv = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// A subspace kept in reduced echelon form; coordinates of a member are read at the pivots.
struct Subspace {
    Mat rows;
    std::vector<int> pivots;

    static Subspace span(std::vector<Vec> vectors) {
        Subspace s;
        s.rows = std::move(vectors);
        s.pivots = rref(s.rows);
        return s;
    }
    int dim() const { return static_cast<int>(rows.size()); }

    // trace of a linear map preserving the subspace
    Rational trace(const std::function<Vec(const Vec&)>& op) const {
        Rational t = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) t += op(rows[r])[pivots[r]];
        return t;
    }
};

}  // namespace rcalab
