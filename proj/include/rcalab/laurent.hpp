#pragma once

// Exact Laurent polynomials in a^{1/2}, q^{1/2} and rational functions with
// (1-q^i) denominators.  All exponents are stored doubled.

#include "rcalab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcalab {

using Exponent2 = std::pair<int, int>;  // (2*deg_a, 2*deg_q)

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPolynomialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LaurentAQ {
public:
    using Terms = std::map<Exponent2, Rational>;

    LaurentAQ() = default;
    LaurentAQ(const Rational& c) { // NOLINT: constants convert implicitly
        if (c != 0) terms_[{0, 0}] = c;
    }
    LaurentAQ(int c) : LaurentAQ(Rational(c)) {} // NOLINT

    static LaurentAQ monomial(int ea2, int eq2, const Rational& c = 1) {
        LaurentAQ f;
        if (c != 0) f.terms_[{ea2, eq2}] = c;
        return f;
    }
    static LaurentAQ a() { return monomial(2, 0); }
    static LaurentAQ q() { return monomial(0, 2); }
    // 1 - s * a^{ea2/2} q^{eq2/2}
    static LaurentAQ binomial(int ea2, int eq2, int s = 1) {
        LaurentAQ f(1);
        f.add_term(ea2, eq2, Rational(-s));
        return f;
    }
    static LaurentAQ one_minus_q(int i) { return binomial(0, 2 * i); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(int ea2, int eq2) const {
        auto it = terms_.find({ea2, eq2});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int ea2, int eq2, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace({ea2, eq2}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentAQ& operator+=(const LaurentAQ& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    LaurentAQ& operator-=(const LaurentAQ& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    LaurentAQ operator-() const {
        LaurentAQ r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend LaurentAQ operator+(LaurentAQ x, const LaurentAQ& y) { return x += y; }
    friend LaurentAQ operator-(LaurentAQ x, const LaurentAQ& y) { return x -= y; }

    friend LaurentAQ operator*(const LaurentAQ& x, const LaurentAQ& y) {
        LaurentAQ r;
        if (x.is_zero() || y.is_zero()) return r;
        for (auto& [ex, cx] : x.terms_)
            for (auto& [ey, cy] : y.terms_) r.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
        return r;
    }
    LaurentAQ& operator*=(const LaurentAQ& o) { return *this = *this * o; }

    LaurentAQ scaled(const Rational& s) const {
        if (s == 0) return {};
        LaurentAQ r(*this);
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    LaurentAQ shifted(int ea2, int eq2) const {
        LaurentAQ r;
        for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exponent2{e.first + ea2, e.second + eq2}, c);
        return r;
    }

    bool operator==(const LaurentAQ& o) const { return terms_ == o.terms_; }

    bool is_q_only() const {
        for (auto& [e, c] : terms_)
            if (e.first != 0) return false;
        return true;
    }

    Exponent2 min_exponents() const {
        if (terms_.empty()) return {0, 0};
        int ma = terms_.begin()->first.first, mq = terms_.begin()->first.second;
        for (auto& [e, c] : terms_) {
            ma = std::min(ma, e.first);
            mq = std::min(mq, e.second);
        }
        return {ma, mq};
    }
    Exponent2 max_exponents() const {
        if (terms_.empty()) return {0, 0};
        int ma = terms_.begin()->first.first, mq = terms_.begin()->first.second;
        for (auto& [e, c] : terms_) {
            ma = std::max(ma, e.first);
            mq = std::max(mq, e.second);
        }
        return {ma, mq};
    }

    // a -> q^N; a^{1/2} -> q^{N/2}.
    LaurentAQ specialize_a(int N) const {
        LaurentAQ r;
        for (auto& [e, c] : terms_) r.add_term(0, e.second + N * e.first, c);
        return r;
    }

    LaurentAQ invert_q() const {
        LaurentAQ r;
        for (auto& [e, c] : terms_) r.terms_[{e.first, -e.second}] = c;
        return r;
    }

    // f(-a, q), normalized so the lowest a-power keeps its sign; a-exponents must share parity.
    LaurentAQ negate_a() const {
        if (terms_.empty()) return {};
        int base = min_exponents().first;
        LaurentAQ r;
        for (auto& [e, c] : terms_) {
            int diff = e.first - base;
            if (diff % 2) throw std::domain_error("negate_a: mixed parity of a-exponents");
            r.terms_[e] = ((diff / 2) % 2) ? Rational(-c) : c;
        }
        return r;
    }

    // Exact quotient by 1 - s*M with M = a^{ea2/2} q^{eq2/2}, or nothing.
    std::optional<LaurentAQ> divide_binomial(int ea2, int eq2, int s = 1) const {
        if (ea2 == 0 && eq2 == 0) throw std::invalid_argument("divide_binomial: constant divisor");
        if (terms_.empty()) return LaurentAQ();
        if (ea2 < 0 || (ea2 == 0 && eq2 < 0)) {
            // 1 - sM = -sM (1 - s M^{-1})
            auto g = divide_binomial(-ea2, -eq2, s);
            if (!g) return std::nullopt;
            return g->shifted(-ea2, -eq2).scaled(Rational(-s));
        }
        // Split the support into lines e0 + k*step and divide each line as a 1-D series.
        std::map<Exponent2, std::map<long, Rational>> lines;
        for (auto& [e, c] : terms_) {
            long k = ea2 > 0 ? floor_div(e.first, ea2) : floor_div(e.second, eq2);
            Exponent2 base{static_cast<int>(e.first - k * ea2), static_cast<int>(e.second - k * eq2)};
            lines[base][k] = c;
        }
        LaurentAQ g;
        for (auto& [base, line] : lines) {
            const long lo = line.begin()->first, hi = line.rbegin()->first;
            if (lo == hi) return std::nullopt;
            Rational prev = 0;
            for (long k = lo; k < hi; ++k) {
                auto it = line.find(k);
                Rational cur = (it == line.end() ? Rational(0) : it->second) + s * prev;
                if (cur != 0)
                    g.terms_[{static_cast<int>(base.first + k * ea2), static_cast<int>(base.second + k * eq2)}] = cur;
                prev = cur;
            }
            if (line.at(hi) != -s * prev) return std::nullopt;
        }
        return g;
    }

    std::optional<LaurentAQ> divide_one_minus_q(int i) const { return divide_binomial(0, 2 * i); }

    // value at a = a0, q = q0; half-integer powers need rational square roots
    Rational eval(const Rational& a0, const Rational& q0) const {
        Rational total = 0;
        for (auto& [e, c] : terms_) total += c * half_power(a0, e.first) * half_power(q0, e.second);
        return total;
    }

    static Rational half_power(const Rational& x, int e2) {
        if (e2 % 2 == 0) return rational_pow(x, e2 / 2);
        if (x < 0) throw std::domain_error("half-integer power of a negative number");
        Integer n = x.get_num(), d = x.get_den(), rn, rd;
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            throw std::domain_error("half-integer power is irrational");
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return rational_pow(make_rational(rn, rd), e2);
    }

    std::string str() const;

private:
    Terms terms_;
};

inline std::string exponent_str(int e2) {
    if (e2 % 2 == 0) return std::to_string(e2 / 2);
    return "(" + std::to_string(e2) + "/2)";
}

inline std::string LaurentAQ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        bool has_var = e.first != 0 || e.second != 0;
        if (!unit || !has_var) os << mag.get_str();
        bool need_star = !unit;
        auto var = [&](const char* name, int e2) {
            if (e2 == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e2 != 2) os << "^" << exponent_str(e2);
            need_star = true;
        };
        var("a", e.first);
        var("q", e.second);
    }
    return os.str();
}

// The unique (ea2, eq2) with f = a^{ea2/2} q^{eq2/2} g, if any.
inline std::optional<Exponent2> equal_up_to_monomial(const LaurentAQ& f, const LaurentAQ& g) {
    if (f.is_zero() || g.is_zero()) {
        if (f.is_zero() && g.is_zero()) return Exponent2{0, 0};
        return std::nullopt;
    }
    if (f.term_count() != g.term_count()) return std::nullopt;
    const Exponent2 ef = f.terms().begin()->first, eg = g.terms().begin()->first;
    Exponent2 shift{ef.first - eg.first, ef.second - eg.second};
    if (g.shifted(shift.first, shift.second) == f) return shift;
    return std::nullopt;
}

struct PositivityReport {
    bool ok = true;
    std::optional<Exponent2> first_violation;
    explicit operator bool() const { return ok; }
};

inline PositivityReport nonneg_coeffs(const LaurentAQ& f) {
    PositivityReport r;
    for (auto& [e, c] : f.terms())
        if (c < 0) {
            r.ok = false;
            r.first_violation = e;
            break;
        }
    return r;
}

// numerator / prod (1 - q^i)
class RationalAQ {
public:
    RationalAQ() = default;
    RationalAQ(const LaurentAQ& num) : num_(num) {} // NOLINT
    RationalAQ(const Rational& c) : num_(c) {}      // NOLINT
    RationalAQ(int c) : num_(c) {}                  // NOLINT
    RationalAQ(LaurentAQ num, std::vector<int> qdenom) : num_(std::move(num)), den_(std::move(qdenom)) {
        for (int i : den_)
            if (i <= 0) throw std::invalid_argument("qdenom factors must be positive");
        std::sort(den_.begin(), den_.end());
        normalize();
    }

    const LaurentAQ& numerator() const { return num_; }
    const std::vector<int>& qdenom() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    static LaurentAQ denominator_poly(const std::vector<int>& den) {
        LaurentAQ d(1);
        for (int i : den) d *= LaurentAQ::one_minus_q(i);
        return d;
    }

    // Cancels (1-q^i) factors that divide the numerator, largest first.
    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::vector<int> keep;
        for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
            if (auto g = num_.divide_one_minus_q(*it)) {
                num_ = std::move(*g);
            } else {
                keep.push_back(*it);
            }
        }
        std::sort(keep.begin(), keep.end());
        den_ = std::move(keep);
    }

    friend RationalAQ operator+(const RationalAQ& x, const RationalAQ& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        std::vector<int> common, rest_x, rest_y;
        merge_max(x.den_, y.den_, common, rest_x, rest_y);
        RationalAQ r;
        r.num_ = x.num_ * denominator_poly(rest_x) + y.num_ * denominator_poly(rest_y);
        r.den_ = std::move(common);
        r.normalize();
        return r;
    }
    RationalAQ operator-() const {
        RationalAQ r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RationalAQ operator-(const RationalAQ& x, const RationalAQ& y) { return x + (-y); }
    RationalAQ& operator+=(const RationalAQ& o) { return *this = *this + o; }
    RationalAQ& operator-=(const RationalAQ& o) { return *this = *this - o; }

    friend RationalAQ operator*(const RationalAQ& x, const RationalAQ& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<int> den(x.den_);
        den.insert(den.end(), y.den_.begin(), y.den_.end());
        return RationalAQ(x.num_ * y.num_, std::move(den));
    }
    RationalAQ& operator*=(const RationalAQ& o) { return *this = *this * o; }

    RationalAQ scaled(const Rational& s) const {
        RationalAQ r(*this);
        r.num_ = r.num_.scaled(s);
        if (s == 0) r.den_.clear();
        return r;
    }
    RationalAQ shifted(int ea2, int eq2) const {
        RationalAQ r(*this);
        r.num_ = r.num_.shifted(ea2, eq2);
        return r;
    }
    RationalAQ divided_by_one_minus_q(int i) const {
        std::vector<int> den(den_);
        den.push_back(i);
        return RationalAQ(num_, std::move(den));
    }
    RationalAQ times_one_minus_q(int i) const {
        std::vector<int> den(den_);
        auto it = std::find(den.begin(), den.end(), i);
        if (it != den.end()) {
            den.erase(it);
            RationalAQ r;
            r.num_ = num_;
            r.den_ = std::move(den);
            return r;
        }
        return RationalAQ(num_ * LaurentAQ::one_minus_q(i), den_);
    }
    // Exact division of the numerator by 1 - s a^{ea2/2} q^{eq2/2}; throws if it does not divide.
    RationalAQ divided_by_binomial(int ea2, int eq2, int s = 1) const {
        auto g = num_.divide_binomial(ea2, eq2, s);
        if (!g) throw NotPolynomialError("numerator not divisible by requested binomial");
        RationalAQ r;
        r.num_ = std::move(*g);
        r.den_ = den_;
        return r;
    }

    bool operator==(const RationalAQ& o) const {
        std::vector<int> common, rest_x, rest_y;
        merge_max(den_, o.den_, common, rest_x, rest_y);
        return num_ * denominator_poly(rest_x) == o.num_ * denominator_poly(rest_y);
    }

    RationalAQ specialize_a(int N) const { return RationalAQ(num_.specialize_a(N), den_); }

    // q -> q^{-1}; 1/(1-q^{-i}) = -q^i/(1-q^i)
    RationalAQ invert_q() const {
        LaurentAQ num = num_.invert_q();
        int shift = 0;
        for (int i : den_) shift += 2 * i;
        num = num.shifted(0, shift);
        if (den_.size() % 2) num = -num;
        return RationalAQ(std::move(num), den_);
    }

    RationalAQ negate_a() const { return RationalAQ(num_.negate_a(), den_); }

    // Laurent polynomial if every denominator factor cancels.
    std::optional<LaurentAQ> as_laurent() const {
        LaurentAQ n = num_;
        for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
            auto g = n.divide_one_minus_q(*it);
            if (!g) return std::nullopt;
            n = std::move(*g);
        }
        return n;
    }

    // Series in q through q^{trunc} (inclusive, integer or half-integer exponents).
    LaurentAQ expand(int trunc = 30) const {
        const int top = 2 * trunc;
        std::map<int, std::map<int, Rational>> slices;  // ea -> eq -> c
        for (auto& [e, c] : num_.terms())
            if (e.second <= top) slices[e.first][e.second] = c;
        LaurentAQ out;
        for (auto& [ea, row] : slices) {
            const int lo = row.begin()->first;
            std::vector<Rational> v(top - lo + 1);
            for (auto& [eq, c] : row) v[eq - lo] = c;
            for (int i : den_) {
                const int step = 2 * i;
                for (int k = step; k < static_cast<int>(v.size()); ++k)
                    if (v[k - step] != 0) v[k] += v[k - step];
            }
            for (int k = 0; k < static_cast<int>(v.size()); ++k)
                if (v[k] != 0) out.add_term(ea, lo + k, v[k]);
        }
        return out;
    }

    Rational eval_at(const Rational& a0, const Rational& q0) const {
        LaurentAQ n = num_;
        for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
            const int i = *it;
            if (rational_pow(q0, i) != 1) continue;
            auto g = n.divide_one_minus_q(i);
            if (!g) throw PoleError("pole: factor (1-q^" + std::to_string(i) + ") vanishes at q=" + q0.get_str());
            n = std::move(*g);
        }
        Rational den = 1;
        for (int i : den_)
            if (rational_pow(q0, i) != 1) den *= 1 - rational_pow(q0, i);
        return n.eval(a0, q0) / den;
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        std::string factors;
        std::map<int, int> mult;
        for (int i : den_) ++mult[i];
        for (auto [i, k] : mult) {
            if (!factors.empty()) factors += "*";
            factors += (i == 1) ? "(1 - q)" : "(1 - q^" + std::to_string(i) + ")";
            if (k > 1) factors += "^" + std::to_string(k);
        }
        if (mult.size() > 1 || mult.begin()->second > 1) factors = "(" + factors + ")";
        return "(" + num_.str() + ")/" + factors;
    }

private:
    static void merge_max(const std::vector<int>& x, const std::vector<int>& y, std::vector<int>& common,
                          std::vector<int>& rest_x, std::vector<int>& rest_y) {
        // x, y sorted; common = multiset union (max multiplicity)
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i] < y[j])) {
                common.push_back(x[i]);
                rest_y.push_back(x[i]);
                ++i;
            } else if (i == x.size() || y[j] < x[i]) {
                common.push_back(y[j]);
                rest_x.push_back(y[j]);
                ++j;
            } else {
                common.push_back(x[i]);
                ++i;
                ++j;
            }
        }
    }

    LaurentAQ num_;
    std::vector<int> den_;
};

// Sum over one common denominator, normalized once; order of terms does not affect the result.
inline RationalAQ sum_rational(const std::vector<RationalAQ>& parts) {
    std::map<int, int> common;
    for (auto& f : parts) {
        if (f.is_zero()) continue;
        std::map<int, int> mult;
        for (int i : f.qdenom()) ++mult[i];
        for (auto [i, k] : mult) common[i] = std::max(common[i], k);
    }
    LaurentAQ num;
    for (auto& f : parts) {
        if (f.is_zero()) continue;
        std::map<int, int> missing(common);
        for (int i : f.qdenom()) --missing[i];
        LaurentAQ t = f.numerator();
        for (auto [i, k] : missing)
            for (int j = 0; j < k; ++j) t *= LaurentAQ::one_minus_q(i);
        num += t;
    }
    std::vector<int> den;
    for (auto [i, k] : common) den.insert(den.end(), k, i);
    return RationalAQ(std::move(num), std::move(den));
}

inline std::ostream& operator<<(std::ostream& os, const LaurentAQ& f) { return os << f.str(); }
inline std::ostream& operator<<(std::ostream& os, const RationalAQ& f) { return os << f.str(); }

}  // namespace rcalab
