#pragma once

#include "rcalab/characters.hpp"
#include "rcalab/laurent.hpp"
#include "rcalab/partition.hpp"
#include "rcalab/store_hook.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcalab {

enum class Basis { Schur, PowerSum };

class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFunc(Basis b = Basis::Schur) : basis_(b) {}
    SymFunc(Basis b, Terms terms) : basis_(b) {
        for (auto& [p, c] : terms)
            if (c != 0) terms_.emplace(p, c);
    }

    static SymFunc schur(const Partition& lam, const Rational& c = 1) { return SymFunc(Basis::Schur, {{lam, c}}); }
    static SymFunc power(const Partition& rho, const Rational& c = 1) { return SymFunc(Basis::PowerSum, {{rho, c}}); }
    static SymFunc one(Basis b = Basis::Schur) { return SymFunc(b, {{Partition(), Rational(1)}}); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Common degree, or nothing when mixed (the zero function has degree 0).
    std::optional<int> degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.size();
        for (auto& [p, c] : terms_)
            if (p.size() != d) return std::nullopt;
        return d;
    }

    void add(const Partition& p, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SymFunc to_power() const;
    SymFunc to_schur() const;
    SymFunc in(Basis b) const { return b == Basis::Schur ? to_schur() : to_power(); }

    SymFunc& operator+=(const SymFunc& o) {
        SymFunc other = o.in(basis_);
        for (auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) { return *this += o.scaled(-1); }
    friend SymFunc operator+(SymFunc x, const SymFunc& y) { return x += y; }
    friend SymFunc operator-(SymFunc x, const SymFunc& y) { return x -= y; }

    SymFunc scaled(const Rational& s) const {
        SymFunc r(basis_);
        if (s == 0) return r;
        for (auto& [p, c] : terms_) r.terms_.emplace(p, c * s);
        return r;
    }

    // Same function, compared across bases.
    bool operator==(const SymFunc& o) const {
        if (basis_ == o.basis_) return terms_ == o.terms_;
        return terms_ == o.in(basis_).terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        const char* sym = basis_ == Basis::Schur ? "s" : "p";
        bool first = true;
        for (auto& [p, c] : terms_) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Rational mag = abs(c);
            if (mag != 1) os << mag.get_str() << "*";
            os << sym << "[" << p.str() << "]";
        }
        return os.str();
    }

private:
    Basis basis_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

// p_rho = sum_lambda chi_lambda(rho) s_lambda;  s_lambda = sum_rho chi_lambda(rho)/z_rho p_rho
inline SymFunc SymFunc::to_power() const {
    if (basis_ == Basis::PowerSum) return *this;
    SymFunc r(Basis::PowerSum);
    for (auto& [lam, c] : terms_)
        for (auto& rho : partitions_of(lam.size()))
            if (long chi = mn_character(lam, rho)) r.add(rho, c * make_rational(Integer(chi), z_rho(rho)));
    return r;
}

inline SymFunc SymFunc::to_schur() const {
    if (basis_ == Basis::Schur) return *this;
    SymFunc r(Basis::Schur);
    for (auto& [rho, c] : terms_)
        for (auto& lam : partitions_of(rho.size()))
            if (long chi = mn_character(lam, rho)) r.add(lam, c * Rational(Integer(chi)));
    return r;
}

inline Partition concat_parts(const Partition& x, const Partition& y) {
    std::vector<int> v(x.parts());
    v.insert(v.end(), y.parts().begin(), y.parts().end());
    return Partition::from_unsorted(std::move(v));
}

// Product computed in the power-sum basis; the independent route for LR.
inline SymFunc multiply_via_power(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = f.to_power(), gp = g.to_power(), r(Basis::PowerSum);
    for (auto& [x, cx] : fp.terms())
        for (auto& [y, cy] : gp.terms()) r.add(concat_parts(x, y), cx * cy);
    return r.in(f.basis());
}

namespace detail {

// Littlewood-Richardson: add nu_k boxes labelled k as horizontal strips, keep lattice fillings.
class LrEnumerator {
public:
    LrEnumerator(const Partition& mu, const Partition& nu) : nu_(nu) {
        rows_.resize(mu.length() + nu.length());
        for (int r = 0; r < mu.length(); ++r) rows_[r].assign(mu[r], 0);
    }

    std::map<Partition, long> run() {
        place(1);
        return result_;
    }

private:
    void place(int label) {
        if (label > nu_.length()) {
            if (lattice()) {
                std::vector<int> shape;
                for (auto& r : rows_)
                    if (!r.empty()) shape.push_back(static_cast<int>(r.size()));
                ++result_[Partition(std::move(shape))];
            }
            return;
        }
        // snapshot of row lengths before this strip: horizontal strip condition
        std::vector<int> before(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) before[r] = static_cast<int>(rows_[r].size());
        strip(label, 0, nu_[label - 1], before);
    }

    void strip(int label, std::size_t row, int left, const std::vector<int>& before) {
        if (left == 0) {
            place(label + 1);
            return;
        }
        if (row >= rows_.size()) return;
        // row r may grow up to before[r-1] (strip lies below old shape's row above)
        int cap = row == 0 ? before[0] + left : before[row - 1];
        int room = std::min(cap - before[row], left);
        // a label k cannot sit above row k-1 (lattice shortcut)
        if (static_cast<int>(row) < label - 1) room = 0;
        for (int k = room; k >= 0; --k) {
            rows_[row].insert(rows_[row].end(), k, label);
            strip(label, row + 1, left - k, before);
            rows_[row].resize(rows_[row].size() - k);
        }
    }

    bool lattice() const {
        std::vector<int> count(nu_.length() + 2, 0);
        for (auto& r : rows_)
            for (auto it = r.rbegin(); it != r.rend(); ++it) {
                int v = *it;
                if (v == 0) continue;
                ++count[v];
                if (v > 1 && count[v] > count[v - 1]) return false;
            }
        return true;
    }

    Partition nu_;
    std::vector<std::vector<int>> rows_;
    std::map<Partition, long> result_;
};

}  // namespace detail

inline std::map<Partition, long> lr_product(const Partition& mu, const Partition& nu) {
    CoefficientStore* store = active_store();
    std::string key;
    if (store) {
        key = mu.str() + "|" + nu.str();
        if (auto hit = store->load(Family::LR, key)) {
            std::map<Partition, long> out;
            std::istringstream is(*hit);
            std::string tok;
            while (std::getline(is, tok, ';')) {
                auto colon = tok.find(':');
                out[Partition::parse(tok.substr(0, colon))] = std::stol(tok.substr(colon + 1));
            }
            return out;
        }
    }
    auto out = detail::LrEnumerator(mu, nu).run();
    if (store) {
        std::string v;
        for (auto& [lam, c] : out) v += lam.str() + ":" + std::to_string(c) + ";";
        store->save(Family::LR, key, v);
    }
    return out;
}

inline long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    auto prod = lr_product(mu, nu);
    auto it = prod.find(lam);
    return it == prod.end() ? 0 : it->second;
}

inline SymFunc schur_multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::Schur || g.basis() != Basis::Schur)
        throw std::invalid_argument("schur_multiply expects Schur-basis inputs");
    SymFunc r(Basis::Schur);
    for (auto& [x, cx] : f.terms())
        for (auto& [y, cy] : g.terms())
            for (auto& [lam, c] : lr_product(x, y)) r.add(lam, cx * cy * c);
#ifdef RCALAB_CHECK_LR
    if (!(r == multiply_via_power(f, g))) throw std::logic_error("LR product disagrees with power-sum product");
#endif
    return r;
}

inline SymFunc adams(int k, const SymFunc& f) {
    if (k < 1) throw std::invalid_argument("adams: k must be positive");
    SymFunc r(Basis::PowerSum);
    const SymFunc fp = f.to_power();
    for (auto& [rho, c] : fp.terms()) {
        std::vector<int> v(rho.parts());
        for (int& x : v) x *= k;
        r.add(Partition(std::move(v)), c);
    }
    return r.in(f.basis());
}

inline SymFunc omega(const SymFunc& f) {
    SymFunc r(f.basis());
    if (f.basis() == Basis::Schur) {
        for (auto& [lam, c] : f.terms()) r.add(lam.transpose(), c);
    } else {
        for (auto& [rho, c] : f.terms()) r.add(rho, (rho.size() - rho.length()) % 2 ? Rational(-c) : c);
    }
    return r;
}

namespace detail {

class CCoeffMemo {
public:
    std::optional<std::map<Partition, long>> find(const std::string& k) const {
        std::shared_lock lock(mu_);
        auto it = table_.find(k);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const std::string& k, const std::map<Partition, long>& v) {
        std::unique_lock lock(mu_);
        table_.emplace(k, v);
    }

private:
    mutable std::shared_mutex mu_;
    std::map<std::string, std::map<Partition, long>> table_;
};

inline CCoeffMemo& ccoeff_memo() {
    static CCoeffMemo memo;
    return memo;
}

inline std::string encode_int_map(const std::map<Partition, long>& m) {
    std::string v;
    for (auto& [lam, c] : m) v += lam.str() + ":" + std::to_string(c) + ";";
    return v;
}

inline std::map<Partition, long> decode_int_map(const std::string& s) {
    std::map<Partition, long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        out[Partition::parse(tok.substr(0, colon))] = std::stol(tok.substr(colon + 1));
    }
    return out;
}

}  // namespace detail

// Schur coefficients of Psi_{n0}(s_lambda) * s_{lambda'}.
inline std::map<Partition, long> c_coeffs(const Partition& lam, const Partition& lam_prime, int n0) {
    if (n0 < 1) throw std::invalid_argument("c_coeffs: n0 must be positive");
    const std::string key = lam.str() + "|" + lam_prime.str() + "|" + std::to_string(n0);
    if (auto hit = detail::ccoeff_memo().find(key)) return *hit;
    CoefficientStore* store = active_store();
    if (store)
        if (auto hit = store->load(Family::CCOEFF, key)) {
            auto v = detail::decode_int_map(*hit);
            detail::ccoeff_memo().insert(key, v);
            return v;
        }

    // coefficient of s_nu in Psi_{n0}(s_lambda) is sum_rho chi_lambda(rho)/z_rho chi_nu(n0 rho)
    std::map<Partition, Rational> psi;
    const int n = n0 * lam.size();
    std::vector<std::pair<Partition, Rational>> weights;
    for (auto& rho : partitions_of(lam.size()))
        if (long chi = mn_character(lam, rho)) {
            std::vector<int> v(rho.parts());
            for (int& x : v) x *= n0;
            weights.emplace_back(Partition(std::move(v)), make_rational(Integer(chi), z_rho(rho)));
        }
    for (auto& nu : partitions_of(n)) {
        Rational s = 0;
        for (auto& [rho, w] : weights) s += w * Rational(Integer(mn_character(nu, rho)));
        if (s != 0) psi[nu] = s;
    }
    std::map<Partition, long> out;
    if (lam_prime.empty()) {
        for (auto& [nu, c] : psi) {
            if (c.get_den() != 1) throw std::logic_error("c_coeffs: non-integral Adams coefficient");
            out[nu] = c.get_num().get_si();
        }
    } else {
        SymFunc acc(Basis::Schur);
        for (auto& [nu, c] : psi)
            for (auto& [lam2, k] : lr_product(nu, lam_prime)) acc.add(lam2, c * k);
        for (auto& [nu, c] : acc.terms()) out[nu] = c.get_num().get_si();
    }
    detail::ccoeff_memo().insert(key, out);
    if (store) store->save(Family::CCOEFF, key, detail::encode_int_map(out));
    return out;
}

// theta_{a,q}: p_i -> (1-a^i)/(1-q^i), via the power-sum expansion.
inline RationalAQ theta_spec(const SymFunc& f) {
    if (!f.degree()) throw std::invalid_argument("theta_spec: inhomogeneous input");
    // common denominator grouped by rho
    RationalAQ total;
    const SymFunc fp = f.to_power();
    for (auto& [rho, c] : fp.terms()) {
        LaurentAQ num(c);
        for (int k : rho.parts()) num *= LaurentAQ::binomial(2 * k, 0);
        total += RationalAQ(num, rho.parts());
    }
    return total;
}

// q^{n(lambda)} prod (1 - a q^{c(x)})/(1 - q^{h(x)}), c = column - row.
inline RationalAQ theta_schur(const Partition& lam) {
    LaurentAQ num = LaurentAQ::monomial(0, 2 * static_cast<int>(n_statistic(lam)));
    std::vector<int> den;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[r]; ++c) {
            num *= LaurentAQ::binomial(2, 2 * (c - r));
            den.push_back(lam.hook(r, c));
        }
    return RationalAQ(num, den);
}

// Polynomial in x_1..x_m whose coefficients are q-series (stored as q-only LaurentAQ).
using XSeries = std::map<std::vector<int>, LaurentAQ>;

inline XSeries power_sum_in_vars(int k, int m) {
    XSeries r;
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(m, 0);
        e[i] = k;
        r[e] = LaurentAQ(1);
    }
    return r;
}

inline LaurentAQ truncate_q(const LaurentAQ& f, int trunc) {
    LaurentAQ r;
    for (auto& [e, c] : f.terms())
        if (e.second <= 2 * trunc) r.add_term(e.first, e.second, c);
    return r;
}

inline XSeries xseries_multiply(const XSeries& f, const XSeries& g, int trunc) {
    XSeries r;
    for (auto& [ef, cf] : f)
        for (auto& [eg, cg] : g) {
            std::vector<int> e(ef.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            LaurentAQ prod = truncate_q(cf * cg, trunc);
            if (prod.is_zero()) continue;
            auto& slot = r[e];
            slot += prod;
            if (slot.is_zero()) r.erase(e);
        }
    return r;
}

// f(x_1..x_m, q x_1..q x_m, q^2 x_1, ...) through q^trunc.
inline XSeries phi_spec(const SymFunc& f, int num_vars, int trunc) {
    if (trunc < 0 || num_vars < 1) throw std::invalid_argument("phi_spec: bad arguments");
    XSeries total;
    const SymFunc fp = f.to_power();
    for (auto& [rho, c] : fp.terms()) {
        XSeries term;
        term[std::vector<int>(num_vars, 0)] = LaurentAQ(c);
        for (int k : rho.parts()) {
            XSeries pk = power_sum_in_vars(k, num_vars);
            LaurentAQ geo = RationalAQ(LaurentAQ(1), {k}).expand(trunc);
            for (auto& [e, s] : pk) s = geo;
            term = xseries_multiply(term, pk, trunc);
        }
        for (auto& [e, s] : term) {
            auto& slot = total[e];
            slot += s;
            if (slot.is_zero()) total.erase(e);
        }
    }
    return total;
}

namespace detail {

// Reading word (rows bottom to top, left to right) of every SSYT of shape mu and content w.
inline void ssyt_words(const Partition& mu, const Partition& w, std::vector<std::vector<int>>& words) {
    std::vector<std::vector<int>> rows(mu.length());
    std::function<void(int)> place = [&](int label) {
        if (label > w.length()) {
            for (int r = 0; r < mu.length(); ++r)
                if (static_cast<int>(rows[r].size()) != mu[r]) return;
            std::vector<int> word;
            for (int r = mu.length() - 1; r >= 0; --r) word.insert(word.end(), rows[r].begin(), rows[r].end());
            words.push_back(std::move(word));
            return;
        }
        std::vector<int> before(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) before[r] = static_cast<int>(rows[r].size());
        std::function<void(std::size_t, int)> strip = [&](std::size_t row, int left) {
            if (left == 0) {
                place(label + 1);
                return;
            }
            if (row >= rows.size()) return;
            int cap = row == 0 ? mu[0] : std::min(mu[static_cast<int>(row)], before[row - 1]);
            int room = std::min(cap - before[row], left);
            for (int k = std::max(room, 0); k >= 0; --k) {
                rows[row].insert(rows[row].end(), k, label);
                strip(row + 1, left - k);
                rows[row].resize(rows[row].size() - k);
            }
        };
        strip(0, w[label - 1]);
    };
    place(1);
}

// Lascoux-Schutzenberger charge of a word with partition content.
inline long charge(std::vector<int> word) {
    long total = 0;
    std::vector<bool> used(word.size(), false);
    std::size_t remaining = word.size();
    while (remaining) {
        int top = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (!used[i]) top = std::max(top, word[i]);
        // scan leftward cyclically from the right end
        long pos = static_cast<long>(word.size());
        long index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            long found = -1;
            bool wrapped = false;
            for (long step = 1; step <= static_cast<long>(word.size()); ++step) {
                long p = pos - step;
                if (p < 0) {
                    p += static_cast<long>(word.size());
                    wrapped = true;
                }
                if (!used[p] && word[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("charge: content is not a partition");
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[found] = true;
            --remaining;
            pos = found;
        }
    }
    return total;
}

}  // namespace detail

// K_{mu,w}(q) as a q-only Laurent polynomial.
inline LaurentAQ kostka_foulkes(const Partition& mu, const Partition& w) {
    if (mu.size() != w.size()) throw std::invalid_argument("kostka_foulkes: size mismatch");
    CoefficientStore* store = active_store();
    std::string key;
    if (store) {
        key = mu.str() + "|" + w.str();
        if (auto hit = store->load(Family::KF, key)) {
            LaurentAQ f;
            std::istringstream is(*hit);
            std::string tok;
            while (std::getline(is, tok, ';')) {
                if (tok.empty()) continue;
                auto colon = tok.find(':');
                f.add_term(0, 2 * std::stoi(tok.substr(0, colon)), parse_rational(tok.substr(colon + 1)));
            }
            return f;
        }
    }
    std::vector<std::vector<int>> words;
    detail::ssyt_words(mu, w, words);
    LaurentAQ f;
    for (auto& word : words) f.add_term(0, 2 * static_cast<int>(detail::charge(word)), 1);
    if (store) {
        std::string v;
        for (auto& [e, c] : f.terms()) v += std::to_string(e.second / 2) + ":" + c.get_str() + ";";
        store->save(Family::KF, key, v);
    }
    return f;
}

}  // namespace rcalab
