#pragma once

// Singular polynomials, Dunkl operators, the Koszul-BGG complex K_{m,n} on the
// singular copy V of h in degree m, and the symmetrized complex.

#include "rcalab/cherednik.hpp"
#include "rcalab/multipoly.hpp"
#include "rcalab/parallel.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace rcalab {

// Coef_{m+1} prod_i (1 - z x_i)^{m/n}, via k g_k = -c sum_{j=1}^k p_j g_{k-j}.
inline MultiPoly singular_potential(int m, int n) {
    if (m < 1 || n < 2) throw std::invalid_argument("singular_potential: need m >= 1, n >= 2");
    const Rational c = make_rational(m, n);
    std::vector<MultiPoly> p(m + 2, MultiPoly(n));
    for (int j = 1; j <= m + 1; ++j)
        for (int i = 0; i < n; ++i) {
            Exps e(n, 0);
            e[i] = j;
            p[j].add_term(e, 1);
        }
    std::vector<MultiPoly> g{MultiPoly::constant(n, 1)};
    for (int k = 1; k <= m + 1; ++k) {
        MultiPoly s(n);
        for (int j = 1; j <= k; ++j) s += p[j] * g[k - j];
        g.push_back(s.scaled(-c / k));
    }
    return g[m + 1];
}

// f_i = d F / d x_i in x_1..x_n
inline std::vector<MultiPoly> singular_polys(int m, int n) {
    MultiPoly F = singular_potential(m, n);
    std::vector<MultiPoly> f;
    for (int i = 0; i < n; ++i) f.push_back(F.derivative(i));
    return f;
}

// D_i f = d_i f - c sum_{j != i} (f - s_ij f)/(x_i - x_j), variables indexed from 0
inline MultiPoly dunkl_apply(const Rational& c, int i, const MultiPoly& f, int n) {
    if (f.nvars() != n || i < 0 || i >= n) throw std::invalid_argument("dunkl_apply: index or arity mismatch");
    MultiPoly r = f.derivative(i);
    for (int j = 0; j < n; ++j)
        if (j != i) r -= f.divided_difference(i, j).scaled(c);
    return r;
}

// The same operator projected to h: D_i - (1/n) sum_k D_k.
inline MultiPoly dunkl_apply_reflection(const Rational& c, int i, const MultiPoly& f, int n) {
    MultiPoly avg(n);
    for (int k = 0; k < n; ++k) avg += dunkl_apply(c, k, f, n);
    return dunkl_apply(c, i, f, n) - avg.scaled(make_rational(1, n));
}

// D_i f_j restricted to sum x = 0 vanishes for all i, j (both operator variants).
inline bool singularity_check(int m, int n) {
    const Rational c = make_rational(m, n);
    auto f = singular_polys(m, n);
    for (int i = 0; i < n; ++i)
        for (auto& fj : f) {
            if (!dunkl_apply(c, i, fj, n).eliminate_last().is_zero()) return false;
            if (!dunkl_apply_reflection(c, i, fj, n).eliminate_last().is_zero()) return false;
        }
    return true;
}

// Representative permutation of cycle type rho: consecutive cycles.
inline std::vector<int> class_representative(const Partition& rho) {
    std::vector<int> perm;
    int start = 0;
    for (int len : rho.parts()) {
        for (int j = 0; j < len; ++j) perm.push_back(start + (j + 1) % len);
        start += len;
    }
    return perm;
}

inline std::vector<int> transposition(int n, int i, int j) {
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return perm;
}

struct KoszulDegreePiece {
    int i = 0;  // target homological degree
    int j = 0;  // target polynomial degree; the source is M(wedge^{i+1} V)_{j-m}
    Mat matrix;
};

// K^i_t = C[h]_{t - i m} (x) wedge^i V, coordinates y_1..y_{n-1} after x_n = -sum y,
// V spanned by the restricted f_1..f_{n-1} (f_n = -sum f_j on h).
class KoszulComplex {
public:
    KoszulComplex(int m, int n) : m_(m), n_(n), k_(n - 1) {
        if (m < 1 || n < 2) throw std::invalid_argument("koszul: need m >= 1, n >= 2");
        auto full = singular_polys(m, n);
        MultiPoly total(k_);
        for (auto& f : full) {
            restricted_.push_back(f.eliminate_last());
            total += restricted_.back();
        }
        sum_vanishes_ = total.is_zero();
        // gradient of F restricted to h; equals the restricted f_i when their sum vanishes
        for (int i = 0; i < k_; ++i) f_.push_back(restricted_[i] - total.scaled(make_rational(1, n)));
        for (int s = 0; s < (1 << k_); ++s) subsets_[__builtin_popcount(s)].push_back(s);
    }

    int m() const { return m_; }
    int n() const { return n_; }
    bool singular_sum_vanishes() const { return sum_vanishes_; }
    const std::vector<MultiPoly>& generators() const { return f_; }

    int poly_degree(int i, int t) const { return t - i * m_; }

    int dim(int i, int t) const {
        if (i < 0 || i > k_ || poly_degree(i, t) < 0) return 0;
        return static_cast<int>(monos(poly_degree(i, t)).size() * subsets_.at(i).size());
    }

    // d: K^i_t -> K^{i-1}_t as a dim(i-1,t) x dim(i,t) matrix
    Mat differential(int i, int t) const {
        const int rows = dim(i - 1, t), cols = dim(i, t);
        Mat D(rows, Vec(cols));
        if (rows == 0 || cols == 0) return D;
        const auto& src = monos(poly_degree(i, t));
        const auto& dst_index = mono_index(poly_degree(i - 1, t));
        const auto& dst_subsets = subsets_.at(i - 1);
        const int nsub = static_cast<int>(dst_subsets.size());
        for (std::size_t a = 0; a < src.size(); ++a)
            for (std::size_t b = 0; b < subsets_.at(i).size(); ++b) {
                const int col = static_cast<int>(a * subsets_.at(i).size() + b);
                const int S = subsets_.at(i)[b];
                int r = 0;
                for (int v = 0; v < k_; ++v) {
                    if (!(S >> v & 1)) continue;
                    const int T = S & ~(1 << v);
                    const int tpos = subset_pos(i - 1, T);
                    const Rational sign = r % 2 ? -1 : 1;
                    MultiPoly prod = MultiPoly::monomial(src[a]) * f_[v];
                    for (auto& [e, c] : prod.terms()) D[dst_index.at(e) * nsub + tpos][col] += sign * c;
                    ++r;
                }
            }
        return D;
    }

    KoszulDegreePiece piece(int i, int j) const {
        return {i, j, differential(i + 1, j + i * m_)};
    }

    // sigma acting on K^i_t: x_a -> x_{sigma(a)}, f_a -> f_{sigma(a)}
    class Action {
    public:
        Action(const KoszulComplex& K, const std::vector<int>& sigma, int i, int t) : nsub_(0) {
            const int k = K.k_;
            const int d = K.poly_degree(i, t);
            if (d < 0 || i > k) return;
            std::vector<MultiPoly> g;
            MultiPoly last(k);
            for (int a = 0; a < k; ++a) last -= MultiPoly::variable(k, a);
            for (int a = 0; a < k; ++a) g.push_back(sigma[a] == k ? last : MultiPoly::variable(k, sigma[a]));
            const auto& ms = K.monos(d);
            const auto& idx = K.mono_index(d);
            for (auto& e : ms) {
                std::vector<std::pair<int, Rational>> img;
                MultiPoly image = MultiPoly::monomial(e).substitute(g);
                for (auto& [e2, c] : image.terms()) img.emplace_back(idx.at(e2), c);
                mono_.push_back(std::move(img));
            }
            // matrix of sigma on V in the basis f_1..f_{n-1}
            Mat A(k, Vec(k));
            for (int a = 0; a < k; ++a) {
                if (sigma[a] == k)
                    for (int b = 0; b < k; ++b) A[b][a] = -1;
                else
                    A[sigma[a]][a] = 1;
            }
            const auto& subs = K.subsets_.at(i);
            nsub_ = static_cast<int>(subs.size());
            for (int S : subs) {
                std::vector<std::pair<int, Rational>> img;
                for (std::size_t tp = 0; tp < subs.size(); ++tp) {
                    Rational det = minor(A, subs[tp], S, k);
                    if (det != 0) img.emplace_back(static_cast<int>(tp), det);
                }
                wedge_.push_back(std::move(img));
            }
        }

        Vec apply(const Vec& v) const {
            Vec out(v.size());
            for (std::size_t idx = 0; idx < v.size(); ++idx) {
                if (v[idx] == 0) continue;
                const int a = static_cast<int>(idx) / nsub_, b = static_cast<int>(idx) % nsub_;
                for (auto& [a2, ca] : mono_[a])
                    for (auto& [b2, cb] : wedge_[b]) out[a2 * nsub_ + b2] += v[idx] * ca * cb;
            }
            return out;
        }

        Rational trace() const {
            Rational tm = 0, tw = 0;
            for (std::size_t a = 0; a < mono_.size(); ++a)
                for (auto& [a2, c] : mono_[a])
                    if (a2 == static_cast<int>(a)) tm += c;
            for (std::size_t b = 0; b < wedge_.size(); ++b)
                for (auto& [b2, c] : wedge_[b])
                    if (b2 == static_cast<int>(b)) tw += c;
            return tm * tw;
        }

    private:
        static Rational minor(const Mat& A, int rows, int cols, int k) {
            std::vector<int> r, c;
            for (int a = 0; a < k; ++a) {
                if (rows >> a & 1) r.push_back(a);
                if (cols >> a & 1) c.push_back(a);
            }
            Mat M(r.size(), Vec(c.size()));
            for (std::size_t x = 0; x < r.size(); ++x)
                for (std::size_t y = 0; y < c.size(); ++y) M[x][y] = A[r[x]][c[y]];
            return determinant(M);
        }
        static Rational determinant(Mat M) {
            const int s = static_cast<int>(M.size());
            Rational det = 1;
            for (int col = 0; col < s; ++col) {
                int p = col;
                while (p < s && M[p][col] == 0) ++p;
                if (p == s) return 0;
                if (p != col) {
                    std::swap(M[p], M[col]);
                    det = -det;
                }
                det *= M[col][col];
                for (int r = col + 1; r < s; ++r) {
                    if (M[r][col] == 0) continue;
                    Rational f = M[r][col] / M[col][col];
                    for (int c2 = col; c2 < s; ++c2) M[r][c2] -= f * M[col][c2];
                }
            }
            return det;
        }

        int nsub_;
        std::vector<std::vector<std::pair<int, Rational>>> mono_, wedge_;
    };

private:
    const std::vector<Exps>& monos(int d) const {
        auto it = monos_.find(d);
        if (it == monos_.end()) {
            it = monos_.emplace(d, monomials_of_degree(k_, d)).first;
            std::map<Exps, int> idx;
            for (std::size_t a = 0; a < it->second.size(); ++a) idx.emplace(it->second[a], static_cast<int>(a));
            index_.emplace(d, std::move(idx));
        }
        return it->second;
    }
    const std::map<Exps, int>& mono_index(int d) const {
        monos(d);
        return index_.at(d);
    }
    int subset_pos(int i, int S) const {
        const auto& v = subsets_.at(i);
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), S) - v.begin());
    }

    int m_, n_, k_;
    bool sum_vanishes_ = false;
    std::vector<MultiPoly> restricted_, f_;
    std::map<int, std::vector<int>> subsets_;
    // memoized bases; KoszulComplex is filled single-threaded by warm()
    mutable std::map<int, std::vector<Exps>> monos_;
    mutable std::map<int, std::map<Exps, int>> index_;

public:
    // Populate every basis that degrees t <= max_t touch, so concurrent readers never insert.
    void warm(int max_t) const {
        for (int d = 0; d <= max_t; ++d) monos(d);
    }
};

struct HomologyPiece {
    int i = 0, t = 0;  // homological degree, total q-degree above the lowest weight
    int dim = 0;
    std::map<Partition, Rational> trace;      // class -> tr(sigma | H_i)
    std::map<Partition, Rational> isotypic;   // irreducible -> multiplicity
    std::map<Partition, Rational> chain_trace;  // class -> tr(sigma | K^i_t)
};

struct KoszulHomology {
    int m = 0, n = 0, max_qdeg = 0;
    int shift2 = 0;  // doubled lowest weight (n-1)/2 - c kappa((n))
    std::vector<std::vector<HomologyPiece>> pieces;  // [i][t]

    const HomologyPiece& at(int i, int t) const { return pieces.at(i).at(t); }
    int total_dim(int i) const {
        int s = 0;
        for (auto& p : pieces.at(i)) s += p.dim;
        return s;
    }
};

inline std::map<Partition, Rational> isotypic_decomposition(int n, const std::map<Partition, Rational>& trace) {
    std::map<Partition, Rational> out;
    for (auto& lam : partitions_of(n)) {
        Rational s = 0;
        for (auto& [cls, tr] : trace) s += tr * Rational(class_size(cls) * mn_character(lam, cls));
        s /= Rational(factorial(n));
        if (s != 0) out[lam] = s;
    }
    return out;
}

// Graded S_n-characters of H_i(K_{m,n}) for total degrees t = 0..max_qdeg.
inline KoszulHomology koszul_homology(int m, int n, int max_qdeg) {
    if (n > 6) throw std::invalid_argument("koszul_homology: n <= 6");
    KoszulComplex K(m, n);
    K.warm(max_qdeg);
    const int top = n - 1;
    auto classes = partitions_of(n);

    std::vector<int> ts;
    for (int t = 0; t <= max_qdeg; ++t) ts.push_back(t);
    auto per_t = parallel_map(ts, [&](int t) {
        std::vector<HomologyPiece> col(top + 1);
        std::vector<Mat> D(top + 2);
        for (int i = 1; i <= top; ++i) D[i] = K.differential(i, t);
        for (int i = 0; i <= top; ++i) {
            HomologyPiece& h = col[i];
            h.i = i;
            h.t = t;
            const int dim = K.dim(i, t);
            std::vector<Vec> ker;
            if (i == 0 || K.dim(i - 1, t) == 0) {
                for (int a = 0; a < dim; ++a) {
                    Vec v(dim);
                    v[a] = 1;
                    ker.push_back(std::move(v));
                }
            } else {
                ker = nullspace(D[i], dim);
            }
            std::vector<Vec> img;
            if (i < top && K.dim(i + 1, t) > 0 && dim > 0) {
                const Mat& E = D[i + 1];
                for (int b = 0; b < K.dim(i + 1, t); ++b) {
                    Vec v(dim);
                    for (int a = 0; a < dim; ++a) v[a] = E[a][b];
                    img.push_back(std::move(v));
                }
            }
            Subspace kers = Subspace::span(std::move(ker)), ims = Subspace::span(std::move(img));
            h.dim = kers.dim() - ims.dim();
            for (auto& cls : classes) {
                KoszulComplex::Action act(K, class_representative(cls), i, t);
                auto op = [&](const Vec& v) { return act.apply(v); };
                h.trace[cls] = dim ? kers.trace(op) - ims.trace(op) : Rational(0);
                h.chain_trace[cls] = dim ? act.trace() : Rational(0);
            }
            h.isotypic = isotypic_decomposition(n, h.trace);
        }
        return col;
    });

    KoszulHomology H;
    H.m = m;
    H.n = n;
    H.max_qdeg = max_qdeg;
    H.shift2 = lowest_weight2(CherednikParams::from_mn(m, n), Partition({n}));
    H.pieces.assign(top + 1, {});
    for (int t = 0; t <= max_qdeg; ++t)
        for (int i = 0; i <= top; ++i) H.pieces[i].push_back(per_t[t][i]);
    return H;
}

// d^2 = 0 on every assembled piece through total degree max_t.
inline bool koszul_d_squared_zero(int m, int n, int max_t) {
    KoszulComplex K(m, n);
    for (int t = 0; t <= max_t; ++t)
        for (int i = 2; i < n; ++i) {
            Mat A = K.differential(i - 1, t), B = K.differential(i, t);
            for (std::size_t r = 0; r < A.size(); ++r)
                for (int c = 0; c < K.dim(i, t); ++c) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < B.size(); ++k) s += A[r][k] * B[k][c];
                    if (s != 0) return false;
                }
        }
    return true;
}

// d commutes with the action of the transpositions (a, a+1).
inline bool koszul_equivariance_check(int m, int n, int max_t) {
    KoszulComplex K(m, n);
    for (int t = 0; t <= max_t; ++t)
        for (int i = 1; i < n; ++i) {
            const int dim = K.dim(i, t);
            if (dim == 0 || K.dim(i - 1, t) == 0) continue;
            Mat D = K.differential(i, t);
            for (int a = 0; a + 1 < n; ++a) {
                auto s = transposition(n, a, a + 1);
                KoszulComplex::Action src(K, s, i, t), dst(K, s, i - 1, t);
                for (int b = 0; b < dim; ++b) {
                    Vec e(dim);
                    e[b] = 1;
                    Vec se = src.apply(e);
                    Vec lhs(D.size()), col(D.size());
                    for (std::size_t r = 0; r < D.size(); ++r) {
                        col[r] = D[r][b];
                        for (int c = 0; c < dim; ++c) lhs[r] += D[r][c] * se[c];
                    }
                    if (dst.apply(col) != lhs) return false;
                }
            }
        }
    return true;
}

// Chain-level trace, Verma hook characters and homology agree in every (class, degree).
inline bool koszul_euler_check(const KoszulHomology& H, std::string* failure = nullptr) {
    CherednikParams p = CherednikParams::from_mn(H.m, H.n);
    for (auto& cls : partitions_of(H.n)) {
        LaurentAQ verma;
        for (int i = 0; i < H.n; ++i) {
            LaurentAQ v = verma_character(p, hook_partition(H.n, i), cls).expand(H.shift2 / 2 + H.max_qdeg + 1);
            verma += i % 2 ? v.scaled(-1) : v;
        }
        for (int t = 0; t <= H.max_qdeg; ++t) {
            Rational chain = 0, homol = 0;
            for (int i = 0; i < H.n; ++i) {
                const Rational sg = i % 2 ? -1 : 1;
                chain += sg * H.at(i, t).chain_trace.at(cls);
                homol += sg * H.at(i, t).trace.at(cls);
            }
            const Rational v = verma.coefficient(0, H.shift2 + 2 * t);
            if (chain != v || homol != v) {
                if (failure)
                    *failure = "class " + cls.str() + " t=" + std::to_string(t) + ": chain " + chain.get_str() +
                               ", homology " + homol.get_str() + ", verma " + v.get_str();
                return false;
            }
        }
    }
    return true;
}

// Coef_j[(1 + sum_{k=2}^n u_k z^k)^m - (1 + sum_{k=2}^m v_k z^k)^n], 2 <= j <= m+n-1,
// in variables u_2..u_n, v_2..v_m (in that order).
inline std::vector<MultiPoly> symmetrized_system(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("symmetrized_system: need m, n >= 2");
    const int nv = (n - 1) + (m - 1), top = m + n - 1;
    auto power_series = [&](int offset, int count, int exponent) {
        std::vector<MultiPoly> base(top + 1, MultiPoly(nv));
        base[0] = MultiPoly::constant(nv, 1);
        for (int k = 2; k < 2 + count && k <= top; ++k) base[k] = MultiPoly::variable(nv, offset + k - 2);
        std::vector<MultiPoly> acc(top + 1, MultiPoly(nv));
        acc[0] = MultiPoly::constant(nv, 1);
        for (int e = 0; e < exponent; ++e) {
            std::vector<MultiPoly> next(top + 1, MultiPoly(nv));
            for (int a = 0; a <= top; ++a)
                for (int b = 0; a + b <= top; ++b)
                    if (!acc[a].is_zero() && !base[b].is_zero()) next[a + b] += acc[a] * base[b];
            acc = std::move(next);
        }
        return acc;
    };
    auto U = power_series(0, n - 1, m), W = power_series(n - 1, m - 1, n);
    std::vector<MultiPoly> E;
    for (int j = 2; j <= top; ++j) E.push_back(U[j] - W[j]);
    return E;
}

inline std::vector<int> symmetrized_weights(int m, int n) {
    std::vector<int> w;
    for (int k = 2; k <= n; ++k) w.push_back(k);
    for (int k = 2; k <= m; ++k) w.push_back(k);
    return w;
}

// dim of (C[u, v] / (E_2..E_{m+n-1}))_t for t = 0..max_deg, weights deg u_k = deg v_k = k
inline std::vector<int> symmetrized_h0_hilbert(int m, int n, int max_deg) {
    auto E = symmetrized_system(m, n);
    auto w = symmetrized_weights(m, n);
    const int nv = static_cast<int>(w.size());
    std::vector<int> out;
    for (int t = 0; t <= max_deg; ++t) {
        auto basis = monomials_of_degree(nv, t, w);
        std::map<Exps, int> idx;
        for (std::size_t a = 0; a < basis.size(); ++a) idx.emplace(basis[a], static_cast<int>(a));
        Mat rows;
        for (std::size_t j = 0; j < E.size(); ++j) {
            const int deg = static_cast<int>(j) + 2;
            for (auto& e : monomials_of_degree(nv, t - deg, w)) {
                Vec v(basis.size());
                MultiPoly prod = MultiPoly::monomial(e) * E[j];
                for (auto& [e2, c] : prod.terms()) v[idx.at(e2)] += c;
                rows.push_back(std::move(v));
            }
        }
        out.push_back(static_cast<int>(basis.size()) - rank_of(std::move(rows)));
    }
    return out;
}

}  // namespace rcalab
