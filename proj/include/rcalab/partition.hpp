#pragma once

#include "rcalab/rational.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcalab {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts and drops zeros; for building partitions from unordered data.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    // "3,2,1"; "-" or "" is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        if (text.empty() || text == "-") return Partition();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view tok = text.substr(pos, comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("bad partition: " + std::string(text));
            parts.push_back(v);
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::string str() const {
        if (parts_.empty()) return "-";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition transpose() const {
        std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
        for (int r : parts_)
            for (int j = 0; j < r; ++j) ++t[j];
        return Partition(std::move(t));
    }

    // 0-based box (r, c).
    int hook(int r, int c) const {
        int below = 0;
        for (int i = r + 1; i < length() && parts_[i] > c; ++i) ++below;
        return parts_[r] - c - 1 + below + 1;
    }

    bool dominates(const Partition& o) const {
        int a = 0, b = 0;
        for (int i = 0; i < std::max(length(), o.length()); ++i) {
            a += (*this)[i];
            b += o[i];
            if (a < b) return false;
        }
        return true;
    }

    // n0 * this + other, part by part
    Partition scaled_plus(int n0, const Partition& other) const {
        std::vector<int> v(std::max(length(), other.length()));
        for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = n0 * (*this)[i] + other[i];
        return Partition(std::move(v));
    }

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.str() << ")"; }

// Partitions of n with largest part at most max_part, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
    if (max_part < 0 || max_part > n) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, max_part);
    return out;
}

// Partitions of n with at most rows parts.
inline std::vector<Partition> partitions_with_rows(int n, int rows) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.length() <= rows) out.push_back(p);
    return out;
}

// 1/2 sum_j (lambda_j - 2j + 1) lambda_j with j 1-based; integer-valued.
inline long kappa(const Partition& lam) {
    long twice = 0;
    for (int j = 0; j < lam.length(); ++j) twice += static_cast<long>(lam[j] - 2 * (j + 1) + 1) * lam[j];
    return twice / 2;
}

// n(lambda) = sum_i (i-1) lambda_i
inline long n_statistic(const Partition& lam) {
    long s = 0;
    for (int i = 0; i < lam.length(); ++i) s += static_cast<long>(i) * lam[i];
    return s;
}

inline Integer dimension(const Partition& lam) {
    Integer num = factorial(lam.size()), den = 1;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[r]; ++c) den *= lam.hook(r, c);
    return num / den;
}

// Size of the centralizer of a permutation of cycle type rho.
inline Integer z_rho(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    Integer z = 1;
    for (auto [k, mk] : mult) {
        Integer kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, mk);
        z *= kp * factorial(mk);
    }
    return z;
}

inline Integer class_size(const Partition& rho) {
    return factorial(rho.size()) / z_rho(rho);
}

// (n - i, 1^i)
inline Partition hook_partition(int n, int i) {
    std::vector<int> v{n - i};
    v.insert(v.end(), i, 1);
    return Partition(std::move(v));
}

inline std::vector<int> cycle_counts(const Partition& rho) {
    std::vector<int> k(rho.size() + 1, 0);
    for (int p : rho.parts()) ++k[p];
    return k;
}

}  // namespace rcalab
