#pragma once

#include "rcalab/partition.hpp"
#include "rcalab/store_hook.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rcalab {

namespace detail {

class CharacterMemo {
public:
    bool find(const std::string& key, long& out) const {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const std::string& key, long v) {
        std::unique_lock lock(mu_);
        table_.emplace(key, v);
    }
    std::size_t size() const {
        std::shared_lock lock(mu_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, long> table_;
};

inline CharacterMemo& character_memo() {
    static CharacterMemo memo;
    return memo;
}

inline std::string memo_key(const std::vector<int>& lam, const std::vector<int>& rho, std::size_t from) {
    std::string k;
    k.reserve(4 * (lam.size() + rho.size()));
    for (int v : lam) {
        k += std::to_string(v);
        k += ',';
    }
    k += '|';
    for (std::size_t i = from; i < rho.size(); ++i) {
        k += std::to_string(rho[i]);
        k += ',';
    }
    return k;
}

// Murnaghan-Nakayama on beta-sets; removes rim hooks of length rho[from] first.
inline long mn_rec(const std::vector<int>& lam, const std::vector<int>& rho, std::size_t from) {
    if (from == rho.size()) return lam.empty() ? 1 : 0;
    if (lam.size() == 1 && from + 1 == rho.size()) return 1;  // single row, single cycle
    std::string key = memo_key(lam, rho, from);
    long cached;
    if (character_memo().find(key, cached)) return cached;

    const int r = rho[from];
    const int len = static_cast<int>(lam.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);  // strictly decreasing

    long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb(beta);
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> mu(len);
        for (int j = 0; j < len; ++j) mu[j] = nb[j] - (len - 1 - j);
        while (!mu.empty() && mu.back() == 0) mu.pop_back();
        long sub = mn_rec(mu, rho, from + 1);
        total += (between % 2 ? -sub : sub);
    }
    character_memo().insert(key, total);
    return total;
}

}  // namespace detail

// chi_lambda at the class of cycle type cls.
inline long mn_character(const Partition& lam, const Partition& cls) {
    if (lam.size() != cls.size())
        throw std::invalid_argument("mn_character: |lambda| != |cls| (" + lam.str() + " vs " + cls.str() + ")");
    CoefficientStore* store = active_store();
    std::string key;
    if (store) {
        key = lam.str() + "|" + cls.str();
        if (auto hit = store->load(Family::MNCHAR, key)) return std::stol(*hit);
    }
    long v = detail::mn_rec(lam.parts(), cls.parts(), 0);
    if (store) store->save(Family::MNCHAR, key, std::to_string(v));
    return v;
}

}  // namespace rcalab
