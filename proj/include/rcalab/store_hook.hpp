#pragma once

// Optional persistent backing for the expensive coefficient families.
// The library only sees this interface; cache.hpp provides the JSON-lines file.

#include <atomic>
#include <optional>
#include <string>

namespace rcalab {

enum class Family { LR, CCOEFF, KF, MNCHAR };

inline const char* family_tag(Family f) {
    switch (f) {
        case Family::LR: return "LR";
        case Family::CCOEFF: return "CCOEFF";
        case Family::KF: return "KF";
        case Family::MNCHAR: return "MNCHAR";
    }
    return "?";
}

class CoefficientStore {
public:
    virtual ~CoefficientStore() = default;
    virtual std::optional<std::string> load(Family family, const std::string& key) = 0;
    virtual void save(Family family, const std::string& key, const std::string& value) = 0;
};

inline std::atomic<CoefficientStore*>& active_store_slot() {
    static std::atomic<CoefficientStore*> slot{nullptr};
    return slot;
}

inline CoefficientStore* active_store() { return active_store_slot().load(std::memory_order_acquire); }

// RAII installer; the previous store is restored on scope exit.
class ScopedStore {
public:
    explicit ScopedStore(CoefficientStore* s) : prev_(active_store_slot().exchange(s)) {}
    ~ScopedStore() { active_store_slot().store(prev_); }
    ScopedStore(const ScopedStore&) = delete;
    ScopedStore& operator=(const ScopedStore&) = delete;

private:
    CoefficientStore* prev_;
};

}  // namespace rcalab
