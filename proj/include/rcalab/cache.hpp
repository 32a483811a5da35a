#pragma once

// JSON-lines coefficient cache. Line 1 is a version header; every further line is
// {"family","key","value","hash"} with hash = SHA-256 over family, key and value.
// Appends take an advisory lock, so concurrent processes can share one file.

#include "json.hpp"
#include "rcalab/store_hook.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace rcalab {

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

class JsonlCache : public CoefficientStore {
public:
    static constexpr int kSchemaVersion = 1;

    struct Stats {
        std::size_t loaded = 0, corrupt = 0, hits = 0, misses = 0, writes = 0;
        bool stale_header = false, readable = true, writable = true;
    };

    explicit JsonlCache(std::string path, std::ostream* warnings = &std::cerr)
        : path_(std::move(path)), warn_(warnings) {
        read_file();
    }

    // RCALAB_CACHE overrides the given default.
    static std::string resolve_path(const std::string& fallback) {
        const char* env = std::getenv("RCALAB_CACHE");
        return env && *env ? std::string(env) : fallback;
    }

    static std::string record_hash(const std::string& family, const std::string& key, const std::string& value) {
        return sha256_hex(family + '\n' + key + '\n' + value);
    }

    static std::string header_line() {
        return nlohmann::json{{"rcalab_cache", kSchemaVersion}}.dump();
    }

    std::optional<std::string> load(Family family, const std::string& key) override {
        std::lock_guard lock(mu_);
        auto it = records_.find({family_tag(family), key});
        if (it == records_.end()) {
            ++stats_.misses;
            return std::nullopt;
        }
        ++stats_.hits;
        return it->second;
    }

    void save(Family family, const std::string& key, const std::string& value) override {
        std::lock_guard lock(mu_);
        auto [it, fresh] = records_.try_emplace({family_tag(family), key}, value);
        if (!fresh && it->second == value) return;
        it->second = value;
        if (!stats_.writable) return;
        nlohmann::json rec{{"family", family_tag(family)}, {"key", key}, {"value", value},
                           {"hash", record_hash(family_tag(family), key, value)}};
        append(rec.dump());
    }

    Stats stats() const {
        std::lock_guard lock(mu_);
        return stats_;
    }
    const std::string& path() const { return path_; }

private:
    void warn(const std::string& msg) {
        if (warn_) *warn_ << "rcalab: cache " << path_ << ": " << msg << "\n";
    }

    void read_file() {
        struct stat st{};
        if (::stat(path_.c_str(), &st) != 0) return;  // cold start; created on first save
        if (!S_ISREG(st.st_mode)) {
            warn("not a regular file, running without cache");
            stats_.readable = stats_.writable = false;
            return;
        }
        std::ifstream in(path_);
        if (!in) {
            warn("unreadable, running without cache");
            stats_.readable = stats_.writable = false;
            return;
        }
        std::string line;
        if (!std::getline(in, line)) return;
        bool header_ok = false;
        try {
            auto h = nlohmann::json::parse(line);
            header_ok = h.is_object() && h.value("rcalab_cache", -1) == kSchemaVersion;
        } catch (const nlohmann::json::exception&) {
        }
        if (!header_ok) {
            warn("stale or unknown schema version, ignoring its records");
            stats_.stale_header = true;
            return;
        }
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto r = nlohmann::json::parse(line);
                const std::string fam = r.at("family"), key = r.at("key"), value = r.at("value"), hash = r.at("hash");
                if (hash != record_hash(fam, key, value)) {
                    ++stats_.corrupt;
                    continue;
                }
                records_[{fam, key}] = value;
                ++stats_.loaded;
            } catch (const nlohmann::json::exception&) {
                ++stats_.corrupt;
            }
        }
        if (stats_.corrupt) warn(std::to_string(stats_.corrupt) + " corrupt record(s) skipped; they will be recomputed");
    }

    void append(const std::string& line) {
        int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd < 0) {
            warn("cannot open for writing, further results stay in memory");
            stats_.writable = false;
            return;
        }
        ::flock(fd, LOCK_EX);
        struct stat st{};
        ::fstat(fd, &st);
        std::string out;
        if (stats_.stale_header) {
            if (::ftruncate(fd, 0) == 0) st.st_size = 0;
            stats_.stale_header = false;
        }
        if (st.st_size == 0) out = header_line() + "\n";
        out += line + "\n";
        const char* p = out.data();
        std::size_t left = out.size();
        while (left > 0) {
            ssize_t w = ::write(fd, p, left);
            if (w <= 0) {
                warn("write failed, further results stay in memory");
                stats_.writable = false;
                break;
            }
            p += w;
            left -= static_cast<std::size_t>(w);
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
        if (stats_.writable) ++stats_.writes;
    }

    std::string path_;
    std::ostream* warn_;
    mutable std::mutex mu_;
    std::map<std::pair<std::string, std::string>, std::string> records_;
    Stats stats_;
};

}  // namespace rcalab
