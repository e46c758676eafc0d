#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; residual description on failure
    long millis = 0;
};

// Structured pass/fail result of a verification run.
struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckItem> items;

    void param(const std::string& key, const std::string& value) { params.push_back({key, value}); }

    void add(std::string name, bool pass, std::string witness = "", long millis = 0) {
        items.push_back({std::move(name), pass, std::move(witness), millis});
    }

    void merge(const CheckReport& other) {
        for (const auto& item : other.items) items.push_back(item);
    }

    bool all_pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }

    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& item : items)
            if (!item.pass) ++n;
        return n;
    }

    std::string text() const;
    std::string json(bool stable) const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qloop
