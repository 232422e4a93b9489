#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fermconic {

/// One named check with outcome and optional note (witness, scaling, ...).
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string note = {}, double seconds = 0.0) {
        items.push_back(CheckItem{std::move(name), pass, std::move(note), seconds});
    }

    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["pass"] = all_pass();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& i : items) {
            nlohmann::json ij{{"name", i.name}, {"pass", i.pass}};
            if (!i.note.empty()) ij["note"] = i.note;
            if (i.seconds > 0) ij["seconds"] = i.seconds;
            arr.push_back(std::move(ij));
        }
        j["checks"] = std::move(arr);
        return j;
    }

    void print(std::ostream& os) const {
        os << "== " << suite << " ==\n";
        for (const auto& i : items) {
            os << (i.pass ? "  ok   " : "  FAIL ") << i.name;
            if (!i.note.empty()) os << "  [" << i.note << "]";
            os << "\n";
        }
    }
};

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace fermconic
