#pragma once

/*
 * Suite reporting: named checks with pass/fail/exhausted status and JSON
 * or text rendering.  JSON output is byte-stable for a fixed spec and
 * seed, so elapsed times are reported as 0 there; the text rendering
 * carries the measured times.
 */

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace goldie {

enum class CheckStatus { Pass, Fail, Exhausted };

inline const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Exhausted: return "exhausted";
    }
    return "?";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    nlohmann::ordered_json witness;  // null unless the check has something to show
    long elapsed_ms = 0;
};

struct Report {
    std::string suite;
    std::string instance;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<Check> checks;

    /** Runs one named check; an escaped exception records a failure. */
    template <typename F>
    void run(const std::string& name, F&& body) {
        Check c;
        c.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.witness = nlohmann::ordered_json{{"error", e.what()}};
        }
        c.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - t0)
                                             .count());
        checks.push_back(std::move(c));
    }

    unsigned long count(CheckStatus s) const {
        unsigned long n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    /** 0 all pass, 1 any fail, 2 exhausted but no fail. */
    int exit_code() const {
        if (count(CheckStatus::Fail) > 0) return 1;
        if (count(CheckStatus::Exhausted) > 0) return 2;
        return 0;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["instance"] = instance;
        j["parameters"] = parameters;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["status"] = status_str(c.status);
            cj["witness"] = c.witness;
            cj["elapsed_ms"] = 0;  // kept constant so reports are reproducible
            j["checks"].push_back(std::move(cj));
        }
        j["summary"] = nlohmann::ordered_json{{"pass", count(CheckStatus::Pass)},
                                              {"fail", count(CheckStatus::Fail)},
                                              {"exhausted", count(CheckStatus::Exhausted)}};
        return j;
    }

    std::string to_text() const {
        std::string out = "suite: " + suite + "\ninstance: " + instance + "\n";
        for (const auto& c : checks) {
            out += "  [" + std::string(status_str(c.status)) + "] " + c.name + " (" +
                   std::to_string(c.elapsed_ms) + " ms)\n";
            if (!c.witness.is_null()) out += "      " + c.witness.dump() + "\n";
        }
        out += "summary: " + std::to_string(count(CheckStatus::Pass)) + " pass, " +
               std::to_string(count(CheckStatus::Fail)) + " fail, " +
               std::to_string(count(CheckStatus::Exhausted)) + " exhausted\n";
        return out;
    }
};

} // namespace goldie
