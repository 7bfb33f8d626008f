// Per-axiom verification results. A failed check always carries the first
// counterexample in lexicographic basis order, so reports are deterministic.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace psmash {

struct Counterexample {
    std::vector<size_t> indices;
    std::string lhs;
    std::string rhs;
};

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string name;
    std::string statement; // e.g. "Def 2.1 (2)", "Lemma 3.12 (ii)"
    CheckStatus status = CheckStatus::pass;
    std::optional<Counterexample> counterexample;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void add_pass(std::string name, std::string statement) {
        checks.push_back({std::move(name), std::move(statement), CheckStatus::pass, std::nullopt});
    }
    void add_fail(std::string name, std::string statement, Counterexample ce) {
        checks.push_back(
            {std::move(name), std::move(statement), CheckStatus::fail, std::move(ce)});
    }
    void add_skip(std::string name, std::string statement) {
        checks.push_back({std::move(name), std::move(statement), CheckStatus::skipped, std::nullopt});
    }
    void note(std::string n) { notes.push_back(std::move(n)); }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks) checks.push_back(c);
        for (const auto& n : other.notes) notes.push_back(n);
    }

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool passed(const std::string& name) const {
        const CheckResult* c = find(name);
        return c && c->status == CheckStatus::pass;
    }
};

} // namespace psmash
