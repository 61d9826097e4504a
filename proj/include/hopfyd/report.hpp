/// @file report.hpp
/// @brief Pass/fail reporting for law and proposition checks.
///
/// Each checked law produces one CheckResult with a stable identifier and, on
/// failure, a human-readable witness (always the lexicographically smallest
/// failing basis tuple, since checks enumerate indices in lexicographic order
/// and stop at the first counterexample).

#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace hopfyd {

struct CheckResult {
    std::string id;       ///< stable law name, e.g. "pairing.product-vs-coproduct"
    bool pass = true;
    std::string witness;  ///< empty on pass; minimal counterexample otherwise

    static CheckResult ok(std::string id) { return {std::move(id), true, ""}; }
    static CheckResult fail(std::string id, std::string witness) {
        return {std::move(id), false, std::move(witness)};
    }
};

struct Report {
    std::string suite;
    std::vector<CheckResult> items;

    void add(CheckResult r) { items.push_back(std::move(r)); }
    void add(const std::string& id, bool pass, const std::string& witness = "") {
        items.push_back({id, pass, pass ? "" : witness});
    }
    void merge(const Report& other) {
        for (const auto& r : other.items) items.push_back(r);
    }
    /// Merge with every item id prefixed by "<prefix>.".
    void mergePrefixed(const std::string& prefix, const Report& other) {
        for (auto r : other.items) {
            r.id = prefix + "." + r.id;
            items.push_back(std::move(r));
        }
    }

    bool allPass() const {
        for (const auto& r : items)
            if (!r.pass) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& r : items) {
            os << (r.pass ? "PASS" : "FAIL") << " " << suite << "." << r.id;
            if (!r.pass && !r.witness.empty()) os << "  witness: " << r.witness;
            os << "\n";
        }
        return os.str();
    }
};

}  // namespace hopfyd
