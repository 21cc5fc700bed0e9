#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "arlat/rational.hpp"

namespace arlat {

using json = nlohmann::json;

// One checked inequality: lhs <= rhs, slack = rhs - lhs.
struct BoundReport {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    bool holds = false;
    bool exact = false;  // true when decided by an exact rational comparison
    json inputs;

    static BoundReport make(std::string name, double lhs, double rhs, json inputs = {}) {
        BoundReport r;
        r.name = std::move(name);
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = rhs - lhs;
        r.holds = r.slack >= 0;
        r.inputs = std::move(inputs);
        return r;
    }

    // Decides lhs <= rhs by the exact comparison exact_lhs <= exact_rhs while
    // reporting the log-scale values.
    static BoundReport make_exact(std::string name, double lhs, double rhs,
                                  const mpq_class& exact_lhs, const mpq_class& exact_rhs,
                                  json inputs = {}) {
        BoundReport r = make(std::move(name), lhs, rhs, std::move(inputs));
        r.holds = exact_lhs <= exact_rhs;
        r.exact = true;
        return r;
    }

    json to_json() const {
        return json{{"name", name},   {"lhs", lhs},     {"rhs", rhs},
                    {"slack", slack}, {"holds", holds}, {"inputs", inputs}};
    }
};

}  // namespace arlat
