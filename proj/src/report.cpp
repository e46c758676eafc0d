#include "qloop/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qloop {

std::string CheckReport::text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
    for (const auto& item : items) {
        os << (item.pass ? "  [pass] " : "  [FAIL] ") << item.name;
        if (!item.pass && !item.witness.empty()) os << "  witness: " << item.witness;
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : std::to_string(fail_count()) + " check(s) failed")
       << " (" << items.size() << " total)\n";
    return os.str();
}

std::string CheckReport::json(bool stable) const {
    nlohmann::ordered_json out;
    out["suite"] = suite;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    out["params"] = p;
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        nlohmann::ordered_json c;
        c["name"] = item.name;
        c["status"] = item.pass ? "pass" : "fail";
        if (!item.witness.empty()) c["witness"] = item.witness;
        if (!stable) c["millis"] = item.millis;
        out["checks"].push_back(c);
    }
    return out.dump(2);
}

}  // namespace qloop
