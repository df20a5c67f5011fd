#pragma once

#include <string>

#include "json.hpp"

namespace qmat {

/// Outcome of a verification; `residuals` holds whatever failed to vanish.
struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    nlohmann::json residuals = nlohmann::json::array();
    nlohmann::json info = nlohmann::json::object();

    void fail(nlohmann::json residual) {
        pass = false;
        residuals.push_back(std::move(residual));
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"check", check}, {"params", params}, {"pass", pass}, {"residuals", residuals}};
        if (!info.empty()) j["info"] = info;
        return j;
    }

    std::string to_text() const {
        std::string s = check + " " + params.dump() + ": " + (pass ? "pass" : "FAIL");
        for (auto& r : residuals) s += "\n  residual: " + (r.is_string() ? r.get<std::string>() : r.dump());
        for (auto& [k, v] : info.items()) s += "\n  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump());
        return s;
    }
};

}  // namespace qmat
