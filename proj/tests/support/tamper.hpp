#pragma once

#include "sparsity/commands.hpp"

#include <string>
#include <vector>

namespace sparsity::testing {

struct Tamper {
    std::string path; // JSON pointer of the altered field
    json certificate;
};

namespace detail {

inline void collect_leaves(const json& j, const json::json_pointer& at, std::vector<json::json_pointer>& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& item : j.items()) {
            collect_leaves(item.value(), at / item.key(), out);
        }
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            collect_leaves(j[i], at / i, out);
        }
    } else {
        out.push_back(at);
    }
}

inline json altered(const json& v)
{
    if (v.is_boolean()) {
        return !v.get<bool>();
    }
    if (v.is_number_integer()) {
        return v.get<std::int64_t>() + 1;
    }
    if (v.is_string()) {
        return v.get<std::string>() + "x";
    }
    if (v.is_array()) {
        return json::array({0});
    }
    if (v.is_object()) {
        return json::object({{"x", 0}});
    }
    return 0; // null
}

} // namespace detail

/// One certificate per primitive field (and per empty container), with only
/// that field changed. With `reseal` the digest is recomputed afterwards, so
/// only the semantic checks can catch the change; the digest field itself is
/// skipped in that mode.
inline std::vector<Tamper> single_field_tampers(const json& cert, bool reseal)
{
    std::vector<json::json_pointer> leaves;
    detail::collect_leaves(cert, json::json_pointer(), leaves);
    std::vector<Tamper> out;
    for (const auto& ptr : leaves) {
        if (reseal && ptr.to_string() == "/digest") {
            continue;
        }
        json t = cert;
        t[ptr] = detail::altered(cert[ptr]);
        if (reseal) {
            t["digest"] = certificate_digest(t);
        }
        out.push_back({ptr.to_string(), std::move(t)});
    }
    return out;
}

/// A resealed certificate that is exactly what the tool emits for the
/// request it records. Changing a parameter that does not affect the outcome
/// (a limit, or l for ndt when the cover condition already fails) yields one
/// of these: a true statement about a different run, not a forgery.
inline bool is_genuine(const json& cert, const Multigraph& g)
{
    try {
        return cli::execute({cert.at("command"), cert.at("parameters")}, g).certificate == cert;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace sparsity::testing
