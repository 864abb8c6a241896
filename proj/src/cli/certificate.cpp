#include "sparsity/certificate.hpp"

#include "sparsity/matroids.hpp"

#include <cstdio>

namespace sparsity {

namespace {

constexpr const char* kDigestKey = "digest";

std::string_view relation_name(Relation r)
{
    return r == Relation::AtMost ? "at_most" : "at_least";
}

Relation parse_relation(const std::string& name)
{
    if (name == "at_most") {
        return Relation::AtMost;
    }
    if (name == "at_least") {
        return Relation::AtLeast;
    }
    throw InputError("unknown relation " + name);
}

json blocks_json(const Partition& pi)
{
    json blocks = json::array();
    for (const VertexSet& b : pi.blocks()) {
        blocks.push_back(to_json(b));
    }
    return blocks;
}

std::vector<int> int_list(const json& j)
{
    if (!j.is_array()) {
        throw InputError("expected an array of integers");
    }
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& x : j) {
        if (!x.is_number_integer()) {
            throw InputError("expected an array of integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

/// Strict set reading: sorted and duplicate-free, as emitted.
template <typename Set>
Set set_from(const json& j)
{
    std::vector<int> ids = int_list(j);
    Set s(ids);
    if (s.ids() != ids) {
        throw InputError("set is not sorted and duplicate-free");
    }
    return s;
}

Partition partition_from(const json& j)
{
    if (!j.is_array()) {
        throw InputError("partition blocks must be an array");
    }
    std::vector<VertexSet> blocks;
    for (const json& b : j) {
        blocks.push_back(set_from<VertexSet>(b));
    }
    return Partition(std::move(blocks));
}

Witness witness_from(const json& j)
{
    if (j.is_null()) {
        return std::monostate{};
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "subset") {
        return set_from<VertexSet>(j.at("vertices"));
    }
    if (type == "partition") {
        return partition_from(j.at("blocks"));
    }
    if (type == "removal_partition") {
        return RemovalWitness{set_from<VertexSet>(j.at("removed")), partition_from(j.at("blocks"))};
    }
    if (type == "edge_set") {
        return set_from<EdgeSet>(j.at("edges"));
    }
    throw InputError("unknown witness type " + type);
}

int get_int(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw InputError(std::string("field ") + key + " must be an integer");
    }
    return v.get<int>();
}

Decomposition decomposition_from(const json& result)
{
    Decomposition d;
    d.k = get_int(result, "k");
    d.l = get_int(result, "l");
    d.assignment = int_list(result.at("assignment"));
    return d;
}

json parts_json(std::string_view kind, const std::vector<EdgeSet>& parts)
{
    json out = json::array();
    for (const EdgeSet& p : parts) {
        out.push_back({{"kind", kind}, {"edges", to_json(p)}});
    }
    return out;
}

/// Splits a "parts" array by kind, keeping order within each kind and
/// requiring every `first` part to precede every `second` part.
std::pair<std::vector<EdgeSet>, std::vector<EdgeSet>> parts_from(const json& parts, const std::string& first,
                                                                 const std::string& second)
{
    std::pair<std::vector<EdgeSet>, std::vector<EdgeSet>> out;
    if (!parts.is_array()) {
        throw InputError("parts must be an array");
    }
    for (const json& p : parts) {
        const std::string kind = p.at("kind").get<std::string>();
        EdgeSet edges = set_from<EdgeSet>(p.at("edges"));
        if (kind == first && out.second.empty()) {
            out.first.push_back(std::move(edges));
        } else if (kind == second) {
            out.second.push_back(std::move(edges));
        } else {
            throw InputError("unexpected part kind " + kind);
        }
    }
    return out;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string check_report(const Multigraph& g, const json& result)
{
    const ConditionReport report = report_from_json(result);
    if (report.holds) {
        // only the recomputation can confirm a universal statement
        return {};
    }
    const bool ok = report.definitional ? confirms_violation(g, report) : confirms_deficiency(g, report);
    return ok ? std::string{} : "witness does not violate " + report.condition;
}

std::string check_gamma(const Multigraph& g, const json& result)
{
    const std::string which = result.at("which").get<std::string>();
    const VertexSet x = set_from<VertexSet>(result.at("argmax"));
    g.require_vertices(x);
    if (x.size() < 2) {
        return "argmax has fewer than two vertices";
    }
    std::int64_t den = 0;
    if (which == "gamma") {
        den = x.size() - 1;
    } else if (which == "gamma2") {
        den = 2 * x.size() - 3;
    } else {
        return "unknown density " + which;
    }
    const Fraction at_argmax(induced_edge_count(g, x), den);
    if (Fraction::parse(result.at("value").get<std::string>()) != at_argmax) {
        return "value does not match the argmax";
    }
    return {};
}

} // namespace

json to_json(const VertexSet& set)
{
    return set.ids();
}

json to_json(const EdgeSet& set)
{
    return set.ids();
}

json to_json(const Witness& witness)
{
    return std::visit(
        [](const auto& w) -> json {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, VertexSet>) {
                return {{"type", "subset"}, {"vertices", to_json(w)}};
            } else if constexpr (std::is_same_v<T, Partition>) {
                return {{"type", "partition"}, {"blocks", blocks_json(w)}};
            } else if constexpr (std::is_same_v<T, RemovalWitness>) {
                return {{"type", "removal_partition"}, {"removed", to_json(w.removed)}, {"blocks", blocks_json(w.partition)}};
            } else {
                return {{"type", "edge_set"}, {"edges", to_json(w)}};
            }
        },
        witness);
}

json to_json(const ConditionReport& report)
{
    return {
        {"kind", "condition_report"},
        {"condition", report.condition},
        {"parameters", report.parameters},
        {"holds", report.holds},
        {"witness", to_json(report.witness)},
        {"relation", relation_name(report.relation)},
        {"lhs", report.lhs},
        {"rhs", report.rhs},
        {"definitional", report.definitional},
        {"note", report.note},
    };
}

ConditionReport report_from_json(const json& j)
{
    try {
        if (j.at("kind") != "condition_report") {
            throw InputError("not a condition report");
        }
        ConditionReport r;
        r.condition = j.at("condition").get<std::string>();
        r.parameters = j.at("parameters").get<std::map<std::string, std::int64_t>>();
        r.holds = j.at("holds").get<bool>();
        r.witness = witness_from(j.at("witness"));
        r.relation = parse_relation(j.at("relation").get<std::string>());
        r.lhs = j.at("lhs").get<std::int64_t>();
        r.rhs = j.at("rhs").get<std::int64_t>();
        r.definitional = j.at("definitional").get<bool>();
        r.note = j.at("note").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed condition report: ") + e.what());
    }
}

json to_json(const Decomposition& d)
{
    return {
        {"kind", "decomposition"},
        {"k", d.k},
        {"l", d.l},
        {"rank", d.covered().size()},
        {"assignment", d.assignment},
    };
}

json to_json(const Packing& packing, int k, int l)
{
    json parts = parts_json("rigid", packing.rigid_parts);
    for (json& p : parts_json("tree", packing.tree_parts)) {
        parts.push_back(std::move(p));
    }
    return {{"kind", "packing"}, {"k", k}, {"l", l}, {"parts", std::move(parts)}};
}

json to_json(const PackingFailure& failure, int k, int l)
{
    return {
        {"kind", "not_a_packing"},
        {"k", k},
        {"l", l},
        {"rank", failure.partial.rank},
        {"target", failure.target},
        {"assignment", failure.partial.decomposition.assignment},
        {"witness", failure.witness ? to_json(*failure.witness) : json(nullptr)},
    };
}

json to_json(const BoundedCover& cover, int k, int l)
{
    json parts = parts_json("forest", cover.forests);
    for (json& p : parts_json("bounded", cover.bounded_parts)) {
        parts.push_back(std::move(p));
    }
    return {
        {"kind", "bounded_cover"},
        {"k", k},
        {"l", l},
        {"degree_bound", cover.degree_bound.to_string()},
        {"degree_limit", cover.degree_limit()},
        {"parts", std::move(parts)},
    };
}

json to_json(const DensityMax& density, const std::string& which)
{
    return {
        {"kind", "gamma"},
        {"which", which},
        {"value", density.value.to_string()},
        {"argmax", to_json(density.argmax)},
    };
}

std::string certificate_digest(const json& certificate)
{
    json body = certificate;
    body.erase(kDigestKey);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : body.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return hex64(h);
}

json make_certificate(const std::string& command, const json& parameters, const Multigraph& g,
                      const json& result, bool verified)
{
    json cert = {
        {"schema_version", kSchemaVersion},
        {"command", command},
        {"parameters", parameters},
        {"graph_hash", graph_hash(g)},
        {"result", result},
        {"verified", verified},
    };
    cert[kDigestKey] = certificate_digest(cert);
    return cert;
}

std::string check_payload(const Multigraph& g, const json& parameters, const json& result)
{
    try {
        const std::string kind = result.at("kind").get<std::string>();
        const int n = g.vertex_count();
        if (kind == "condition_report") {
            return check_report(g, result);
        }
        if (kind == "gamma") {
            return check_gamma(g, result);
        }
        if (kind == "undecided") {
            const std::string status = result.at("status").get<std::string>();
            if (status != "budget_exhausted" && status != "no_split") {
                return "unknown search status " + status;
            }
            const int cls = get_int(result, "class_index");
            if (cls < 1 || cls > get_int(parameters, "k") + 1 || result.at("nodes").get<std::int64_t>() < 0) {
                return "undecided record out of range";
            }
            return {};
        }
        const int k = get_int(result, "k");
        const int l = get_int(result, "l");
        if (parameters.contains("k") && (k != get_int(parameters, "k") || l != get_int(parameters, "l"))) {
            return "payload k, l differ from the parameters";
        }
        if (kind == "decomposition") {
            const Decomposition d = decomposition_from(result);
            if (!verify_decomposition(g, d) || !d.is_complete()) {
                return "decomposition does not verify";
            }
            return get_int(result, "rank") == g.edge_count() ? std::string{} : "rank differs from |E|";
        }
        if (kind == "packing") {
            auto [rigid, trees] = parts_from(result.at("parts"), "rigid", "tree");
            if (static_cast<int>(rigid.size()) != k || static_cast<int>(trees.size()) != l) {
                return "wrong number of parts";
            }
            const PackingCheck check = verify_packing(g, Packing{std::move(rigid), std::move(trees)});
            return check.ok() ? std::string{} : "packing part " + std::to_string(check.part) + ": " + std::string(to_string(check.defect));
        }
        if (kind == "not_a_packing") {
            const Decomposition d = decomposition_from(result);
            const std::int64_t target = static_cast<std::int64_t>(k) * (2 * n - 3) + static_cast<std::int64_t>(l) * (n - 1);
            if (!verify_decomposition(g, d) || get_int(result, "rank") != d.covered().size()) {
                return "partial decomposition does not verify";
            }
            if (result.at("target").get<std::int64_t>() != target || d.covered().size() >= target) {
                return "rank does not fall short of the target";
            }
            const json& w = result.at("witness");
            return w.is_null() ? std::string{} : check_report(g, w);
        }
        if (kind == "bounded_cover") {
            auto [forests, bounded] = parts_from(result.at("parts"), "forest", "bounded");
            if (static_cast<int>(forests.size()) != l || static_cast<int>(bounded.size()) != 2 * k + 2 - l) {
                return "wrong number of parts";
            }
            const BoundedCover cover{std::move(forests), std::move(bounded), bounded_degree(n)};
            if (result.at("degree_bound").get<std::string>() != cover.degree_bound.to_string() ||
                get_int(result, "degree_limit") != cover.degree_limit()) {
                return "degree bound does not match (2n-5)/3";
            }
            return verify_bounded_cover(g, cover) ? std::string{} : "cover does not verify";
        }
        return "unknown result kind " + kind;
    } catch (const json::exception& e) {
        return std::string("malformed payload: ") + e.what();
    } catch (const InputError& e) {
        return std::string("malformed payload: ") + e.what();
    }
}

} // namespace sparsity
