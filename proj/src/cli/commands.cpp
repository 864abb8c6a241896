#include "sparsity/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace sparsity::cli {

namespace {

namespace fs = std::filesystem;

bool is_condition(const std::string& name)
{
    return std::find(kConditionNames.begin(), kConditionNames.end(), name) != kConditionNames.end();
}

std::string condition_list()
{
    std::string out;
    for (std::string_view name : kConditionNames) {
        out += out.empty() ? "" : ", ";
        out += name;
    }
    return out;
}

std::int64_t require_int(const json& params, const char* key)
{
    const auto it = params.find(key);
    if (it == params.end()) {
        throw InputError(std::string("missing parameter ") + key);
    }
    if (!it->is_number_integer()) {
        throw InputError(std::string("parameter ") + key + " must be an integer");
    }
    return it->get<std::int64_t>();
}

int small_int(const json& params, const char* key)
{
    const std::int64_t v = require_int(params, key);
    if (v < -1'000'000 || v > 1'000'000) {
        throw InputError(std::string("parameter ") + key + " is out of range");
    }
    return static_cast<int>(v);
}

std::string require_string(const json& params, const char* key)
{
    const auto it = params.find(key);
    if (it == params.end() || !it->is_string()) {
        throw InputError(std::string("missing parameter ") + key);
    }
    return it->get<std::string>();
}

std::string witness_text(const Witness& w)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, VertexSet>) {
                return " at X=" + to_string(x);
            } else if constexpr (std::is_same_v<T, Partition>) {
                return " at pi=" + to_string(x);
            } else if constexpr (std::is_same_v<T, RemovalWitness>) {
                return " at Z=" + to_string(x.removed) + ", pi=" + to_string(x.partition);
            } else {
                return " at edge set S=" + to_string(VertexSet(x.ids()));
            }
        },
        w);
}

std::string report_text(const ConditionReport& r)
{
    if (r.holds) {
        return r.condition + " holds";
    }
    const char* op = r.relation == Relation::AtMost ? " > " : " < ";
    std::string line = r.condition + " fails: " + std::to_string(r.lhs) + op + std::to_string(r.rhs) + witness_text(r.witness);
    if (!r.note.empty()) {
        line += " (" + r.note + ")";
    }
    return line;
}

Outcome finish(const Request& request, const json& params, const Multigraph& g, json result, int code,
               std::string summary)
{
    const bool verified = check_payload(g, params, result).empty();
    Outcome out{code, make_certificate(request.command, params, g, result, verified), std::move(summary)};
    if (!verified) {
        out.summary += " [payload failed its own check]";
    }
    return out;
}

Outcome report_outcome(const Request& request, const json& params, const Multigraph& g, const ConditionReport& r)
{
    return finish(request, params, g, to_json(r), r.holds ? kSuccess : kWitnessedFalse, report_text(r));
}

ConditionReport run_check(const std::string& name, const json& p, const Multigraph& g, const Limits& limits)
{
    if (name == "cover") {
        return check_cover_condition(g, small_int(p, "k"), limits);
    }
    if (name == "tree-packing") {
        return check_tree_packing_condition(g, small_int(p, "l"), limits);
    }
    if (name == "parthm") {
        return check_parthm_condition(g, small_int(p, "k"), small_int(p, "l"), limits);
    }
    if (name == "necessary") {
        return check_necessary_condition(g, small_int(p, "k"), small_int(p, "l"), limits);
    }
    if (name == "pq-connected") {
        return check_pq_connected(g, small_int(p, "p"), small_int(p, "q"), limits);
    }
    if (name == "bracket-partition") {
        return check_bracket_partition_connected(g, small_int(p, "p"), small_int(p, "q"), limits);
    }
    return check_kwz_condition(g, small_int(p, "k"), Fraction::parse(require_string(p, "d")), limits);
}

void write_certificate(const fs::path& path, const json& cert)
{
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot write " + path.string());
    }
    file << cert.dump(2) << '\n';
}

json read_json_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw InputError(path + " is not valid JSON: " + e.what());
    }
}

} // namespace

Limits limits_from(const json& parameters)
{
    Limits limits;
    if (parameters.contains("max_n")) {
        limits.max_subset_vertices = small_int(parameters, "max_n");
    }
    if (parameters.contains("max_partitions")) {
        limits.max_partition_vertices = small_int(parameters, "max_partitions");
    }
    if (parameters.contains("search_budget")) {
        limits.search_budget = require_int(parameters, "search_budget");
    }
    return limits;
}

json canonical_parameters(const std::string& command, const json& parameters)
{
    if (!parameters.is_object()) {
        throw InputError("parameters must be an object");
    }
    const Limits limits = limits_from(parameters);
    json out = {
        {"max_n", limits.max_subset_vertices},
        {"max_partitions", limits.max_partition_vertices},
        {"search_budget", limits.search_budget},
    };
    auto copy_ints = [&](std::initializer_list<const char*> keys) {
        for (const char* key : keys) {
            out[key] = small_int(parameters, key);
        }
    };
    if (command == "decompose" || command == "pack" || command == "ndt") {
        copy_ints({"k", "l"});
    } else if (command == "gamma") {
        const std::string which = require_string(parameters, "which");
        if (which != "gamma" && which != "gamma2") {
            throw InputError("--which must be gamma or gamma2");
        }
        out["which"] = which;
    } else if (command == "check") {
        const std::string name = require_string(parameters, "condition");
        if (!is_condition(name)) {
            throw InputError("unknown condition '" + name + "'; valid names: " + condition_list());
        }
        out["condition"] = name;
        if (name == "cover") {
            copy_ints({"k"});
        } else if (name == "tree-packing") {
            copy_ints({"l"});
        } else if (name == "parthm" || name == "necessary") {
            copy_ints({"k", "l"});
        } else if (name == "pq-connected" || name == "bracket-partition") {
            copy_ints({"p", "q"});
        } else {
            copy_ints({"k"});
            if (!parameters.contains("d")) {
                throw InputError("kwz needs --d");
            }
            out["d"] = Fraction::parse(require_string(parameters, "d")).to_string();
        }
    } else {
        throw InputError("unknown command '" + command + "'");
    }
    return out;
}

Outcome execute(const Request& request, const Multigraph& g)
{
    const json params = canonical_parameters(request.command, request.parameters);
    const Limits limits = limits_from(params);
    const std::string& cmd = request.command;

    if (cmd == "check") {
        return report_outcome(request, params, g, run_check(params.at("condition"), params, g, limits));
    }
    if (cmd == "gamma") {
        const std::string which = params.at("which");
        const DensityMax d = which == "gamma" ? gamma(g, limits) : gamma2(g, limits);
        return finish(request, params, g, to_json(d, which), kSuccess,
                      d.value.to_string() + " argmax X=" + to_string(d.argmax));
    }

    const int k = small_int(params, "k");
    const int l = small_int(params, "l");
    if (cmd == "decompose") {
        const DecomposeOutcome o = l == 0 ? decompose_sparse(g, k, limits)
                                   : k == 0 ? decompose_forests(g, l, limits)
                                            : decompose_mixed(g, k, l, limits);
        if (const auto* r = std::get_if<ConditionReport>(&o)) {
            return report_outcome(request, params, g, *r);
        }
        const auto& d = std::get<Decomposition>(o);
        return finish(request, params, g, to_json(d), kSuccess,
                      "decomposable: " + std::to_string(k) + " sparse classes, " + std::to_string(l) + " forests");
    }
    if (cmd == "pack") {
        const PackOutcome o = k == 0 ? pack_spanning_trees(g, l, limits) : pack_rigid_and_trees(g, k, l);
        if (const auto* f = std::get_if<PackingFailure>(&o)) {
            std::string line = "no packing: union rank " + std::to_string(f->partial.rank) + " < " +
                               std::to_string(f->target);
            if (f->witness) {
                line += "; " + report_text(*f->witness);
            }
            return finish(request, params, g, to_json(*f, k, l), kWitnessedFalse, line);
        }
        return finish(request, params, g, to_json(std::get<Packing>(o), k, l), kSuccess,
                      "packed: " + std::to_string(k) + " spanning rigid subgraphs, " + std::to_string(l) +
                          " spanning trees");
    }
    // ndt
    const NdtOutcome o = ndt_decompose(g, k, l, limits);
    if (const auto* r = std::get_if<ConditionReport>(&o)) {
        return report_outcome(request, params, g, *r);
    }
    if (const auto* s = std::get_if<NdtStalled>(&o)) {
        const bool budget = s->split.status == SearchStatus::Undecided;
        const json result = {
            {"kind", "undecided"},
            {"class_index", s->class_index},
            {"status", budget ? "budget_exhausted" : "no_split"},
            {"nodes", s->split.nodes},
        };
        return finish(request, params, g, result, kUndecided,
                      "undecided: sparse class " + std::to_string(s->class_index) +
                          (budget ? " exhausted the search budget" : " has no forest plus bounded split") + " (" +
                          std::to_string(s->split.nodes) + " nodes)");
    }
    const auto& cover = std::get<BoundedCover>(o);
    return finish(request, params, g, to_json(cover, k, l), kSuccess,
                  "cover: " + std::to_string(cover.forests.size()) + " forests, " +
                      std::to_string(cover.bounded_parts.size()) + " parts with max degree <= " +
                      std::to_string(cover.degree_limit()));
}

VerifyResult verify_certificate(const json& cert, const Multigraph& g)
{
    static const std::vector<std::string> keys = {"command", "digest", "graph_hash", "parameters",
                                                  "result", "schema_version", "verified"};
    if (!cert.is_object()) {
        return {false, "certificate is not a JSON object"};
    }
    std::vector<std::string> present;
    for (const auto& item : cert.items()) {
        present.push_back(item.key());
    }
    if (present != keys) {
        return {false, "certificate fields differ from the schema"};
    }
    if (cert.at("schema_version") != kSchemaVersion) {
        return {false, "unsupported schema version"};
    }
    if (!cert.at("digest").is_string() || cert.at("digest") != certificate_digest(cert)) {
        return {false, "digest mismatch"};
    }
    if (cert.at("graph_hash") != graph_hash(g)) {
        return {false, "graph hash does not match the input"};
    }
    if (cert.at("verified") != true) {
        return {false, "certificate is not marked verified"};
    }
    if (!cert.at("command").is_string()) {
        return {false, "command is not a string"};
    }
    if (std::string reason = check_payload(g, cert.at("parameters"), cert.at("result")); !reason.empty()) {
        return {false, reason};
    }
    try {
        const Outcome fresh = execute({cert.at("command").get<std::string>(), cert.at("parameters")}, g);
        if (fresh.certificate != cert) {
            return {false, "recomputation produced a different certificate"};
        }
    } catch (const std::exception& e) {
        return {false, std::string("recomputation failed: ") + e.what()};
    }
    return {true, {}};
}

int run_batch(const Request& request, const fs::path& dir, const fs::path& out_dir, std::ostream& out,
              std::ostream& err)
{
    if (!fs::is_directory(dir)) {
        throw InputError(dir.string() + " is not a directory");
    }
    canonical_parameters(request.command, request.parameters);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() != ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    fs::create_directories(out_dir);

    struct Line {
        int code = kSuccess;
        std::string text;
    };
    std::vector<Line> lines(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            Line& line = lines[i];
            try {
                const Multigraph g = read_graph_file(files[i].string());
                const Outcome o = execute(request, g);
                write_certificate(out_dir / (files[i].stem().string() + "." + request.command + ".json"),
                                  o.certificate);
                line = {o.exit_code, o.summary};
            } catch (const LimitExceeded& e) {
                line = {kUndecided, e.what()};
            } catch (const InputError& e) {
                line = {kInputError, std::string("error: ") + e.what()};
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();

    int worst = kSuccess;
    for (std::size_t i = 0; i < files.size(); ++i) {
        (lines[i].code == kInputError ? err : out) << files[i].filename().string() << ": " << lines[i].text << '\n';
        worst = std::max(worst, lines[i].code);
    }
    return worst;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sparsity, rigidity and packing checks on multigraphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string cert_path;
    std::string condition;
    std::string out_path;
    std::string batch_dir;
    std::string which = "gamma";
    std::string d;
    int k = 1;
    int l = 0;
    int p = 1;
    int q = 1;
    int n = 0;
    int m = 0;
    int mult = 1;
    std::uint64_t seed = 0;
    Limits limits;

    auto add_common = [&](CLI::App* sub, bool takes_kl) {
        sub->add_option("graph", graph_path, "graph file: \"n m\" then m lines \"u v\"");
        sub->add_option("--out", out_path, "certificate path (output directory with --batch)");
        sub->add_option("--batch", batch_dir, "process every graph file in a directory");
        sub->add_option("--max-n", limits.max_subset_vertices, "largest n for subset scans")->capture_default_str();
        sub->add_option("--max-partitions", limits.max_partition_vertices, "largest ground set for partition scans")
            ->capture_default_str();
        sub->add_option("--search-budget", limits.search_budget, "node budget for split searches")
            ->capture_default_str();
        if (takes_kl) {
            sub->add_option("--k", k, "sparse / rigid count")->capture_default_str();
            sub->add_option("--l", l, "forest / tree count")->capture_default_str();
        }
    };

    CLI::App* decompose = app.add_subcommand("decompose", "split E into k sparse sets and l forests");
    add_common(decompose, true);
    CLI::App* pack = app.add_subcommand("pack", "k spanning rigid subgraphs and l spanning trees");
    add_common(pack, true);
    CLI::App* ndt = app.add_subcommand("ndt", "l forests and 2k+2-l parts of max degree <= (2n-5)/3");
    add_common(ndt, true);

    CLI::App* check = app.add_subcommand("check", "evaluate a named subset or partition condition");
    check->add_option("condition", condition, "one of: " + condition_list())->required();
    add_common(check, true);
    check->add_option("--p", p)->capture_default_str();
    check->add_option("--q", q)->capture_default_str();
    check->add_option("--d", d, "rational a/b");

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "exact max i(X)/(|X|-1) or i(X)/(2|X|-3)");
    add_common(gamma_cmd, false);
    gamma_cmd->add_option("--which", which)->check(CLI::IsMember({"gamma", "gamma2"}))->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate against its graph");
    verify->add_option("certificate", cert_path)->required();
    verify->add_option("graph", graph_path)->required();

    CLI::App* random = app.add_subcommand("random", "write a random multigraph");
    random->add_option("--n", n)->required();
    random->add_option("--m", m)->required();
    random->add_option("--mult", mult)->capture_default_str();
    random->add_option("--seed", seed)->capture_default_str();
    random->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (random->parsed()) {
            const Multigraph g = random_multigraph(n, m, mult, seed);
            if (out_path.empty()) {
                write_graph(out, g);
            } else {
                std::ofstream file(out_path);
                if (!file) {
                    throw InputError("cannot write " + out_path);
                }
                write_graph(file, g);
            }
            return kSuccess;
        }
        if (verify->parsed()) {
            const json cert = read_json_file(cert_path);
            const Multigraph g = read_graph_file(graph_path);
            const VerifyResult result = verify_certificate(cert, g);
            if (!result.ok) {
                out << "rejected: " << result.reason << '\n';
                return kWitnessedFalse;
            }
            out << "verified\n";
            return kSuccess;
        }

        Request request;
        request.command = app.get_subcommands().front()->get_name();
        request.parameters = {
            {"k", k},
            {"l", l},
            {"p", p},
            {"q", q},
            {"which", which},
            {"condition", condition},
            {"max_n", limits.max_subset_vertices},
            {"max_partitions", limits.max_partition_vertices},
            {"search_budget", limits.search_budget},
        };
        if (!d.empty()) {
            request.parameters["d"] = d;
        }
        request.parameters = canonical_parameters(request.command, request.parameters);

        if (!batch_dir.empty()) {
            if (!graph_path.empty()) {
                throw InputError("give either a graph file or --batch, not both");
            }
            return run_batch(request, batch_dir, out_path.empty() ? fs::path(batch_dir) : fs::path(out_path), out, err);
        }
        if (graph_path.empty()) {
            throw InputError("missing graph file");
        }
        const Multigraph g = read_graph_file(graph_path);
        const Outcome outcome = execute(request, g);
        if (!out_path.empty()) {
            write_certificate(out_path, outcome.certificate);
        }
        out << outcome.summary << '\n';
        return outcome.exit_code;
    } catch (const LimitExceeded& e) {
        err << e.what() << '\n';
        return kUndecided;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace sparsity::cli
