#pragma once

#include "sparsity/certificate.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sparsity::cli {

enum ExitCode : int {
    kSuccess = 0,
    kWitnessedFalse = 1,
    kInputError = 2,
    kUndecided = 3, // also guardrail refusals
};

inline constexpr std::array<std::string_view, 7> kConditionNames = {
    "cover", "tree-packing", "parthm", "necessary", "pq-connected", "bracket-partition", "kwz",
};

/// A certificate-producing command (decompose, pack, check, gamma, ndt) with
/// its parameters as they appear in the certificate.
struct Request {
    std::string command;
    json parameters;
};

struct Outcome {
    int exit_code = kSuccess;
    json certificate;
    std::string summary; // one human-readable line
};

/// Keeps only the keys the command reads, with limits filled in, so the
/// parameters recorded in a certificate are canonical. Throws InputError on
/// an unknown command, condition or a malformed value.
json canonical_parameters(const std::string& command, const json& parameters);

Limits limits_from(const json& parameters);

/// Runs a request on a graph. Throws InputError or LimitExceeded.
Outcome execute(const Request& request, const Multigraph& g);

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

/// Schema, digest, graph hash, payload re-check, then recomputation of the
/// recorded command and exact comparison with the certificate.
VerifyResult verify_certificate(const json& certificate, const Multigraph& g);

/// Runs the request on every graph file of `dir` (files ending in .json are
/// skipped) in parallel and writes <stem>.<command>.json into `out_dir`.
/// Returns the largest exit code.
int run_batch(const Request& request, const std::filesystem::path& dir, const std::filesystem::path& out_dir,
              std::ostream& out, std::ostream& err);

/// Command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sparsity::cli
