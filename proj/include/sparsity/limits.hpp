#pragma once

#include <cstdint>

namespace sparsity {

/// Guardrails for the exhaustive procedures. Subset scans are 2^n, partition
/// scans grow like Bell(n), the Edmonds brute force is 2^|E|.
struct Limits {
    int max_subset_vertices = 16;
    int max_partition_vertices = 12;
    int max_bruteforce_edges = 14;
    std::int64_t search_budget = 10'000'000;
};

void require_subset_limit(int n, const Limits& limits);
void require_partition_limit(int n, const Limits& limits);

} // namespace sparsity
