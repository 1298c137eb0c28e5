#pragma once

// Exact A_b(n, d, q) and A_b(n, d, w, q) on small instances by maximum-clique
// search over the compatibility graph (edges join words at b-symbol distance
// at least d), plus verification of explicit codes.

#include "bsym/metric.hpp"
#include "bsym/params.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace bsym {

enum class Symmetry {
    /// Fix the zero word in the code; search the neighbours of zero.
    Translation,
    /// Additionally branch only on canonical pairs: every code can be moved by a
    /// translation, per-coordinate symbol permutations and a rotation/reflection
    /// so that it contains 0 and the 0/1 word of its smallest canonical
    /// difference support.
    Full,
};

enum class VertexOrder { DegreeDescending, Index };

struct SearchOptions {
    double time_limit_seconds = 60.0;
    std::optional<std::uint64_t> node_limit;  // deterministic budget, checked with the clock
    unsigned threads = 1;                     // 0 = hardware concurrency
    Symmetry symmetry = Symmetry::Full;
    VertexOrder order = VertexOrder::DegreeDescending;
    std::uint64_t max_space = std::uint64_t{1} << 20;  // q^n limit
    std::size_t max_vertices = 12000;                  // compatibility-graph limit
};

struct SearchResult {
    std::uint32_t q = 2;
    std::size_t n = 1;
    std::size_t best_size = 0;
    std::vector<std::uint64_t> witness;  // word indices (Word::from_index)
    bool certified = false;
    double elapsed_seconds = 0.0;
    std::uint64_t nodes = 0;

    Code witness_code() const;
};

/// Certified maximum, or the best code found when the budget runs out.
/// Throws CapacityError when q^n or the graph exceeds the configured limits.
SearchResult exact_max_code(const Params& p, const SearchOptions& options = {});

/// Same for codes whose words all have b-symbol weight exactly w.
SearchResult exact_max_constant_weight(const Params& p, std::size_t w, const SearchOptions& options = {});

struct VerifyReport {
    std::uint32_t q = 2;
    std::size_t n = 0;
    std::size_t b = 1;
    std::size_t size = 0;
    std::optional<std::size_t> min_distance;  // absent for |C| < 2
    WeightEnumerator enumerator;
    std::optional<std::size_t> constant_weight;
};

VerifyReport verify_code(const Code& code, std::size_t b);

}  // namespace bsym
