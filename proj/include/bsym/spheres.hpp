#pragma once

// Exact b-symbol ball and sphere cardinalities.
//
// The b-symbol weight of a word depends only on its support pattern: it is n
// minus the number of all-zero cyclic windows of the pattern. S_b(n, r) is
// therefore a sum of (q-1)^|s| over cyclic binary patterns s of weight r, which
// a transfer-matrix pass over the last b-1 support bits computes exactly.

#include "bsym/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace bsym {

struct SphereTable {
    std::uint32_t q = 0;
    std::size_t b = 0;
    std::size_t n = 0;
    std::vector<BigInt> spheres;  // S_b(n, 0..n)
    std::vector<BigInt> balls;    // B_b(n, 0..n), prefix sums of `spheres`
};

/// Largest b supported by the support-pattern DP.
inline constexpr std::size_t kMaxSphereWindow = 10;

/// Full table for (q, b, n); memoized per process and safe to call concurrently.
std::shared_ptr<const SphereTable> sphere_table(std::uint32_t q, std::size_t b, std::size_t n);

/// S_b(n, r); zero for r > n.
BigInt sphere_size(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b);

/// B_b(n, r); r > n saturates at q^n. For n < b every nonzero word has weight n.
BigInt ball_size(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b);

/// Independent oracle: direct enumeration of the 2^n support patterns (n <= 20).
BigInt ball_size_bruteforce(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b);

}  // namespace bsym
