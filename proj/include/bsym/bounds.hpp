#pragma once

// Upper and lower bounds on A_b(n, d, q), the largest q-ary length-n code with
// minimum b-symbol distance at least d.
//
// Every formula is evaluated in exact rationals; upper bounds are floored and
// lower bounds are ceiled once, at the end. The "alphabet" bounds view a code
// through its window relabeling, a Hamming-metric code of length n over an
// alphabet of size Q = q^b, and apply the classical Hamming bound with Q.

#include "bsym/numeric.hpp"
#include "bsym/params.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bsym {

/// Externally established facts about A_b(n, d, q): certified exact values and
/// sizes of witnessed codes. Read-only while bounds are evaluated.
class KnownValues {
public:
    using Key = std::tuple<std::uint32_t, std::size_t, std::size_t, std::size_t>;  // q, b, n, d

    void set_exact(const Params& p, BigInt value);
    void add_witness(const Params& p, BigInt size);

    std::optional<BigInt> exact(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d) const;
    std::optional<BigInt> exact(const Params& p) const { return exact(p.q(), p.b(), p.n(), p.d()); }
    std::optional<BigInt> witness(const Params& p) const;

private:
    std::map<Key, BigInt> exact_;
    std::map<Key, BigInt> witness_;
};

struct BoundOptions {
    bool use_lp = true;
    std::optional<std::uint64_t> lp_k_max;
    const KnownValues* known = nullptr;
    /// Allow the even-d Johnson bound to fall back on an exact constant-weight
    /// search (n <= 10) when the closed-form estimate is unavailable.
    bool constant_weight_search = true;
};

BoundValue singleton_upper(const Params& p);

/// q^n / B_b(n, t) with t = floor((d - b + 1)/2); requires b >= 2.
BoundValue sphere_packing_song_upper(const Params& p);

/// Q^n / sum_{i<=t} C(n,i)(Q-1)^i with t = floor((d-1)/2).
BoundValue sphere_packing_alphabet_upper(const Params& p);

/// Q^n / sum_{i<d} C(n,i)(Q-1)^i, ceiled and capped at q^n.
BoundValue gv_alphabet_lower(const Params& p);

/// q^n / B_b(n, d-1), ceiled.
BoundValue gv_ball_lower(const Params& p);

/// floor(d / (d - rn)), r = 1 - q^-b; needs rn < d and q a prime power.
BoundValue plotkin_upper(const Params& p);

/// Bound on constant-weight codes A_b(n, d, w, q):
/// floor(d / (d - 2w + Q w^2 / ((Q-1) n))) when the denominator is positive.
BoundValue restricted_johnson_upper(const Params& p, std::size_t w);

/// The Elias expression for one w (0 <= w), or nothing when w > rn or the
/// denominator w^2 - 2rnw + rnd is not positive.
std::optional<Rational> elias_term(const Params& p, std::size_t w);

/// Minimum of elias_term over integers 1 <= w <= rn.
BoundValue elias_upper(const Params& p);

/// q^n / (B_b(n,t) + S_b(n,t+1)/estimate), d = 2t + 2. Increasing in `estimate`.
Rational johnson_even_formula(const Params& p, const BigInt& constant_weight_estimate);

BoundValue johnson_even_upper(const Params& p, const BoundOptions& options = {});

/// One term q^m / B_b(m, r) * UB(n - m, d - 2r - b + 1); nothing if (m, r) is invalid.
/// UB is the combined upper bound computed recursively.
std::optional<BoundValue> recurrence_term(const Params& p, std::size_t m, std::size_t r,
                                          const BoundOptions& options = {});

/// Minimum over all valid (m, r) with m >= 1.
BoundValue recurrence_upper(const Params& p, const BoundOptions& options = {});

struct BoundReport {
    Params params;
    BoundValue best_upper;
    BoundValue best_lower;
    std::vector<BoundValue> uppers;  // per-method breakdown, fixed order
    std::vector<BoundValue> lowers;
};

/// Every bound plus the aggregated best values; best_lower <= best_upper.
BoundReport evaluate_bounds(const Params& p, const BoundOptions& options = {});

BoundValue best_upper(const Params& p, const BoundOptions& options = {});
BoundValue best_lower(const Params& p, const BoundOptions& options = {});

/// Method names accepted by evaluate_method, in report order.
const std::vector<std::string>& method_names();

/// Single method by name (see method_names); throws ParameterError otherwise.
BoundValue evaluate_method(const Params& p, const std::string& method, const BoundOptions& options = {});

}  // namespace bsym
