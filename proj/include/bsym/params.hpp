#pragma once

#include "bsym/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bsym {

/// Validated (q, b, n, d): alphabet size, read width, length, target minimum
/// b-symbol distance. Requires q >= 2, 1 <= b <= n, 1 <= d <= n.
class Params {
public:
    Params(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d);

    std::uint32_t q() const noexcept { return q_; }
    std::size_t b() const noexcept { return b_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }

    /// d <= b: distinct words are always at distance >= b, so every code qualifies.
    bool trivial() const noexcept { return d_ <= b_; }

    /// q^n, the size of the ambient space.
    BigInt space_size() const;

    friend bool operator==(const Params&, const Params&) = default;

private:
    std::uint32_t q_;
    std::size_t b_;
    std::size_t n_;
    std::size_t d_;
};

enum class Direction { Upper, Lower };

enum class Applicability { Applicable, NotApplicable, TrivialRegime };

const char* to_string(Direction d);
const char* to_string(Applicability a);

struct BoundValue {
    BigInt value = 1;
    Direction direction = Direction::Upper;
    std::string method;
    Applicability status = Applicability::Applicable;
    std::string reason;                // why not applicable, if so
    std::optional<Rational> exact;     // pre-rounding value
    std::string detail;                // e.g. the minimizing w or (m, r)
    std::vector<std::string> diagnostics;

    bool usable() const noexcept { return status != Applicability::NotApplicable; }
};

BoundValue make_upper(std::string method, const Rational& exact);
BoundValue make_lower(std::string method, const Rational& exact);
BoundValue not_applicable(std::string method, Direction dir, std::string reason);
BoundValue trivial_bound(std::string method, Direction dir, const Params& p);

}  // namespace bsym
