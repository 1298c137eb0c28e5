#include "bsym/params.hpp"

#include "bsym/error.hpp"

namespace bsym {

Params::Params(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d) : q_(q), b_(b), n_(n), d_(d) {
    if (q < 2) throw ParameterError("q must be at least 2");
    if (b < 1) throw ParameterError("b must be at least 1");
    if (n < b) throw ParameterError("n must be at least b");
    if (d < 1 || d > n) throw ParameterError("d must satisfy 1 <= d <= n");
}

BigInt Params::space_size() const { return ipow(q_, n_); }

const char* to_string(Direction d) { return d == Direction::Upper ? "upper" : "lower"; }

const char* to_string(Applicability a) {
    switch (a) {
        case Applicability::Applicable: return "applicable";
        case Applicability::NotApplicable: return "not-applicable";
        case Applicability::TrivialRegime: return "trivial-regime";
    }
    return "?";
}

BoundValue make_upper(std::string method, const Rational& exact) {
    BoundValue v;
    v.method = std::move(method);
    v.direction = Direction::Upper;
    v.exact = exact;
    v.value = floor_of(exact);
    return v;
}

BoundValue make_lower(std::string method, const Rational& exact) {
    BoundValue v;
    v.method = std::move(method);
    v.direction = Direction::Lower;
    v.exact = exact;
    v.value = ceil_of(exact);
    if (v.value < 1) v.value = 1;
    return v;
}

BoundValue not_applicable(std::string method, Direction dir, std::string reason) {
    BoundValue v;
    v.method = std::move(method);
    v.direction = dir;
    v.status = Applicability::NotApplicable;
    v.reason = std::move(reason);
    return v;
}

BoundValue trivial_bound(std::string method, Direction dir, const Params& p) {
    BoundValue v;
    v.method = std::move(method);
    v.direction = dir;
    v.status = Applicability::TrivialRegime;
    v.value = p.space_size();
    v.exact = Rational(v.value);
    v.reason = "d <= b: every code qualifies";
    return v;
}

}  // namespace bsym
