#include "bsym/bounds.hpp"

#include "bsym/error.hpp"
#include "bsym/lp.hpp"
#include "bsym/search.hpp"
#include "bsym/spheres.hpp"

#include <algorithm>
#include <functional>

namespace bsym {

// ---------------------------------------------------------------------------
// KnownValues

void KnownValues::set_exact(const Params& p, BigInt value) { exact_[Key{p.q(), p.b(), p.n(), p.d()}] = std::move(value); }

void KnownValues::add_witness(const Params& p, BigInt size) {
    auto& slot = witness_[Key{p.q(), p.b(), p.n(), p.d()}];
    if (size > slot) slot = std::move(size);
}

std::optional<BigInt> KnownValues::exact(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d) const {
    if (auto it = exact_.find(Key{q, b, n, d}); it != exact_.end()) return it->second;
    return std::nullopt;
}

std::optional<BigInt> KnownValues::witness(const Params& p) const {
    if (auto it = witness_.find(Key{p.q(), p.b(), p.n(), p.d()}); it != witness_.end()) return it->second;
    return std::nullopt;
}

namespace {

BigInt alphabet_size(const Params& p) { return ipow(p.q(), p.b()); }

// Hamming ball volume sum_{i<=t} C(n,i)(Q-1)^i over an alphabet of size Q.
BigInt hamming_volume(std::size_t n, std::size_t t, const BigInt& alphabet) {
    BigInt total = 0;
    BigInt unit_pow = 1;
    const BigInt unit = alphabet - 1;
    for (std::size_t i = 0; i <= std::min(t, n); ++i) {
        total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)) * unit_pow;
        unit_pow *= unit;
    }
    return total;
}

Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// r n with r = 1 - q^-b.
Rational plotkin_rn(const Params& p) {
    const BigInt alphabet = alphabet_size(p);
    return ratio((alphabet - 1) * static_cast<unsigned long>(p.n()), alphabet);
}

}  // namespace

BoundValue singleton_upper(const Params& p) {
    if (!is_prime_power(p.q())) return not_applicable("singleton", Direction::Upper, "q is not a prime power");
    if (p.d() < p.b()) return trivial_bound("singleton", Direction::Upper, p);
    return make_upper("singleton", Rational(ipow(p.q(), p.n() - p.d() + p.b())));
}

BoundValue sphere_packing_song_upper(const Params& p) {
    if (p.b() < 2) return not_applicable("sp-song", Direction::Upper, "requires b >= 2");
    const std::size_t t = p.d() + 1 > p.b() ? (p.d() + 1 - p.b()) / 2 : 0;
    BoundValue v = make_upper("sp-song", ratio(p.space_size(), ball_size(p.n(), t, p.q(), p.b())));
    v.detail = "t=" + std::to_string(t);
    return v;
}

BoundValue sphere_packing_alphabet_upper(const Params& p) {
    const BigInt alphabet = alphabet_size(p);
    const std::size_t t = (p.d() - 1) / 2;
    BigInt full;
    mpz_pow_ui(full.get_mpz_t(), alphabet.get_mpz_t(), p.n());
    BoundValue v = make_upper("sp", ratio(full, hamming_volume(p.n(), t, alphabet)));
    v.detail = "t=" + std::to_string(t);
    if (v.value > p.space_size()) v.diagnostics.push_back("exceeds the space size q^n");
    return v;
}

BoundValue gv_alphabet_lower(const Params& p) {
    const BigInt alphabet = alphabet_size(p);
    BigInt full;
    mpz_pow_ui(full.get_mpz_t(), alphabet.get_mpz_t(), p.n());
    BoundValue v = make_lower("gv", ratio(full, hamming_volume(p.n(), p.d() - 1, alphabet)));
    if (v.value > p.space_size()) {
        v.value = p.space_size();
        v.diagnostics.push_back("capped at the space size q^n");
    }
    return v;
}

BoundValue gv_ball_lower(const Params& p) {
    return make_lower("gv-ball", ratio(p.space_size(), ball_size(p.n(), p.d() - 1, p.q(), p.b())));
}

BoundValue plotkin_upper(const Params& p) {
    if (!is_prime_power(p.q())) return not_applicable("plotkin", Direction::Upper, "q is not a prime power");
    const Rational rn = plotkin_rn(p);
    const Rational d(static_cast<unsigned long>(p.d()));
    if (rn >= d) return not_applicable("plotkin", Direction::Upper, "requires rn < d");
    return make_upper("plotkin", d / (d - rn));
}

BoundValue restricted_johnson_upper(const Params& p, std::size_t w) {
    const BigInt alphabet = alphabet_size(p);
    const Rational d(static_cast<unsigned long>(p.d()));
    const Rational wr(static_cast<unsigned long>(w));
    const Rational denom =
        d - 2 * wr + Rational(alphabet) * wr * wr / (Rational(alphabet - 1) * static_cast<unsigned long>(p.n()));
    if (denom <= 0) return not_applicable("restricted-johnson", Direction::Upper, "denominator is not positive");
    BoundValue v = make_upper("restricted-johnson", d / denom);
    v.detail = "w=" + std::to_string(w);
    return v;
}

std::optional<Rational> elias_term(const Params& p, std::size_t w) {
    const Rational rn = plotkin_rn(p);
    const Rational wr(static_cast<unsigned long>(w));
    if (wr > rn) return std::nullopt;
    const Rational rnd = rn * static_cast<unsigned long>(p.d());
    const Rational denom = wr * wr - 2 * rn * wr + rnd;
    if (denom <= 0) return std::nullopt;
    const BigInt alphabet = alphabet_size(p);
    BigInt full;
    mpz_pow_ui(full.get_mpz_t(), alphabet.get_mpz_t(), p.n());
    return rnd / denom * ratio(full, hamming_volume(p.n(), w, alphabet));
}

BoundValue elias_upper(const Params& p) {
    const BigInt max_w = floor_of(plotkin_rn(p));
    std::optional<BoundValue> best;
    for (std::size_t w = 1; w <= max_w.get_ui(); ++w) {
        const auto term = elias_term(p, w);
        if (!term) continue;
        BoundValue v = make_upper("elias", *term);
        if (!best || v.value < best->value) {
            v.detail = "w=" + std::to_string(w);
            best = std::move(v);
        }
    }
    if (!best) return not_applicable("elias", Direction::Upper, "no admissible w");
    return *best;
}

Rational johnson_even_formula(const Params& p, const BigInt& constant_weight_estimate) {
    if (p.d() % 2 != 0 || p.d() < 2) throw ParameterError("the even Johnson bound needs even d >= 2");
    const std::size_t t = (p.d() - 2) / 2;
    const BigInt ball = ball_size(p.n(), t, p.q(), p.b());
    const BigInt shell = sphere_size(p.n(), t + 1, p.q(), p.b());
    if (shell == 0) return ratio(p.space_size(), ball);
    if (constant_weight_estimate < 1) throw ParameterError("constant-weight estimate must be positive");
    return Rational(p.space_size()) / (Rational(ball) + ratio(shell, constant_weight_estimate));
}

BoundValue johnson_even_upper(const Params& p, const BoundOptions& options) {
    if (p.d() % 2 != 0) return not_applicable("johnson", Direction::Upper, "requires even d");
    const std::size_t w = p.d() / 2;
    if (sphere_size(p.n(), w, p.q(), p.b()) == 0) {
        BoundValue v = make_upper("johnson", johnson_even_formula(p, 1));
        v.detail = "S_b(n,t+1)=0";
        return v;
    }
    const BoundValue rj = restricted_johnson_upper(p, w);
    if (rj.usable()) {
        BoundValue v = make_upper("johnson", johnson_even_formula(p, std::max<BigInt>(rj.value, 1)));
        v.detail = "A(n,d,t+1)<=" + rj.value.get_str() + " (restricted johnson)";
        return v;
    }
    if (options.constant_weight_search && p.n() <= 10 && w >= p.b()) {
        SearchOptions so;
        so.threads = 1;
        so.node_limit = 2'000'000;
        so.time_limit_seconds = 1e9;
        try {
            const SearchResult cw = exact_max_constant_weight(p, w, so);
            if (cw.certified && cw.best_size > 0) {
                BoundValue v = make_upper("johnson", johnson_even_formula(p, BigInt(static_cast<unsigned long>(cw.best_size))));
                v.detail = "A(n,d,t+1)=" + std::to_string(cw.best_size) + " (search)";
                return v;
            }
        } catch (const CapacityError&) {
        }
    }
    return not_applicable("johnson", Direction::Upper, "no estimate for the constant-weight term");
}

// ---------------------------------------------------------------------------
// Recurrence

namespace {

// The LP bound as a report entry. With only rows k <= n the program can be
// unbounded on legitimate instances; that is reported, not thrown.
BoundValue lp_entry(const Params& p, std::optional<std::uint64_t> rows) {
    if (p.trivial()) return trivial_bound("lp", Direction::Upper, p);
    try {
        return lp_upper(p, rows);
    } catch (const SolverError& e) {
        BoundValue v = not_applicable(rows && *rows > p.n() ? "lp-ext" : "lp", Direction::Upper,
                                      "LP relaxation unbounded with the available rows");
        v.diagnostics.push_back(e.what());
        return v;
    }
}

class Recurrence {
public:
    Recurrence(std::uint32_t q, std::size_t b, const BoundOptions& options) : q_(q), b_(b), options_(options) {}

    /// Combined upper bound on A_b(n, d, q), recursing through the recurrence itself.
    BigInt combined(std::size_t n, std::size_t d) {
        if (d <= b_) return ipow(q_, n);
        if (auto it = memo_.find({n, d}); it != memo_.end()) return it->second;
        const Params p(q_, b_, n, d);
        BigInt best = p.space_size();
        auto consider = [&](const BoundValue& v) {
            if (v.usable() && v.value < best) best = v.value;
        };
        if (options_.known)
            if (auto exact = options_.known->exact(p)) best = std::min(best, *exact);
        consider(singleton_upper(p));
        consider(sphere_packing_song_upper(p));
        consider(sphere_packing_alphabet_upper(p));
        consider(plotkin_upper(p));
        consider(elias_upper(p));
        consider(johnson_even_upper(p, options_));
        if (options_.use_lp) consider(lp_entry(p, lp_rows(p)));
        if (auto rec = best_term(p)) consider(*rec);
        memo_.emplace(std::make_pair(n, d), best);
        return best;
    }

    std::optional<BoundValue> term(const Params& p, std::size_t m, std::size_t r) {
        if (m < 1 || r > m || p.d() < 2 || m >= p.n()) return std::nullopt;
        if (p.d() < 2 * r + b_ || p.d() - 2 * r > p.n() - m) return std::nullopt;
        const std::size_t sub_n = p.n() - m;
        const std::size_t sub_d = p.d() - 2 * r - b_ + 1;
        const BigInt sub = combined(sub_n, sub_d);
        const Rational value = Rational(ipow(q_, m)) / Rational(ball_size(m, r, q_, b_)) * Rational(sub);
        BoundValue v = make_upper("recurrence", value);
        v.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) + " A(" + std::to_string(sub_n) + "," +
                   std::to_string(sub_d) + ")<=" + sub.get_str();
        return v;
    }

    std::optional<BoundValue> best_term(const Params& p) {
        std::optional<BoundValue> best;
        for (std::size_t r = 0; 2 * r + b_ <= p.d(); ++r) {
            for (std::size_t m = std::max<std::size_t>(r, 1); m < p.n(); ++m) {
                auto v = term(p, m, r);
                if (v && (!best || v->value < best->value)) best = std::move(v);
            }
        }
        return best;
    }

private:
    std::optional<std::uint64_t> lp_rows(const Params& p) const {
        if (!options_.lp_k_max) return std::nullopt;
        const LPProblem shape = build_lp(p.q(), p.b(), p.n(), p.n() + 1);
        return std::min<std::uint64_t>(*options_.lp_k_max, shape.big_n);
    }

    std::uint32_t q_;
    std::size_t b_;
    const BoundOptions& options_;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> memo_;
};

}  // namespace

std::optional<BoundValue> recurrence_term(const Params& p, std::size_t m, std::size_t r, const BoundOptions& options) {
    Recurrence rec(p.q(), p.b(), options);
    return rec.term(p, m, r);
}

BoundValue recurrence_upper(const Params& p, const BoundOptions& options) {
    Recurrence rec(p.q(), p.b(), options);
    auto best = rec.best_term(p);
    if (!best) return not_applicable("recurrence", Direction::Upper, "no valid (m, r)");
    return *best;
}

// ---------------------------------------------------------------------------
// Aggregation

const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names{"singleton", "sp-song", "sp",         "gv", "gv-ball",
                                                "plotkin",   "elias",   "johnson", "recurrence", "lp"};
    return names;
}

BoundValue evaluate_method(const Params& p, const std::string& method, const BoundOptions& options) {
    if (method == "singleton") return singleton_upper(p);
    if (method == "sp-song") return sphere_packing_song_upper(p);
    if (method == "sp") return sphere_packing_alphabet_upper(p);
    if (method == "gv") return gv_alphabet_lower(p);
    if (method == "gv-ball") return gv_ball_lower(p);
    if (method == "plotkin") return plotkin_upper(p);
    if (method == "elias") return elias_upper(p);
    if (method == "johnson") return johnson_even_upper(p, options);
    if (method == "recurrence") return recurrence_upper(p, options);
    if (method == "lp") {
        std::optional<std::uint64_t> rows;
        if (options.lp_k_max) rows = std::min<std::uint64_t>(*options.lp_k_max, build_lp(p.q(), p.b(), p.n(), p.n() + 1).big_n);
        return lp_entry(p, rows);
    }
    throw ParameterError("unknown method '" + method + "'");
}

BoundReport evaluate_bounds(const Params& p, const BoundOptions& options) {
    BoundReport report{p, {}, {}, {}, {}};
    for (const auto& name : method_names()) {
        if (name == "lp" && !options.use_lp) continue;
        BoundValue v = evaluate_method(p, name, options);
        (v.direction == Direction::Upper ? report.uppers : report.lowers).push_back(std::move(v));
    }
    if (options.known) {
        if (auto exact = options.known->exact(p)) {
            BoundValue up = make_upper("search", Rational(*exact));
            up.detail = "certified";
            BoundValue low = up;
            low.direction = Direction::Lower;
            report.uppers.push_back(std::move(up));
            report.lowers.push_back(std::move(low));
        }
        if (auto w = options.known->witness(p)) {
            BoundValue low = make_lower("witness", Rational(*w));
            report.lowers.push_back(std::move(low));
        }
    }

    if (p.trivial()) {
        report.best_upper = trivial_bound("trivial", Direction::Upper, p);
        report.best_lower = trivial_bound("trivial", Direction::Lower, p);
        return report;
    }

    const BoundValue* up = nullptr;
    for (const auto& v : report.uppers)
        if (v.usable() && (!up || v.value < up->value)) up = &v;
    // The alphabet GV expression is listed but never chosen: a code over the
    // large alphabet need not be the window image of any q-ary code, and the
    // expression does exceed the true maximum on small instances.
    const BoundValue* low = nullptr;
    for (const auto& v : report.lowers)
        if (v.usable() && v.method != "gv" && (!low || v.value > low->value)) low = &v;

    report.best_upper = up ? *up : trivial_bound("space", Direction::Upper, p);
    if (!up) report.best_upper.status = Applicability::Applicable;
    report.best_lower = low ? *low : make_lower("trivial", Rational(1));
    if (report.best_lower.value > report.best_upper.value)
        report.best_upper.diagnostics.push_back("best lower bound exceeds best upper bound");
    return report;
}

BoundValue best_upper(const Params& p, const BoundOptions& options) { return evaluate_bounds(p, options).best_upper; }

BoundValue best_lower(const Params& p, const BoundOptions& options) { return evaluate_bounds(p, options).best_lower; }

}  // namespace bsym
