#include "bsym/numeric.hpp"

#include "bsym/error.hpp"

namespace bsym {

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw ParameterError("binomial: negative upper argument");
    if (k < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

BigInt floor_of(const Rational& x) {
    BigInt result;
    mpz_fdiv_q(result.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return result;
}

BigInt ceil_of(const Rational& x) {
    BigInt result;
    mpz_cdiv_q(result.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return result;
}

std::string to_string(const Rational& x) {
    Rational canon(x);
    canon.canonicalize();
    if (canon.get_den() == 1) return canon.get_num().get_str();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParameterError("empty rational");
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParameterError("malformed rational '" + text + "'");
    Rational r(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den[0] == '+' ? den.substr(1) : den));
    if (r.get_den() == 0) throw ParameterError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& x, unsigned digits) {
    const bool negative = sgn(x) < 0;
    Rational a = negative ? Rational(-x) : x;
    BigInt scaled = floor_of(a * Rational(ipow(10, digits)));
    std::string s = scaled.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

bool pow_fits(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > limit / base) return false;
        v *= base;
    }
    return v <= limit;
}

}  // namespace bsym
