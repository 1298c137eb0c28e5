#include "bsym/spheres.hpp"

#include "bsym/error.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace bsym {

namespace {

void validate(std::size_t n, std::uint32_t q, std::size_t b) {
    if (n < 1) throw ParameterError("length n must be at least 1");
    if (q < 2) throw ParameterError("alphabet size q must be at least 2");
    if (b < 1) throw ParameterError("window length b must be at least 1");
}

// counts[z] for z all-zero windows, weighted by (q-1)^popcount.
std::vector<BigInt> zero_window_counts(std::uint32_t q, std::size_t b, std::size_t n) {
    const std::size_t k = b - 1;  // state bits
    const std::uint32_t states = 1u << k;
    const std::uint32_t state_mask = states - 1;
    const BigInt unit = q - 1;
    std::vector<BigInt> total(n + 1, 0);

    std::vector<BigInt> unit_pow(k + 1);
    unit_pow[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) unit_pow[i] = unit_pow[i - 1] * unit;

    // table[state][zeros]; the newest bit is the lowest bit of `state`.
    using Table = std::vector<std::vector<BigInt>>;
    for (std::uint32_t prefix = 0; prefix < states; ++prefix) {
        // Prefix bits in reading order: bit (k-1-j) of `prefix` is position j.
        Table cur(states, std::vector<BigInt>(n + 1, 0));
        cur[prefix][0] = unit_pow[std::popcount(prefix)];
        for (std::size_t pos = k; pos < n; ++pos) {
            Table next(states, std::vector<BigInt>(n + 1, 0));
            for (std::uint32_t s = 0; s < states; ++s) {
                for (std::size_t z = 0; z + 1 <= n; ++z) {
                    const BigInt& v = cur[s][z];
                    if (v == 0) continue;
                    // Append 0: window of b zeros iff the state is all zero.
                    const std::uint32_t s0 = (s << 1) & state_mask;
                    next[s0][z + (s == 0 ? 1 : 0)] += v;
                    // Append 1: the completed window is nonzero.
                    const std::uint32_t s1 = ((s << 1) | 1u) & state_mask;
                    next[s1][z] += v * unit;
                }
            }
            cur = std::move(next);
        }
        // Wrap-around windows start at n-k .. n-1: they read the last k bits then the prefix.
        for (std::uint32_t s = 0; s < states; ++s) {
            const std::uint64_t joined = (std::uint64_t{s} << k) | prefix;  // 2k bits, reading order high to low
            std::size_t wrap_zero = 0;
            for (std::size_t t = 0; t < k; ++t) {
                // Window covers reading positions t .. t+b-1 of the 2k-bit sequence.
                const std::uint64_t window = (joined >> (2 * k - t - b)) & ((std::uint64_t{1} << b) - 1);
                wrap_zero += window == 0;
            }
            for (std::size_t z = 0; z <= n; ++z) {
                if (cur[s][z] == 0) continue;
                total[z + wrap_zero] += cur[s][z];
            }
        }
    }
    return total;
}

std::shared_ptr<SphereTable> compute_table(std::uint32_t q, std::size_t b, std::size_t n) {
    auto table = std::make_shared<SphereTable>();
    table->q = q;
    table->b = b;
    table->n = n;
    table->spheres.assign(n + 1, 0);
    if (n < b) {
        table->spheres[0] = 1;
        table->spheres[n] += ipow(q, n) - 1;
    } else {
        if (b > kMaxSphereWindow)
            throw CapacityError("sphere sizes support b <= " + std::to_string(kMaxSphereWindow));
        const auto zeros = zero_window_counts(q, b, n);
        for (std::size_t z = 0; z <= n; ++z) table->spheres[n - z] += zeros[z];
    }
    table->balls.resize(n + 1);
    BigInt acc = 0;
    for (std::size_t r = 0; r <= n; ++r) {
        acc += table->spheres[r];
        table->balls[r] = acc;
    }
    return table;
}

}  // namespace

std::shared_ptr<const SphereTable> sphere_table(std::uint32_t q, std::size_t b, std::size_t n) {
    validate(n, q, b);
    using Key = std::tuple<std::uint32_t, std::size_t, std::size_t>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const SphereTable>> memo;
    const Key key{q, b, n};
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    std::shared_ptr<const SphereTable> table = compute_table(q, b, n);
    std::lock_guard lock(mutex);
    return memo.emplace(key, table).first->second;
}

BigInt sphere_size(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b) {
    validate(n, q, b);
    if (r > n) return 0;
    return sphere_table(q, b, n)->spheres[r];
}

BigInt ball_size(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b) {
    validate(n, q, b);
    const auto table = sphere_table(q, b, n);
    return table->balls[r > n ? n : r];
}

BigInt ball_size_bruteforce(std::size_t n, std::size_t r, std::uint32_t q, std::size_t b) {
    validate(n, q, b);
    if (n > 20) throw CapacityError("brute-force ball enumeration supports n <= 20");
    const BigInt unit = q - 1;
    std::vector<BigInt> unit_pow(n + 1);
    unit_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) unit_pow[i] = unit_pow[i - 1] * unit;

    BigInt total = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool nonzero = false;
            for (std::size_t j = 0; j < b && !nonzero; ++j) nonzero = (s >> ((i + j) % n)) & 1u;
            weight += nonzero;
        }
        if (weight <= r) total += unit_pow[std::popcount(s)];
    }
    return total;
}

}  // namespace bsym
