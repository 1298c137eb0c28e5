#include "bsym/metric.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bsym {

namespace {

void require_same_shape(const Word& x, const Word& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw DimensionError("words differ in length or alphabet: (n=" + std::to_string(x.size()) +
                             ", q=" + std::to_string(x.q()) + ") vs (n=" + std::to_string(y.size()) +
                             ", q=" + std::to_string(y.q()) + ")");
}

void require_window(std::size_t b) {
    if (b < 1) throw ParameterError("window length b must be at least 1");
}

// Window starting at 0-based position `start` of a cyclic sequence of period `period`
// laid out from `offset` in `z`.
bool window_nonzero(std::span<const Symbol> z, std::size_t offset, std::size_t period, std::size_t start,
                    std::size_t b) {
    for (std::size_t j = 0; j < b; ++j)
        if (z[offset + (start + j) % period] != 0) return true;
    return false;
}

}  // namespace

Word::Word(std::uint32_t q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    if (q_ < 2) throw ParameterError("alphabet size q must be at least 2");
    if (symbols_.empty()) throw ParameterError("word length must be at least 1");
    for (Symbol s : symbols_)
        if (s >= q_) throw ParameterError("symbol " + std::to_string(s) + " outside [0, " + std::to_string(q_ - 1) + "]");
}

Word Word::zero(std::uint32_t q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Word Word::from_index(std::uint32_t q, std::size_t n, std::uint64_t index) {
    std::vector<Symbol> s(n);
    for (std::size_t i = n; i-- > 0;) {
        s[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    if (index != 0) throw ParameterError("index out of range for q^n");
    return Word(q, std::move(s));
}

std::uint64_t Word::to_index() const {
    std::uint64_t v = 0;
    for (Symbol s : symbols_) {
        if (v > (std::numeric_limits<std::uint64_t>::max() - s) / q_) throw CapacityError("word index exceeds 64 bits");
        v = v * q_ + s;
    }
    return v;
}

bool Word::is_zero() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s == 0; });
}

Word Word::operator+(const Word& other) const {
    require_same_shape(*this, other);
    std::vector<Symbol> s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = (symbols_[i] + other.symbols_[i]) % q_;
    return Word(q_, std::move(s));
}

Word Word::operator-(const Word& other) const {
    require_same_shape(*this, other);
    std::vector<Symbol> s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = (symbols_[i] + q_ - other.symbols_[i]) % q_;
    return Word(q_, std::move(s));
}

Word Word::rotated(std::size_t k) const {
    std::vector<Symbol> s(symbols_);
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k % s.size()), s.end());
    return Word(q_, std::move(s));
}

Code::Code(std::uint32_t q, std::size_t n, std::vector<Word> words) : q_(q), n_(n) {
    for (auto& w : words) insert(std::move(w));
}

void Code::insert(Word w) {
    if (w.size() != n_ || w.q() != q_)
        throw DimensionError("word of length " + std::to_string(w.size()) + " over q=" + std::to_string(w.q()) +
                             " does not fit a code with n=" + std::to_string(n_) + ", q=" + std::to_string(q_));
    if (contains(w)) throw ParameterError("duplicate codeword");
    auto pos = std::lower_bound(sorted_.begin(), sorted_.end(), w);
    sorted_.insert(pos, w);
    words_.push_back(std::move(w));
}

bool Code::contains(const Word& w) const { return std::binary_search(sorted_.begin(), sorted_.end(), w); }

std::vector<Window> bsym_expand(const Word& y, std::size_t b) {
    require_window(b);
    const std::size_t n = y.size();
    std::vector<Window> windows(n, Window(b));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b; ++j) windows[i][j] = y[(i + j) % n];
    return windows;
}

std::size_t hamming_weight(const Word& y) {
    return static_cast<std::size_t>(std::count_if(y.symbols().begin(), y.symbols().end(), [](Symbol s) { return s != 0; }));
}

std::size_t hamming_distance(const Word& x, const Word& y) {
    require_same_shape(x, y);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

std::size_t bsym_weight(const Word& y, std::size_t b) {
    require_window(b);
    const std::size_t n = y.size();
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += window_nonzero(y.symbols(), 0, n, i, b);
    return w;
}

std::size_t bsym_distance(const Word& x, const Word& y, std::size_t b) {
    require_same_shape(x, y);
    require_window(b);
    const std::size_t n = x.size();
    std::size_t d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            if (x[(i + j) % n] != y[(i + j) % n]) {
                ++d;
                break;
            }
        }
    }
    return d;
}

Word window_encode(const Word& y, std::size_t b) {
    require_window(b);
    const std::size_t n = y.size();
    if (n < b) throw UnsupportedParametersError("window_encode requires n >= b");
    std::uint64_t alphabet = 1;
    for (std::size_t j = 0; j < b; ++j) {
        alphabet *= y.q();
        if (alphabet > std::numeric_limits<Symbol>::max()) throw CapacityError("q^b does not fit a symbol");
    }
    std::vector<Symbol> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < b; ++j) v = v * y.q() + y[(i + j) % n];
        out[i] = static_cast<Symbol>(v);
    }
    return Word(static_cast<std::uint32_t>(alphabet), std::move(out));
}

DistanceDistribution distance_distribution(const Code& code, std::size_t b) {
    if (code.empty()) throw EmptyCodeError("distance distribution of an empty code");
    const std::size_t n = code.length();
    std::vector<std::uint64_t> counts(n + 1, 0);
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        ++counts[0];
        for (std::size_t j = i + 1; j < words.size(); ++j) counts[bsym_distance(words[i], words[j], b)] += 2;
    }
    DistanceDistribution dist;
    dist.code_size = words.size();
    dist.entries.reserve(n + 1);
    for (auto c : counts) {
        Rational r(BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(words.size())));
        r.canonicalize();
        dist.entries.push_back(r);
    }
    return dist;
}

std::size_t min_bsym_distance(const Code& code, std::size_t b) {
    if (code.size() < 2) throw UndefinedDistanceError("minimum distance needs at least two codewords");
    const auto& words = code.words();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, bsym_distance(words[i], words[j], b));
    return best;
}

WeightEnumerator weight_enumerator(const Code& code, std::size_t b) {
    WeightEnumerator e;
    e.metric = b == 1 ? EnumeratorMetric::Hamming : EnumeratorMetric::BSymbol;
    e.coefficients.assign(code.length() + 1, 0);
    for (const auto& c : code) ++e.coefficients[bsym_weight(c, b)];
    return e;
}

std::array<std::size_t, 4> boundary_blocks(const Word& z, std::size_t l, std::size_t b) {
    const std::size_t n = z.size();
    if (b < 2 || b > n) throw ParameterError("boundary_blocks requires n >= b >= 2");
    if (l < b || l > n) throw ParameterError("boundary_blocks requires n >= l >= b");
    const auto s = z.symbols();
    const std::size_t m = n - l;
    std::array<std::size_t, 4> w{0, 0, 0, 0};
    // 0-based window starts l-b+1 .. l-1 and n-b+1 .. n-1.
    for (std::size_t t = 0; t + 1 < b; ++t) {
        const std::size_t a = l - b + 1 + t;
        const std::size_t c = n - b + 1 + t;
        w[0] += window_nonzero(s, 0, n, a, b);
        w[1] += window_nonzero(s, 0, n, c, b);
        w[2] += window_nonzero(s, 0, l, a, b);
        // Suffix z_{l+1..n} read cyclically; with an empty suffix the full word wraps.
        w[3] += m == 0 ? window_nonzero(s, 0, n, c, b) : window_nonzero(s, l, m, c - l, b);
    }
    return w;
}

}  // namespace bsym
