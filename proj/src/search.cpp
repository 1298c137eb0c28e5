#include "bsym/search.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

namespace bsym {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Support patterns: bit (n-1-i) of a pattern marks coordinate i.

class PatternTable {
public:
    PatternTable(std::size_t n, std::size_t b) : n_(n), mask_((std::uint32_t{1} << n) - 1) {
        const std::uint32_t count = std::uint32_t{1} << n;
        weight_.resize(count);
        canon_.resize(count);
        std::vector<std::uint32_t> reversed(count);
        for (std::uint32_t s = 0; s < count; ++s) {
            std::uint32_t r = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (s >> i & 1u) r |= std::uint32_t{1} << (n - 1 - i);
            reversed[s] = r;
        }
        for (std::uint32_t s = 0; s < count; ++s) {
            // A window starting at coordinate i is nonzero iff one of its b
            // coordinates is set; OR the pattern with its first b-1 rotations.
            std::uint32_t covered = s;
            for (std::size_t j = 1; j < b; ++j) covered |= rotate(s, j);
            weight_[s] = static_cast<std::uint8_t>(std::popcount(covered & mask_));
            std::uint32_t best = s;
            for (std::size_t j = 0; j < n; ++j) {
                best = std::min(best, rotate(s, j));
                best = std::min(best, rotate(reversed[s], j));
            }
            canon_[s] = best;
        }
    }

    std::size_t weight(std::uint32_t s) const { return weight_[s]; }
    std::uint32_t canon(std::uint32_t s) const { return canon_[s]; }

private:
    std::uint32_t rotate(std::uint32_t s, std::size_t k) const {
        k %= n_;
        if (k == 0) return s;
        return ((s << k) | (s >> (n_ - k))) & mask_;
    }

    std::size_t n_;
    std::uint32_t mask_;
    std::vector<std::uint8_t> weight_;
    std::vector<std::uint32_t> canon_;
};

class Space {
public:
    Space(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
        size_ = 1;
        for (std::size_t i = 0; i < n; ++i) size_ *= q;
        if (q_ != 2) {
            // Symbols are stored whole and also packed as base-2^k fields, k the
            // symbol bit width, so a difference support is one XOR plus a fold.
            bits_ = static_cast<std::size_t>(std::bit_width(q_ - 1));
            if (bits_ * n_ > 64) throw CapacityError("search packs a word into 64 bits");
            digits_.resize(size_ * n_);
            packed_.resize(size_);
            for (std::uint64_t x = 0; x < size_; ++x) {
                std::uint64_t v = x, word = 0;
                for (std::size_t i = n_; i-- > 0;) {
                    const auto digit = static_cast<std::uint8_t>(v % q_);
                    digits_[x * n_ + i] = digit;
                    word |= std::uint64_t{digit} << (bits_ * (n_ - 1 - i));
                    v /= q_;
                }
                packed_[x] = word;
            }
        }
    }

    std::uint64_t size() const { return size_; }

    std::uint32_t support(std::uint64_t x) const {
        if (q_ == 2) return static_cast<std::uint32_t>(x);
        return fold(packed_[x]);
    }

    std::uint32_t diff(std::uint64_t x, std::uint64_t y) const {
        if (q_ == 2) return static_cast<std::uint32_t>(x ^ y);
        return fold(packed_[x] ^ packed_[y]);
    }

    std::uint32_t symbol(std::uint64_t x, std::size_t i) const {
        if (q_ == 2) return static_cast<std::uint32_t>(x >> (n_ - 1 - i) & 1u);
        return digits_[x * n_ + i];
    }

    /// The word with symbol 1 on the support pattern and 0 elsewhere.
    std::uint64_t indicator(std::uint32_t pattern) const {
        std::uint64_t x = 0;
        for (std::size_t i = n_; i-- > 0;) x = x * q_ + ((pattern >> i) & 1u);
        return x;
    }

private:
    // One bit per field: set iff the field is nonzero.
    std::uint32_t fold(std::uint64_t word) const {
        if (bits_ == 2) {
            std::uint64_t m = (word | (word >> 1)) & 0x5555555555555555ull;
            m = (m | (m >> 1)) & 0x3333333333333333ull;
            m = (m | (m >> 2)) & 0x0F0F0F0F0F0F0F0Full;
            m = (m | (m >> 4)) & 0x00FF00FF00FF00FFull;
            m = (m | (m >> 8)) & 0x0000FFFF0000FFFFull;
            m = (m | (m >> 16)) & 0x00000000FFFFFFFFull;
            return static_cast<std::uint32_t>(m);
        }
        const std::uint64_t field = (std::uint64_t{1} << bits_) - 1;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s |= std::uint32_t{((word >> (bits_ * i)) & field) != 0} << i;
        return s;
    }

    std::uint32_t q_;
    std::size_t n_;
    std::uint64_t size_;
    std::size_t bits_ = 1;
    std::vector<std::uint8_t> digits_;
    std::vector<std::uint64_t> packed_;
};

// ---------------------------------------------------------------------------
// Bitsets over a branch's local vertex numbering.

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool any_bit(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

struct Branch {
    std::vector<std::uint64_t> fixed;     // words already in the code
    std::vector<std::uint64_t> vertices;  // candidate words
    std::vector<Bits> adjacency;
    // projections[j][v]: symbols of vertex v on a cyclic block starting at j.
    // Two words agreeing on such a block are never adjacent, so every block
    // offers a colouring by projection value.
    std::vector<std::vector<std::uint32_t>> projections;
    std::uint32_t projection_values = 0;
};

struct Shared {
    std::atomic<std::size_t> best{0};
    std::mutex witness_mutex;
    std::vector<std::uint64_t> witness;
    std::atomic<bool> aborted{false};
    std::atomic<std::uint64_t> nodes{0};
    Clock::time_point deadline;
    std::optional<std::uint64_t> node_limit;

    void offer(std::vector<std::uint64_t> code) {
        std::lock_guard lock(witness_mutex);
        if (code.size() <= witness.size()) return;
        witness = std::move(code);
        std::size_t cur = best.load();
        while (cur < witness.size() && !best.compare_exchange_weak(cur, witness.size())) {
        }
    }
};

// Bitset branch-and-bound maximum clique with greedy colouring bounds.
class CliqueSearch {
public:
    CliqueSearch(const Branch& branch, Shared& shared) : branch_(branch), shared_(shared) {
        words_ = (branch.vertices.size() + 63) / 64;
    }

    void run() {
        Bits all(words_, 0);
        for (std::size_t v = 0; v < branch_.vertices.size(); ++v) set_bit(all, v);
        if (branch_.vertices.empty()) {
            offer();
            return;
        }
        expand(all);
        shared_.nodes += local_nodes_;
        local_nodes_ = 0;
    }

private:
    void offer() {
        if (branch_.fixed.size() + current_.size() <= shared_.best.load()) return;
        std::vector<std::uint64_t> code = branch_.fixed;
        for (std::size_t v : current_) code.push_back(branch_.vertices[v]);
        shared_.offer(std::move(code));
    }

    bool out_of_budget() {
        const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        if (shared_.node_limit && total >= *shared_.node_limit) return true;
        return Clock::now() >= shared_.deadline;
    }

    void expand(Bits candidates) {
        if (shared_.aborted.load(std::memory_order_relaxed)) return;
        if (++local_nodes_ >= 512 && out_of_budget()) {
            shared_.aborted = true;
            return;
        }

        // Greedy colouring in vertex order; only colours that could still beat
        // the incumbent are kept.
        const std::size_t base = branch_.fixed.size() + current_.size();
        const std::size_t best = shared_.best.load(std::memory_order_relaxed);
        const std::size_t min_colour = best >= base ? best - base + 1 : 1;
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        Bits uncoloured = candidates;
        std::size_t k = 0;
        while (any_bit(uncoloured)) {
            ++k;
            Bits open = uncoloured;
            for (std::size_t w = 0; w < words_; ++w) {
                while (open[w]) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
                    clear_bit(open, v);
                    clear_bit(uncoloured, v);
                    const Bits& nv = branch_.adjacency[v];
                    for (std::size_t u = w; u < words_; ++u) open[u] &= ~nv[u];
                    if (k >= min_colour) {
                        order.push_back(v);
                        colour.push_back(k);
                    }
                }
            }
        }

        std::vector<std::size_t> bound;
        if (!branch_.projections.empty()) projection_bounds(candidates, k, order, bound);

        for (std::size_t i = order.size(); i-- > 0;) {
            const std::size_t limit = bound.empty() ? colour[i] : std::min(colour[i], bound[i]);
            if (base + limit <= shared_.best.load(std::memory_order_relaxed)) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bits next(words_);
            const Bits& nv = branch_.adjacency[v];
            for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & nv[w];
            if (any_bit(next)) expand(std::move(next));
            else offer();
            current_.pop_back();
            if (shared_.aborted.load(std::memory_order_relaxed)) return;
            clear_bit(candidates, v);
        }
    }

    // bound[i] = distinct projection values, on the block that needs fewest
    // colours, among the candidates still present when order[i] is branched on
    // (order[0..i] plus the vertices below min_colour).
    void projection_bounds(const Bits& candidates, std::size_t colours, const std::vector<std::size_t>& order,
                           std::vector<std::size_t>& bound) {
        if (stamp_.empty()) stamp_.assign(branch_.projection_values, 0);
        std::size_t best_block = branch_.projections.size(), best_count = colours;
        for (std::size_t j = 0; j < branch_.projections.size(); ++j) {
            const auto& proj = branch_.projections[j];
            ++generation_;
            std::size_t count = 0;
            for (std::size_t w = 0; w < words_ && count < best_count; ++w)
                for (std::uint64_t bits = candidates[w]; bits; bits &= bits - 1) {
                    const std::uint32_t value = proj[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
                    if (stamp_[value] != generation_) {
                        stamp_[value] = generation_;
                        ++count;
                    }
                }
            if (count < best_count) {
                best_count = count;
                best_block = j;
            }
        }
        if (best_block == branch_.projections.size()) return;

        const auto& proj = branch_.projections[best_block];
        Bits low = candidates;
        for (std::size_t v : order) clear_bit(low, v);
        ++generation_;
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_; ++w)
            for (std::uint64_t bits = low[w]; bits; bits &= bits - 1) {
                const std::uint32_t value = proj[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
                if (stamp_[value] != generation_) {
                    stamp_[value] = generation_;
                    ++count;
                }
            }
        bound.resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::uint32_t value = proj[order[i]];
            if (stamp_[value] != generation_) {
                stamp_[value] = generation_;
                ++count;
            }
            bound[i] = count;
        }
    }

    const Branch& branch_;
    Shared& shared_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
    std::size_t words_;
    std::vector<std::size_t> current_;
    std::uint64_t local_nodes_ = 0;
};

// Builds adjacency for `vertices` under `edge`, numbering vertices in the
// requested order. Edges are evaluated twice (degrees, then bitsets) to avoid
// materialising edge lists on dense graphs.
template <typename Edge>
void finish_branch(Branch& branch, const Edge& edge, VertexOrder order) {
    const std::size_t count = branch.vertices.size();
    if (order == VertexOrder::DegreeDescending) {
        std::vector<std::uint32_t> degree(count, 0);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                if (edge(branch.vertices[i], branch.vertices[j])) {
                    ++degree[i];
                    ++degree[j];
                }
        std::vector<std::size_t> perm(count);
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
        std::vector<std::uint64_t> vertices(count);
        for (std::size_t i = 0; i < count; ++i) vertices[i] = branch.vertices[perm[i]];
        branch.vertices = std::move(vertices);
    }

    const std::size_t words = (count + 63) / 64;
    branch.adjacency.assign(count, Bits(words, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (edge(branch.vertices[i], branch.vertices[j])) {
                set_bit(branch.adjacency[i], j);
                set_bit(branch.adjacency[j], i);
            }
}

// Agreement on n - d + b cyclically consecutive coordinates leaves at most
// d - 1 differing windows, so words sharing such a block are never adjacent.
void add_projections(Branch& branch, const Space& space, std::uint32_t q, std::size_t n, std::size_t b,
                     std::size_t d) {
    if (d > n || d <= b) return;
    const std::size_t len = n - d + b;
    std::uint64_t values = 1;
    for (std::size_t i = 0; i < len; ++i) values *= q;
    if (values > (std::uint64_t{1} << 18)) return;
    branch.projection_values = static_cast<std::uint32_t>(values);
    branch.projections.assign(n, std::vector<std::uint32_t>(branch.vertices.size()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t v = 0; v < branch.vertices.size(); ++v) {
            std::uint32_t value = 0;
            for (std::size_t i = 0; i < len; ++i) value = value * q + space.symbol(branch.vertices[v], (j + i) % n);
            branch.projections[j][v] = value;
        }
}

// Fewest distinct block projections among `vertices` over all block starts, an
// upper bound on any clique inside them; SIZE_MAX when blocks do not apply.
std::size_t projection_ceiling(const std::vector<std::uint64_t>& vertices, const Space& space, std::uint32_t q,
                               std::size_t n, std::size_t b, std::size_t d) {
    if (d > n || d <= b) return SIZE_MAX;
    const std::size_t len = n - d + b;
    std::uint64_t values = 1;
    for (std::size_t i = 0; i < len; ++i) values *= q;
    if (values > (std::uint64_t{1} << 18)) return SIZE_MAX;
    std::vector<std::uint32_t> stamp(values, 0);
    std::size_t best = SIZE_MAX;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t count = 0;
        for (std::uint64_t x : vertices) {
            std::uint32_t value = 0;
            for (std::size_t i = 0; i < len; ++i) value = value * q + space.symbol(x, (j + i) % n);
            if (stamp[value] != j + 1) {
                stamp[value] = static_cast<std::uint32_t>(j + 1);
                ++count;
            }
        }
        best = std::min(best, count);
    }
    return best;
}

struct Job {
    const Space* space;
    const PatternTable* patterns;
    std::size_t d;
    std::size_t max_vertices;
    VertexOrder order;
};

unsigned worker_count(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `make_branch(i)` for i in [0, count) across threads and searches each.
template <typename MakeBranch>
SearchResult run_branches(std::size_t count, const MakeBranch& make_branch, Shared& shared,
                          const SearchOptions& options, std::uint32_t q, std::size_t n, Clock::time_point start) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> capacity_hit{false};
    auto worker = [&] {
        for (;;) {
            if (shared.aborted.load() || capacity_hit.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            std::optional<Branch> branch = make_branch(i);
            if (!branch) {
                capacity_hit = true;
                shared.aborted = true;
                return;
            }
            if (branch->fixed.size() + branch->vertices.size() <= shared.best.load()) continue;
            CliqueSearch(*branch, shared).run();
        }
    };
    const unsigned threads = std::min<unsigned>(worker_count(options.threads), std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (capacity_hit) throw CapacityError("compatibility graph exceeds " + std::to_string(options.max_vertices) + " vertices");

    SearchResult result;
    result.q = q;
    result.n = n;
    result.witness = shared.witness;
    result.best_size = result.witness.size();
    result.certified = !shared.aborted.load();
    result.nodes = shared.nodes.load();
    result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

void check_capacity(const Params& p, const SearchOptions& options) {
    if (!pow_fits(p.q(), p.n(), options.max_space))
        throw CapacityError("q^n exceeds the enumeration limit of " + std::to_string(options.max_space));
    if (p.n() > 24) throw CapacityError("search supports n <= 24");
}

Shared& init_shared(Shared& shared, const SearchOptions& options, Clock::time_point start) {
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(std::max(0.0, options.time_limit_seconds)));
    shared.node_limit = options.node_limit;
    return shared;
}

}  // namespace

Code SearchResult::witness_code() const {
    Code code(q, n);
    for (std::uint64_t x : witness) code.insert(Word::from_index(q, n, x));
    return code;
}

SearchResult exact_max_code(const Params& p, const SearchOptions& options) {
    check_capacity(p, options);
    const auto start = Clock::now();
    const Space space(p.q(), p.n());

    if (p.trivial()) {
        SearchResult r;
        r.q = p.q();
        r.n = p.n();
        r.best_size = static_cast<std::size_t>(space.size());
        r.witness.resize(space.size());
        std::iota(r.witness.begin(), r.witness.end(), std::uint64_t{0});
        r.certified = true;
        r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return r;
    }

    const PatternTable patterns(p.n(), p.b());
    const std::size_t d = p.d();
    auto far = [&](std::uint32_t s) { return patterns.weight(s) >= d; };

    std::vector<std::uint64_t> neighbours;  // words compatible with 0
    for (std::uint64_t x = 1; x < space.size(); ++x)
        if (far(space.support(x))) neighbours.push_back(x);

    Shared shared;
    init_shared(shared, options, start);
    {
        // Lexicographic greedy code as the starting incumbent.
        std::vector<std::uint64_t> greedy{0};
        for (std::uint64_t x : neighbours) {
            bool ok = true;
            for (std::size_t i = 1; i < greedy.size() && ok; ++i) ok = far(space.diff(x, greedy[i]));
            if (ok) greedy.push_back(x);
        }
        shared.offer(std::move(greedy));
    }

    if (options.symmetry == Symmetry::Translation) {
        auto make = [&](std::size_t) -> std::optional<Branch> {
            if (neighbours.size() > options.max_vertices) return std::nullopt;
            Branch br;
            br.fixed = {0};
            br.vertices = neighbours;
            finish_branch(br, [&](std::uint64_t x, std::uint64_t y) { return far(space.diff(x, y)); }, options.order);
            add_projections(br, space, p.q(), p.n(), p.b(), d);
            return br;
        };
        return run_branches(1, make, shared, options, p.q(), p.n(), start);
    }

    std::vector<std::uint32_t> classes;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << p.n()); ++s)
        if (patterns.canon(s) == s && far(s)) classes.push_back(s);

    auto make = [&](std::size_t i) -> std::optional<Branch> {
        const std::uint32_t s = classes[i];
        const std::uint64_t m = space.indicator(s);
        Branch br;
        br.fixed = {0, m};
        for (std::uint64_t x : neighbours) {
            if (x == m || patterns.canon(space.support(x)) < s) continue;
            const std::uint32_t dm = space.diff(x, m);
            if (far(dm) && patterns.canon(dm) >= s) br.vertices.push_back(x);
        }
        if (br.fixed.size() + projection_ceiling(br.vertices, space, p.q(), p.n(), p.b(), d) <= shared.best.load()) {
            br.vertices.clear();
            return br;
        }
        if (br.vertices.size() > options.max_vertices) return std::nullopt;
        finish_branch(
            br,
            [&](std::uint64_t x, std::uint64_t y) {
                const std::uint32_t dxy = space.diff(x, y);
                return far(dxy) && patterns.canon(dxy) >= s;
            },
            options.order);
        add_projections(br, space, p.q(), p.n(), p.b(), d);
        return br;
    };
    return run_branches(classes.size(), make, shared, options, p.q(), p.n(), start);
}

SearchResult exact_max_constant_weight(const Params& p, std::size_t w, const SearchOptions& options) {
    if (w != 0 && (w < p.b() || w > p.n())) throw ParameterError("constant weight must be 0 or in [b, n]");
    check_capacity(p, options);
    const auto start = Clock::now();

    if (w == 0) {
        SearchResult r;
        r.q = p.q();
        r.n = p.n();
        r.best_size = 1;
        r.witness = {0};
        r.certified = true;
        return r;
    }

    const Space space(p.q(), p.n());
    const PatternTable patterns(p.n(), p.b());
    const std::size_t d = p.d();
    auto far = [&](std::uint32_t s) { return patterns.weight(s) >= d; };

    std::vector<std::uint64_t> words;
    for (std::uint64_t x = 1; x < space.size(); ++x)
        if (patterns.weight(space.support(x)) == w) words.push_back(x);

    Shared shared;
    init_shared(shared, options, start);
    {
        std::vector<std::uint64_t> greedy;
        for (std::uint64_t x : words) {
            bool ok = true;
            for (std::size_t i = 0; i < greedy.size() && ok; ++i) ok = far(space.diff(x, greedy[i]));
            if (ok) greedy.push_back(x);
        }
        shared.offer(std::move(greedy));
    }
    auto edge = [&](std::uint64_t x, std::uint64_t y) { return far(space.diff(x, y)); };

    if (options.symmetry == Symmetry::Translation) {
        auto make = [&](std::size_t) -> std::optional<Branch> {
            if (words.size() > options.max_vertices) return std::nullopt;
            Branch br;
            br.vertices = words;
            finish_branch(br, edge, options.order);
            add_projections(br, space, p.q(), p.n(), p.b(), d);
            return br;
        };
        return run_branches(1, make, shared, options, p.q(), p.n(), start);
    }

    // Weight and distance are preserved by per-coordinate symbol permutations
    // fixing 0 and by rotations/reflections, so the word of smallest canonical
    // support can be taken to be the 0/1 word of a canonical pattern.
    std::vector<std::uint32_t> classes;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << p.n()); ++s)
        if (patterns.canon(s) == s && patterns.weight(s) == w) classes.push_back(s);

    auto make = [&](std::size_t i) -> std::optional<Branch> {
        const std::uint32_t s = classes[i];
        const std::uint64_t m = space.indicator(s);
        Branch br;
        br.fixed = {m};
        for (std::uint64_t x : words)
            if (x != m && patterns.canon(space.support(x)) >= s && far(space.diff(x, m))) br.vertices.push_back(x);
        if (br.fixed.size() + projection_ceiling(br.vertices, space, p.q(), p.n(), p.b(), d) <= shared.best.load()) {
            br.vertices.clear();
            return br;
        }
        if (br.vertices.size() > options.max_vertices) return std::nullopt;
        finish_branch(br, edge, options.order);
        add_projections(br, space, p.q(), p.n(), p.b(), d);
        return br;
    };
    return run_branches(classes.size(), make, shared, options, p.q(), p.n(), start);
}

VerifyReport verify_code(const Code& code, std::size_t b) {
    if (code.empty()) throw EmptyCodeError("cannot verify an empty code");
    VerifyReport r;
    r.q = code.q();
    r.n = code.length();
    r.b = b;
    r.size = code.size();
    if (code.size() >= 2) r.min_distance = min_bsym_distance(code, b);
    r.enumerator = weight_enumerator(code, b);
    std::size_t nonzero_classes = 0, weight = 0;
    for (std::size_t i = 0; i < r.enumerator.coefficients.size(); ++i)
        if (r.enumerator.coefficients[i]) {
            ++nonzero_classes;
            weight = i;
        }
    if (nonzero_classes == 1) r.constant_weight = weight;
    return r;
}

}  // namespace bsym
