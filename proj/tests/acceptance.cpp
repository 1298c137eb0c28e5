// Acceptance run: one PASS/FAIL line per criterion.
//
// A FAIL is tagged "known" only when the observed outcome is exactly the one
// analysed in the README (for instance a search certifying a value different
// from the published one). Any other FAIL is unexpected and makes the process
// exit with status 1.

#include "oracles.hpp"

#include "bsym/bounds.hpp"
#include "bsym/cli.hpp"
#include "bsym/code_io.hpp"
#include "bsym/lp.hpp"
#include "bsym/metric.hpp"
#include "bsym/search.hpp"
#include "bsym/spheres.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace bsym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(s < 10 ? 2 : 1);
    o << std::fixed << s << "s";
    return o.str();
}

int unexpected = 0;
int known = 0;

void report(const std::string& id, bool pass, const std::string& what, const std::string& detail,
            bool known_failure = false) {
    std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << what << "  [" << detail << "]";
    if (!pass) {
        if (known_failure) {
            std::cout << "  (known, see README)";
            ++known;
        } else {
            std::cout << "  (UNEXPECTED)";
            ++unexpected;
        }
    }
    std::cout << std::endl;
}

std::uint64_t power(std::uint32_t q, std::size_t n) {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < n; ++i) t *= q;
    return t;
}

// Codes gathered along the way for the LP feasibility check.
struct CorpusCode {
    std::string name;
    Code code;
    std::size_t b;
    std::size_t d;
};
std::vector<CorpusCode> corpus;

void add_witness(const std::string& name, const SearchResult& r, std::size_t b, std::size_t d) {
    if (r.best_size >= 2) corpus.push_back({name, r.witness_code(), b, d});
}

bool witness_valid(const SearchResult& r, std::size_t b, std::size_t d) {
    const Code c = r.witness_code();
    if (c.size() != r.best_size) return false;
    return c.size() < 2 || min_bsym_distance(c, b) >= d;
}

std::string cell(std::uint32_t q, std::size_t b, std::size_t n, std::size_t d) {
    return "(" + std::to_string(q) + "," + std::to_string(b) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
}

// ---------------------------------------------------------------------------

void golden_values() {
    {
        const auto start = Clock::now();
        const Params p(2, 3, 11, 10);
        KnownValues injected;
        injected.set_exact(Params(2, 3, 10, 8), 23);
        BoundOptions opts;
        opts.known = &injected;
        const auto term = recurrence_term(p, 1, 0, opts);
        const BigInt ball = ball_size(11, 4, 2, 3);
        const BoundValue sp = sphere_packing_song_upper(p);
        const bool ok = ball == 23 && sp.value == 89 && term && term->value == 46;
        report("C1.1", ok && seconds_since(start) < 10, "ball B_3(11,4)=23, sphere packing (2,3,11,10)=89, recurrence term=46",
               "ball=" + ball.get_str() + " sp=" + sp.value.get_str() + " recurrence=" +
                   (term ? term->value.get_str() : std::string("none")) + " " + fmt_seconds(seconds_since(start)));
    }
    {
        const auto start = Clock::now();
        const BoundValue pl = plotkin_upper(Params(2, 3, 7, 7));
        const CodeFile f = read_code_file(BSYM_TEST_DATA "/plotkin_7_7.code");
        const VerifyReport v = verify_code(f.code, 3);
        const bool ok = pl.value == 8 && pl.exact == Rational(8) && v.size == 8 && v.min_distance == 7u;
        report("C1.2", ok && seconds_since(start) < 10, "Plotkin (2,3,7,7)=8 and the listed code has M=8, d_3=7",
               "plotkin=" + pl.value.get_str() + " M=" + std::to_string(v.size) +
                   " d=" + (v.min_distance ? std::to_string(*v.min_distance) : std::string("undefined")));
    }
    {
        const auto start = Clock::now();
        const BoundValue gv = gv_alphabet_lower(Params(2, 3, 10, 8));
        const BoundValue ball = gv_ball_lower(Params(2, 3, 10, 8));
        const bool in_range = gv.exact && *gv.exact >= Rational(8368, 1000) && *gv.exact < Rational(8369, 1000);
        report("C1.3", in_range && gv.value == 9 && ball.value == 6 && seconds_since(start) < 10,
               "GV (2,3,10,8) rational in [8.368,8.369), bound 9; ball GV 6",
               "rational=" + (gv.exact ? gv.exact->get_str() : std::string("none")) + " (" +
                   std::to_string(gv.exact ? gv.exact->get_d() : 0.0) + ") bound=" + gv.value.get_str() +
                   " ball=" + ball.value.get_str());
    }
    {
        const auto start = Clock::now();
        const LPProblem lp = build_lp(2, 2, 11, 10);
        const std::vector<std::array<long, 3>> listed{
            {1, 1, 1},         {33, -7, -11},     {528, 8, 44},           {5456, 56, -44},
            {40920, -160, -220}, {237336, -112, 748}, {1107568, 904, -308}, {4272048, -456, -2508},
            {13884156, -2652, 4488}, {38567100, 3380, 1760}, {92561040, 4264, -13156}, {193536720, -10088, 9316}};
        std::size_t matching = 0;
        if (lp.rows.size() == listed.size())
            for (std::size_t k = 0; k < listed.size(); ++k)
                matching += lp.rows[k].constant == listed[k][0] && lp.rows[k].coefficients.size() == 2 &&
                            lp.rows[k].coefficients[0] == listed[k][1] && lp.rows[k].coefficients[1] == listed[k][2];
        const LPSolution sol = solve_lp(lp);
        const BoundValue ub = lp_upper(Params(2, 2, 11, 10));
        const BoundValue song = sphere_packing_song_upper(Params(2, 2, 11, 10));
        // 40/7 was confirmed with an independent floating-point LP solver.
        const bool ok = matching == 12 && lp.rows.size() == 12 && sol.status == SolveStatus::Optimal &&
                        sol.optimum == Rational(40, 7) && std::abs(sol.optimum.get_d() - 5.71428) < 1e-5 &&
                        ub.value == 5 && song.value == 26;
        report("C1.4", ok && seconds_since(start) < 10, "LP (2,2,11,10): 12 listed rows, optimum 40/7, bound 5; Song 26",
               "rows matching=" + std::to_string(matching) + "/" + std::to_string(lp.rows.size()) +
                   " optimum=" + sol.optimum.get_str() + " bound=" + ub.value.get_str() +
                   " song=" + song.value.get_str());
    }
}

// ---------------------------------------------------------------------------

void search_values() {
    SearchOptions opts;
    {
        opts.time_limit_seconds = 10;
        const auto r = exact_max_code(Params(2, 2, 11, 10), opts);
        add_witness("search (2,2,11,10)", r, 2, 10);
        report("C2.1", r.best_size == 4 && r.certified && r.elapsed_seconds < 10 && witness_valid(r, 2, 10),
               "A_2(11,10,2)=4 certified in <10s",
               std::to_string(r.best_size) + (r.certified ? " certified " : " uncertified ") + fmt_seconds(r.elapsed_seconds));
    }
    {
        opts.time_limit_seconds = 300;
        const auto r = exact_max_code(Params(2, 3, 11, 10), opts);
        add_witness("search (2,3,11,10)", r, 3, 10);
        const bool ok = r.best_size == 12 && r.certified && r.elapsed_seconds < 300;
        // The exhaustive search proves 16, and the witness is checked word by word.
        const bool as_analysed = r.best_size == 16 && r.certified && witness_valid(r, 3, 10);
        report("C2.2", ok, "A_3(11,10,2)=12 certified in <5min",
               std::to_string(r.best_size) + (r.certified ? " certified " : " uncertified ") + fmt_seconds(r.elapsed_seconds) +
                   "; a valid 16-word code exists",
               as_analysed);
    }
    {
        opts.time_limit_seconds = 600;
        const auto r = exact_max_code(Params(2, 3, 10, 8), opts);
        add_witness("search (2,3,10,8)", r, 3, 8);
        report("C2.3", r.best_size >= 23 && witness_valid(r, 3, 8) && r.elapsed_seconds < 600,
               "A_3(10,8,2)>=23 witnessed in <10min",
               "witness of " + std::to_string(r.best_size) + " words, d_3 verified, " + fmt_seconds(r.elapsed_seconds));
        const bool ok = r.best_size == 23 && r.certified;
        report("C2.4", ok, "A_3(10,8,2)=23 certified (extended, <2h)",
               std::to_string(r.best_size) + (r.certified ? " certified" : " uncertified") + "; 23 is not the maximum",
               r.best_size == 32 && r.certified && witness_valid(r, 3, 8));
    }
}

// ---------------------------------------------------------------------------

void sphere_oracle() {
    const auto start = Clock::now();
    std::size_t compared = 0, mismatches = 0;
    for (std::uint32_t q = 2; q <= 5; ++q)
        for (std::size_t b = 1; b <= 4; ++b)
            for (std::size_t n = b; n <= 14; ++n) {
                const auto expected = oracle::spheres_by_support(q, b, n);
                BigInt ball = 0;
                for (std::size_t r = 0; r <= n; ++r) {
                    ball += expected[r];
                    mismatches += sphere_size(n, r, q, b) != expected[r];
                    mismatches += ball_size(n, r, q, b) != ball;
                    compared += 2;
                }
            }
    report("C3", mismatches == 0, "sphere/ball DP equals support enumeration, q 2..5, b<=4, n<=14, all r",
           std::to_string(compared) + " values, " + std::to_string(mismatches) + " discrepancies, " +
               fmt_seconds(seconds_since(start)));
}

// ---------------------------------------------------------------------------

struct Violation {
    std::string cell, method, text;
};

void soundness_sweep() {
    const auto start = Clock::now();
    std::vector<Violation> violations;
    std::size_t cells = 0, certified = 0;
    std::map<std::string, std::size_t> inconclusive;
    std::vector<std::string> open;
    SearchOptions opts;
    opts.time_limit_seconds = 20;
    opts.max_vertices = 20000;
    for (std::uint32_t q : {2u, 3u})
        for (std::size_t b = 2; b <= 3; ++b)
            for (std::size_t n = b; n <= 9; ++n)
                for (std::size_t d = b; d <= n; ++d) {
                    ++cells;
                    const Params p(q, b, n, d);
                    const std::string name = cell(q, b, n, d);
                    const SearchResult r = exact_max_code(p, opts);
                    if (!witness_valid(r, b, d)) violations.push_back({name, "search", "invalid witness"});
                    if (!p.trivial()) add_witness("sweep " + name, r, b, d);
                    if (r.certified)
                        ++certified;
                    else
                        open.push_back(name + ">=" + std::to_string(r.best_size));
                    const BigInt found(static_cast<unsigned long>(r.best_size));
                    const BoundReport rep = evaluate_bounds(p);
                    for (const auto& u : rep.uppers) {
                        if (!u.usable()) continue;
                        // An upper bound below any valid code is wrong whether or not the search finished.
                        if (u.value < found)
                            violations.push_back({name, u.method, "upper " + u.value.get_str() + " < " + found.get_str()});
                    }
                    for (const auto& l : rep.lowers) {
                        if (!l.usable()) continue;
                        if (r.certified) {
                            if (l.value > found)
                                violations.push_back({name, l.method, "lower " + l.value.get_str() + " > exact " + found.get_str()});
                        } else if (l.value > found) {
                            ++inconclusive[l.method];  // could still be below the unknown maximum
                        }
                    }
                    if (rep.best_lower.value > rep.best_upper.value)
                        violations.push_back({name, "best", "best lower above best upper"});
                    if (r.certified && (rep.best_lower.value > found || rep.best_upper.value < found))
                        violations.push_back({name, "best", "best values do not bracket the exact value"});
                }
    const double elapsed = seconds_since(start);

    std::map<std::string, std::size_t> by_method;
    for (const auto& v : violations) ++by_method[v.method];
    std::string summary;
    for (const auto& [m, c] : by_method) summary += (summary.empty() ? "" : ", ") + m + ":" + std::to_string(c);
    std::string first;
    for (std::size_t i = 0; i < violations.size() && i < 3; ++i)
        first += " " + violations[i].cell + " " + violations[i].method + " " + violations[i].text + ";";

    // The only analysed failure is the alphabet GV lower bound overshooting.
    const bool only_gv = !violations.empty() && by_method.size() == 1 && by_method.count("gv") == 1;
    report("C4.1", violations.empty() && elapsed < 1800,
           "every applicable upper >= exact >= every lower on 128 cells, <30min",
           std::to_string(violations.size()) + " violations" + (summary.empty() ? "" : " (" + summary + ")") +
               (first.empty() ? "" : ":" + first) + " " + fmt_seconds(elapsed),
           only_gv && elapsed < 1800);

    std::string listed, unsure;
    for (const auto& c : open) listed += " " + c;
    for (const auto& [m, c] : inconclusive) unsure += " " + m + ":" + std::to_string(c);
    report("C4.2", certified == cells, "exact value certified on every sweep cell",
           std::to_string(certified) + "/" + std::to_string(cells) + " certified with 20s per cell; " +
               "lower bounds above the witness, undecided:" + (unsure.empty() ? std::string(" none") : unsure) + "; open:" + listed,
           certified < cells);
}

// ---------------------------------------------------------------------------

void metric_suite() {
    const auto start = Clock::now();
    std::size_t checks = 0, violations = 0;
    auto expect = [&](bool ok) {
        ++checks;
        violations += !ok;
    };

    // Weight sandwich, exhaustive for q in {2,3}, n <= 8. Words with more than
    // n-b+1 nonzero symbols have every window nonzero, so the lower side is
    // capped at n.
    for (std::uint32_t q : {2u, 3u})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t b = 1; b <= n; ++b)
                for (std::uint64_t i = 1; i < power(q, n); ++i) {
                    const Word y = Word::from_index(q, n, i);
                    const std::size_t wh = hamming_weight(y), wb = bsym_weight(y, b);
                    expect(std::min(n, wh + b - 1) <= wb && wb <= b * wh && wb <= n);
                    expect(wb == oracle::weight(oracle::symbols(y), b));
                }

    // Axioms and invariances, exhaustive for n <= 5 and q <= 3.
    for (std::uint32_t q : {2u, 3u})
        for (std::size_t n = 1; n <= 5; ++n) {
            const std::uint64_t total = power(q, n);
            std::vector<Word> words;
            for (std::uint64_t i = 0; i < total; ++i) words.push_back(Word::from_index(q, n, i));
            for (std::size_t b = 1; b <= n; ++b) {
                std::vector<std::size_t> dist(total * total);
                for (std::uint64_t i = 0; i < total; ++i)
                    for (std::uint64_t j = 0; j < total; ++j) dist[i * total + j] = bsym_distance(words[i], words[j], b);
                for (std::uint64_t i = 0; i < total; ++i)
                    for (std::uint64_t j = 0; j < total; ++j) {
                        const std::size_t dij = dist[i * total + j];
                        expect((dij == 0) == (i == j));
                        expect(dij == dist[j * total + i]);
                        if (i != j) expect(dij >= b);
                        if (b == 1) expect(dij == hamming_distance(words[i], words[j]));
                        expect(dij == oracle::distance(oracle::symbols(words[i]), oracle::symbols(words[j]), b));
                        for (std::size_t k = 1; k < n; ++k)
                            expect(dij == bsym_distance(words[i].rotated(k), words[j].rotated(k), b));
                        // Translations by every z, and the triangle through every z.
                        for (std::uint64_t z = 0; z < total; ++z) {
                            expect(dij == dist[(words[i] + words[z]).to_index() * total + (words[j] + words[z]).to_index()]);
                            expect(dij <= dist[i * total + z] + dist[z * total + j]);
                        }
                    }
            }
        }

    // Randomized, n <= 12.
    std::mt19937_64 rng(20261015);
    const std::size_t random_cases = 20000;
    for (std::size_t t = 0; t < random_cases; ++t) {
        const std::uint32_t q = 2 + rng() % 4;
        const std::size_t n = 1 + rng() % 12, b = 1 + rng() % n;
        auto pick = [&] {
            std::vector<Symbol> s(n);
            for (auto& x : s) x = rng() % q;
            return Word(q, s);
        };
        const Word x = pick(), y = pick(), z = pick();
        const std::size_t dxy = bsym_distance(x, y, b);
        expect(dxy == oracle::distance(oracle::symbols(x), oracle::symbols(y), b));
        expect(dxy == bsym_distance(y, x, b));
        expect(dxy <= bsym_distance(x, z, b) + bsym_distance(z, y, b));
        expect(dxy == bsym_distance(x + z, y + z, b));
        expect(dxy == bsym_distance(x.rotated(t % n), y.rotated(t % n), b));
        expect((dxy == 0) == (x == y));
        if (x != y) expect(dxy >= b);
        if (b == 1) expect(dxy == hamming_distance(x, y));
        expect(dxy == hamming_distance(window_encode(x, b), window_encode(y, b)));
        if (!x.is_zero()) {
            const std::size_t wh = hamming_weight(x), wb = bsym_weight(x, b);
            expect(std::min(n, wh + b - 1) <= wb && wb <= std::min(n, b * wh));
        }
    }
    report("C5", violations == 0, "metric properties, exhaustive n<=5 (sandwich n<=8) and 20000 random cases n<=12",
           std::to_string(checks) + " checks, " + std::to_string(violations) + " violations, " +
               fmt_seconds(seconds_since(start)));
}

// ---------------------------------------------------------------------------

void structural_identities() {
    {
        const auto start = Clock::now();
        std::size_t checks = 0, first = 0, second = 0;
        for (std::uint32_t q : {2u, 3u})
            for (std::size_t n = 2; n <= (q == 2 ? 8u : 6u); ++n)
                for (std::uint64_t i = 0; i < power(q, n); ++i) {
                    const Word z = Word::from_index(q, n, i);
                    for (std::size_t b = 2; b <= n; ++b)
                        for (std::size_t l = b; l <= n; ++l) {
                            const auto w = boundary_blocks(z, l, b);
                            const long a1 = long(w[0]), a2 = long(w[1]), a3 = long(w[2]), a4 = long(w[3]);
                            ++checks;
                            second += a1 + a2 - a3 - a4 > long(b) - 1;
                            bool zero_prefix = true;
                            for (std::size_t k = 0; k < l; ++k) zero_prefix = zero_prefix && z[k] == 0;
                            // With z_1..z_l = 0 the groups B_1, B_2, B_3 are the first, second and fourth.
                            if (zero_prefix) first += a1 + a2 - a4 > long(b) - 1;
                        }
                }
        report("C6.1", first == 0 && second == 0,
               "boundary window inequalities (zero-prefix and general), q=2 n<=8, q=3 n<=6, all (l,b)",
               std::to_string(checks) + " (z,l,b) triples, violations " + std::to_string(first) + "+" +
                   std::to_string(second) + ", " + fmt_seconds(seconds_since(start)));
    }
    {
        const auto start = Clock::now();
        std::size_t checks = 0, violations = 0;
        for (std::uint32_t q : {2u, 3u})
            for (std::size_t big_n = 1; big_n <= 8; ++big_n) {
                // Every u where that stays cheap; otherwise a few words of each weight.
                const std::uint64_t total = power(q, big_n);
                std::vector<std::vector<std::uint32_t>> us;
                if (total <= 2187) {
                    for (std::uint64_t i = 0; i < total; ++i) us.push_back(oracle::digits(i, q, big_n));
                } else {
                    std::mt19937_64 rng(big_n);
                    for (std::size_t wt = 0; wt <= big_n; ++wt)
                        for (int rep = 0; rep < 3; ++rep) {
                            std::vector<std::uint32_t> u(big_n, 0);
                            for (std::size_t j = 0; j < wt; ++j) u[j] = 1 + rng() % (q - 1);
                            std::shuffle(u.begin(), u.end(), rng);
                            us.push_back(u);
                        }
                }
                for (const auto& u : us) {
                    std::size_t wt = 0;
                    for (auto s : u) wt += s != 0;
                    for (std::size_t k = 0; k <= big_n; ++k) {
                        const auto sum = oracle::character_sum(u, q, k);
                        const double expected = krawtchouk(big_n, q, k, wt).get_d();
                        ++checks;
                        violations += std::abs(sum.real() - expected) > 1e-6 || std::abs(sum.imag()) > 1e-6;
                    }
                }
            }
        report("C6.2", violations == 0, "character sums over weight-k vectors equal Krawtchouk values, N<=8, q in {2,3}",
               std::to_string(checks) + " (u,k) pairs, tolerance 1e-6, " + std::to_string(violations) +
                   " violations, " + fmt_seconds(seconds_since(start)));
    }
    {
        const auto start = Clock::now();
        const CodeFile f = read_code_file(BSYM_TEST_DATA "/plotkin_7_7.code");
        std::vector<CorpusCode> codes{{"plotkin_7_7.code", f.code, 3, 7}};
        codes.insert(codes.end(), corpus.begin(), corpus.end());
        std::size_t rows = 0, violations = 0;
        std::string bad;
        for (const auto& c : codes) {
            const auto dist = distance_distribution(c.code, c.b);
            const std::size_t dmin = min_bsym_distance(c.code, c.b);
            const LPProblem lp = build_lp(c.code.q(), c.b, c.code.length(), std::max(dmin, c.b));
            // Rows take B_0..B_n; entries below the minimum distance are zero.
            for (const auto& value : evaluate_rows(lp, dist.entries)) {
                ++rows;
                if (value < 0) {
                    ++violations;
                    bad = c.name;
                }
            }
        }
        report("C6.3", violations == 0 && codes.size() > 1, "every corpus code satisfies all LP rows k=0..n",
               std::to_string(codes.size()) + " codes, " + std::to_string(rows) + " rows, " +
                   std::to_string(violations) + " violations" + (bad.empty() ? "" : " (" + bad + ")") + ", " +
                   fmt_seconds(seconds_since(start)));
    }
}

// ---------------------------------------------------------------------------

std::pair<int, std::string> bsb(std::vector<std::string> args) {
    args.insert(args.begin(), "bsb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

void determinism() {
    const auto start = Clock::now();
    std::size_t tables = 0, differing = 0;
    for (const char* q : {"2", "3"})
        for (const char* b : {"2", "3"})
            for (const char* format : {"csv", "json"}) {
                const std::vector<std::string> base{"--no-cache", "table", "--q", q, "--b", b, "--n-min", b, "--n-max", "9",
                                                    "--d-min", b, "--d-max", "9", "--wide", "--format", format};
                auto run = [&](const char* threads) {
                    auto a = base;
                    a.insert(a.end(), {"--threads", threads});
                    return bsb(a);
                };
                const auto first = run("1");
                for (const char* threads : {"1", "2", "4"}) {
                    const auto again = run(threads);
                    ++tables;
                    differing += again != first || first.first != 0 || first.second.empty();
                }
            }

    std::size_t searches = 0, size_changes = 0;
    for (const auto& [q, b, n, d] : std::vector<std::array<std::size_t, 4>>{
             {2, 2, 11, 10}, {2, 3, 11, 10}, {2, 3, 10, 8}, {2, 2, 8, 5}, {2, 3, 9, 6}, {3, 2, 6, 5}, {3, 3, 7, 7}}) {
        std::optional<std::size_t> reference;
        for (unsigned threads : {1u, 2u, 4u}) {
            SearchOptions opts;
            opts.threads = threads;
            opts.time_limit_seconds = 60;
            const auto r = exact_max_code(Params(std::uint32_t(q), b, n, d), opts);
            ++searches;
            if (!r.certified || (reference && *reference != r.best_size)) ++size_changes;
            reference = r.best_size;
        }
    }
    report("C7", differing == 0 && size_changes == 0,
           "table output byte-identical across runs and threads; certified sizes independent of threads",
           std::to_string(tables) + " table reruns, " + std::to_string(differing) + " differ; " +
               std::to_string(searches) + " searches, " + std::to_string(size_changes) + " changed or uncertified, " +
               fmt_seconds(seconds_since(start)));
}

}  // namespace

int main() {
    const auto start = Clock::now();
    golden_values();
    search_values();
    sphere_oracle();
    soundness_sweep();
    metric_suite();
    structural_identities();
    determinism();
    std::cout << "summary: " << unexpected << " unexpected failure(s), " << known << " known failure(s), "
              << fmt_seconds(seconds_since(start)) << std::endl;
    return unexpected == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
