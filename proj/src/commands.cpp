#include "bsym/cli.hpp"

#include "bsym/bounds.hpp"
#include "bsym/cache.hpp"
#include "bsym/code_io.hpp"
#include "bsym/error.hpp"
#include "bsym/lp.hpp"
#include "bsym/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace bsym::cli {

namespace {

using nlohmann::json;

struct Instance {
    std::uint32_t q = 2;
    std::size_t b = 1, n = 1, d = 1;
    Params params() const { return Params(q, b, n, d); }
};

void add_instance(CLI::App& cmd, Instance& in) {
    cmd.add_option("--q", in.q, "alphabet size")->required();
    cmd.add_option("--b", in.b, "read width")->required();
    cmd.add_option("--n", in.n, "length")->required();
    cmd.add_option("--d", in.d, "minimum b-symbol distance")->required();
}

// Exact integers fit JSON numbers up to 64 bits; anything larger is a string.
json big_json(const BigInt& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

std::string value_text(const BoundValue& v) {
    if (v.status == Applicability::NotApplicable) return "-";
    return v.value.get_str();
}

json bound_json(const BoundValue& v) {
    json j = {{"method", v.method},
              {"direction", to_string(v.direction)},
              {"status", to_string(v.status)},
              {"value", v.status == Applicability::NotApplicable ? json(nullptr) : big_json(v.value)}};
    if (v.exact) j["exact"] = to_string(*v.exact);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    return j;
}

void print_bound_row(std::ostream& out, const BoundValue& v, bool verbose) {
    out << std::left << std::setw(12) << v.method << std::setw(7) << to_string(v.direction) << std::setw(16)
        << to_string(v.status) << std::setw(10) << value_text(v);
    if (v.status == Applicability::NotApplicable) out << v.reason;
    else out << v.detail;
    if (verbose && v.exact && v.status != Applicability::NotApplicable) out << (v.detail.empty() ? "" : " ") << "exact=" << to_string(*v.exact);
    out << '\n';
    if (verbose)
        for (const auto& note : v.diagnostics) out << "    note: " << note << '\n';
}

const char* display_name(const std::string& method) {
    static const std::map<std::string, const char*> names{
        {"singleton", "Singleton"}, {"sp-song", "SP-Song"}, {"sp", "SP"},         {"plotkin", "Plotkin"},
        {"elias", "Elias"},         {"johnson", "Johnson"}, {"recurrence", "Recurrence"}, {"lp", "LP"}};
    auto it = names.find(method);
    return it == names.end() ? method.c_str() : it->second;
}

struct Globals {
    std::string cache_flag;
    bool no_cache = false;

    std::optional<ResultCache> open_cache() const {
        if (no_cache) return std::nullopt;
        return ResultCache(ResultCache::resolve_path(cache_flag.empty() ? std::nullopt : std::optional(cache_flag)));
    }
};

// ---------------------------------------------------------------------------

struct BoundArgs {
    Instance inst;
    std::string method = "all";
    bool json_out = false;
    bool verbose = false;
    std::optional<std::uint64_t> k_max;
};

int cmd_bound(const BoundArgs& a, const Globals& g, std::ostream& out) {
    const Params p = a.inst.params();
    const auto cache = g.open_cache();
    const KnownValues known = cache ? cache->known_values() : KnownValues{};
    BoundOptions opts;
    opts.known = &known;
    opts.lp_k_max = a.k_max;

    if (a.method != "all") {
        const BoundValue v = evaluate_method(p, a.method, opts);
        if (a.json_out) out << bound_json(v).dump() << '\n';
        else print_bound_row(out, v, a.verbose);
        return kOk;
    }

    const BoundReport r = evaluate_bounds(p, opts);
    if (a.json_out) {
        json j = {{"q", p.q()}, {"b", p.b()}, {"n", p.n()}, {"d", p.d()}};
        j["uppers"] = json::array();
        j["lowers"] = json::array();
        for (const auto& v : r.uppers) j["uppers"].push_back(bound_json(v));
        for (const auto& v : r.lowers) j["lowers"].push_back(bound_json(v));
        j["best_upper"] = bound_json(r.best_upper);
        j["best_lower"] = bound_json(r.best_lower);
        out << j.dump() << '\n';
        return kOk;
    }
    out << "A_" << p.b() << "(n=" << p.n() << ", d=" << p.d() << ", q=" << p.q() << ")\n";
    out << std::left << std::setw(12) << "method" << std::setw(7) << "dir" << std::setw(16) << "status"
        << std::setw(10) << "value" << "detail\n";
    for (const auto& v : r.uppers) print_bound_row(out, v, a.verbose);
    for (const auto& v : r.lowers) print_bound_row(out, v, a.verbose);
    out << "best upper: " << r.best_upper.value.get_str() << " (" << r.best_upper.method << ")\n";
    out << "best lower: " << r.best_lower.value.get_str() << " (" << r.best_lower.method << ")\n";
    if (a.verbose)
        for (const auto& note : r.best_upper.diagnostics) out << "note: " << note << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct TableArgs {
    std::uint32_t q = 2;
    std::size_t b = 1, n_min = 1, n_max = 1, d_min = 1, d_max = 1;
    std::string format = "csv";
    std::string out_path;
    bool wide = false;
    unsigned threads = 1;
};

int cmd_table(const TableArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
    if (a.n_min > a.n_max || a.d_min > a.d_max) throw ParameterError("empty range: min exceeds max");
    // Cells with d > n are skipped; every other cell must be valid.
    std::vector<Params> cells;
    for (std::size_t n = a.n_min; n <= a.n_max; ++n)
        for (std::size_t d = a.d_min; d <= std::min(a.d_max, n); ++d) cells.emplace_back(a.q, a.b, n, d);

    const auto cache = g.open_cache();
    const KnownValues known = cache ? cache->known_values() : KnownValues{};
    BoundOptions opts;
    opts.known = &known;

    std::vector<std::optional<BoundReport>> reports(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                reports[i] = evaluate_bounds(cells[i], opts);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::ostringstream body;
    if (a.format == "csv") {
        body << "q,b,n,d,best_lower,best_upper,lower_method,upper_method";
        if (a.wide)
            for (const auto& m : method_names()) body << ',' << m;
        body << '\n';
        for (const auto& r : reports) {
            const Params& p = r->params;
            body << p.q() << ',' << p.b() << ',' << p.n() << ',' << p.d() << ',' << r->best_lower.value.get_str() << ','
                 << r->best_upper.value.get_str() << ',' << r->best_lower.method << ',' << r->best_upper.method;
            if (a.wide) {
                for (const auto& m : method_names()) {
                    body << ',';
                    for (const auto* list : {&r->uppers, &r->lowers})
                        for (const auto& v : *list)
                            if (v.method == m) body << (v.status == Applicability::NotApplicable ? "NA" : v.value.get_str());
                }
            }
            body << '\n';
        }
    } else if (a.format == "json") {
        for (const auto& r : reports) {
            const Params& p = r->params;
            json j = {{"q", p.q()},
                      {"b", p.b()},
                      {"n", p.n()},
                      {"d", p.d()},
                      {"best_lower", big_json(r->best_lower.value)},
                      {"best_upper", big_json(r->best_upper.value)},
                      {"lower_method", r->best_lower.method},
                      {"upper_method", r->best_upper.method}};
            if (a.wide) {
                json methods = json::object();
                for (const auto* list : {&r->uppers, &r->lowers})
                    for (const auto& v : *list)
                        methods[v.method] = v.status == Applicability::NotApplicable ? json(nullptr) : big_json(v.value);
                j["methods"] = methods;
            }
            body << j.dump() << '\n';
        }
    } else {
        throw ParameterError("--format must be csv or json");
    }

    if (a.out_path.empty()) {
        out << body.str();
        return kOk;
    }
    std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + a.out_path + "'");
    file << body.str();
    file.close();
    if (!file) throw IoError("cannot write '" + a.out_path + "'");
    err << "wrote " << reports.size() << " rows to " << a.out_path << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    Instance inst;
    std::optional<std::size_t> weight;
    double time_limit = 60.0;
    unsigned threads = 1;
    std::string symmetry = "full";
    std::string witness_path;
    bool json_out = false;
};

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
    const Params p = a.inst.params();
    if (!(a.time_limit > 0)) throw ParameterError("--time-limit must be positive");
    SearchOptions opts;
    opts.time_limit_seconds = a.time_limit;
    opts.threads = a.threads;
    if (a.symmetry == "full") opts.symmetry = Symmetry::Full;
    else if (a.symmetry == "translation") opts.symmetry = Symmetry::Translation;
    else throw ParameterError("--symmetry must be full or translation");

    const SearchResult r = a.weight ? exact_max_constant_weight(p, *a.weight, opts) : exact_max_code(p, opts);

    if (auto cache = g.open_cache()) {
        CacheRecord rec;
        rec.q = p.q();
        rec.b = p.b();
        rec.n = p.n();
        rec.d = p.d();
        rec.method = a.weight ? "search-w" + std::to_string(*a.weight) : "search";
        rec.direction = r.certified ? "exact" : "lower";
        rec.value = static_cast<unsigned long>(r.best_size);
        rec.certified = r.certified;
        cache->put(rec);
    }
    if (!a.witness_path.empty()) {
        std::ofstream file(a.witness_path);
        if (!file) throw IoError("cannot write '" + a.witness_path + "'");
        write_code(file, r.witness_code(), p.b());
        if (!file) throw IoError("cannot write '" + a.witness_path + "'");
    }
    if (a.json_out) {
        json j = {{"q", p.q()},         {"b", p.b()},       {"n", p.n()},
                  {"d", p.d()},         {"size", r.best_size}, {"certified", r.certified},
                  {"nodes", r.nodes},   {"elapsed_seconds", r.elapsed_seconds}};
        if (a.weight) j["weight"] = *a.weight;
        out << j.dump() << '\n';
        return kOk;
    }
    out << r.best_size << ' ' << (r.certified ? "certified" : "uncertified") << '\n';
    out << "nodes=" << r.nodes << " elapsed=" << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s\n";
    return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::optional<std::size_t> b;
    bool json_out = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const CodeFile cf = read_code_file(a.file);
    const std::size_t b = a.b ? *a.b : cf.b.value_or(0);
    if (b == 0) throw ParameterError("--b is required when the code file has no b= header");
    if (b > cf.code.length()) throw ParameterError("b exceeds the code length");
    const VerifyReport r = verify_code(cf.code, b);

    // Upper bounds at the code's own (n, d_b) that the code attains.
    std::vector<std::pair<std::string, BigInt>> met;
    if (r.min_distance) {
        const Params p(r.q, b, r.n, *r.min_distance);
        BoundOptions opts;
        opts.constant_weight_search = false;
        for (const auto& m : {"plotkin", "singleton", "sp-song", "sp", "elias", "johnson", "lp"}) {
            const BoundValue v = evaluate_method(p, m, opts);
            if (v.status == Applicability::Applicable && v.value == static_cast<unsigned long>(r.size))
                met.emplace_back(m, v.value);
        }
    }

    if (a.json_out) {
        json j = {{"q", r.q}, {"n", r.n}, {"b", r.b}, {"size", r.size}};
        j["min_distance"] = r.min_distance ? json(*r.min_distance) : json(nullptr);
        j["weight_enumerator"] = r.enumerator.coefficients;
        j["constant_weight"] = r.constant_weight ? json(*r.constant_weight) : json(nullptr);
        j["meets"] = json::object();
        for (const auto& [m, v] : met) j["meets"][m] = big_json(v);
        out << j.dump() << '\n';
        return kOk;
    }
    out << "M=" << r.size << " d_" << b << '=';
    if (r.min_distance) out << *r.min_distance;
    else out << "undefined";
    for (std::size_t i = 0; i < met.size(); ++i)
        out << (i ? ", " : " meets ") << display_name(met[i].first) << '=' << met[i].second.get_str();
    out << '\n';
    out << "q=" << r.q << " n=" << r.n << '\n';
    out << "weight enumerator:";
    for (std::size_t i = 0; i < r.enumerator.coefficients.size(); ++i)
        if (r.enumerator.coefficients[i]) out << ' ' << i << ':' << r.enumerator.coefficients[i];
    out << '\n';
    if (r.constant_weight) out << "constant weight " << *r.constant_weight << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct LpArgs {
    Instance inst;
    std::string dump;
    std::optional<std::uint64_t> k_max;
    bool verbose = false;
};

int cmd_lp(const LpArgs& a, std::ostream& out) {
    const Params p = a.inst.params();
    const LPProblem lp = build_lp(p, a.k_max);
    if (a.dump == "human") out << dump_lp(lp, DumpFormat::Human);
    else if (a.dump == "machine") out << dump_lp(lp, DumpFormat::Machine);
    else if (!a.dump.empty()) throw ParameterError("--dump must be human or machine");
    const BoundValue v = lp_upper(p, a.k_max);
    out << v.method << ' ' << v.value.get_str();
    if (a.verbose && v.exact) out << " exact=" << to_string(*v.exact) << ' ' << v.detail;
    out << '\n';
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds and exact search for b-symbol codes", "bsb"};
    app.set_version_flag("--version", std::string("bsb ") + kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--cache", g.cache_flag, "cache file (default $BSB_CACHE or ./bsb-cache.jsonl)");
    app.add_flag("--no-cache", g.no_cache, "do not read or write the cache");

    BoundArgs bound;
    auto* c_bound = app.add_subcommand("bound", "bounds for one (q, b, n, d)");
    add_instance(*c_bound, bound.inst);
    std::vector<std::string> choices{"all"};
    for (const auto& m : method_names()) choices.push_back(m);
    c_bound->add_option("--method", bound.method, "one method, or all (default)")->check(CLI::IsMember(choices));
    c_bound->add_flag("--json", bound.json_out, "JSON instead of text");
    c_bound->add_flag("--verbose", bound.verbose, "show exact pre-rounding values and notes");
    c_bound->add_option("--k-max", bound.k_max, "extend the LP to rows 0..k_max");

    TableArgs table;
    auto* c_table = app.add_subcommand("table", "best bounds over a parameter grid");
    c_table->add_option("--q", table.q, "alphabet size")->required();
    c_table->add_option("--b", table.b, "read width")->required();
    c_table->add_option("--n-min", table.n_min, "smallest length")->required();
    c_table->add_option("--n-max", table.n_max, "largest length")->required();
    c_table->add_option("--d-min", table.d_min, "smallest distance")->required();
    c_table->add_option("--d-max", table.d_max, "largest distance (cells with d > n are skipped)")->required();
    c_table->add_option("--format", table.format, "csv (default) or one JSON object per line")->check(CLI::IsMember({"csv", "json"}));
    c_table->add_option("--out", table.out_path, "output file (default stdout)");
    c_table->add_flag("--wide", table.wide, "one column per method");
    c_table->add_option("--threads", table.threads, "0 = all cores");

    SearchArgs search;
    auto* c_search = app.add_subcommand("search", "exact maximum code size by clique search");
    add_instance(*c_search, search.inst);
    c_search->add_option("--weight", search.weight, "constant b-symbol weight");
    c_search->add_option("--time-limit", search.time_limit, "seconds");
    c_search->add_option("--threads", search.threads, "0 = all cores");
    c_search->add_option("--symmetry", search.symmetry, "symmetry reduction (default full)")->check(CLI::IsMember({"full", "translation"}));
    c_search->add_option("--witness", search.witness_path, "write the best code found");
    c_search->add_flag("--json", search.json_out, "JSON instead of text");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "metrics of a code file");
    c_verify->add_option("--file", verify.file, "code file, one word per line")->required();
    c_verify->add_option("--b", verify.b, "read width (default from the file header)");
    c_verify->add_flag("--json", verify.json_out, "JSON instead of text");

    LpArgs lp;
    auto* c_lp = app.add_subcommand("lp", "linear programming bound");
    add_instance(*c_lp, lp.inst);
    c_lp->add_option("--dump", lp.dump, "print the program first")->check(CLI::IsMember({"human", "machine"}));
    c_lp->add_option("--k-max", lp.k_max, "extend the rows to 0..k_max");
    c_lp->add_flag("--verbose", lp.verbose, "show the exact optimum and pivot count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "bsb " << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "bsb: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (c_bound->parsed()) return cmd_bound(bound, g, out);
        if (c_table->parsed()) return cmd_table(table, g, out, err);
        if (c_search->parsed()) return cmd_search(search, g, out);
        if (c_verify->parsed()) return cmd_verify(verify, out);
        if (c_lp->parsed()) return cmd_lp(lp, out);
    } catch (const ParameterError& e) {
        err << "bsb: invalid parameters: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        err << "bsb: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedParametersError& e) {
        err << "bsb: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "bsb: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        err << "bsb: " << e.what() << '\n';
        return kIo;
    } catch (const DimensionError& e) {
        err << "bsb: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "bsb: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace bsym::cli
