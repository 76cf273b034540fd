// ohba: exact choosability lab for joins of cliques with complete bipartite
// graphs.  Subcommands: check, tau, scan-conjecture, construct, verify,
// bounds-table, lemmas.  Exit codes: 0 success/colorable, 1 definite
// negative (uncolorable, not choosable, verification refuted), 2 usage or
// input error, 3 budget refusal.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ohba/bounds.hpp"
#include "ohba/choosability.hpp"
#include "ohba/coloring.hpp"
#include "ohba/constructions.hpp"
#include "ohba/counting.hpp"
#include "ohba/io.hpp"
#include "ohba/version.hpp"

using json = nlohmann::json;
using namespace ohba;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240; // fixed default for every randomized run

json int_to_json(const bounds::Int& v) {
    // Values beyond int64 serialize as decimal strings.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json bound_report_to_json(const bounds::BoundReport& r) {
    json j;
    j["name"] = r.name;
    switch (r.kind) {
    case bounds::BoundReport::Kind::Lower: j["kind"] = "lower"; break;
    case bounds::BoundReport::Kind::Upper: j["kind"] = "upper"; break;
    case bounds::BoundReport::Kind::Exact: j["kind"] = "exact"; break;
    case bounds::BoundReport::Kind::IntervalKind: j["kind"] = "interval"; break;
    }
    if (r.value) j["value"] = int_to_json(*r.value);
    if (r.interval) j["interval"] = {int_to_json(r.interval->lo), int_to_json(r.interval->hi)};
    j["valid"] = r.valid;
    j["conditions"] = json::array();
    for (const auto& c : r.conditions) j["conditions"].push_back({{"expr", c.expr}, {"ok", c.ok}});
    for (const auto& [k, v] : r.params) j[k] = v;
    return j;
}

json witness_to_json(const ParsedGraph& g, const Coloring& f) {
    json w = json::object();
    for (Vertex v = 0; v < static_cast<int>(f.assignment.size()); ++v)
        w[graph_vertex_name(g, v)] = f.at(v);
    return w;
}

// ---- result cache ----------------------------------------------------------
//
// One JSON file keyed by canonical query strings.  A hit replays the stored
// stdout bytes and exit code; entries from other engine versions are
// ignored.  A corrupt cache is reported and bypassed, never trusted.

struct Cache {
    std::string path;
    json data = json::object();
    bool usable = false;

    static Cache open(const std::string& cli_path) {
        Cache c;
        if (!cli_path.empty()) c.path = cli_path;
        else if (const char* env = std::getenv("OHBA_CACHE_PATH")) c.path = env;
        if (c.path.empty()) return c;
        c.usable = true;
        std::ifstream in(c.path);
        if (!in) return c; // fresh cache
        try {
            in >> c.data;
            if (!c.data.is_object() || !c.data.contains("entries") ||
                !c.data["entries"].is_object())
                throw std::runtime_error("unexpected shape");
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring corrupt cache at " << c.path << " ("
                      << e.what() << ")\n";
            c.data = json::object();
        }
        return c;
    }

    std::optional<std::pair<std::string, int>> lookup(const std::string& key) const {
        if (!usable || !data.contains("entries")) return std::nullopt;
        const auto& entries = data["entries"];
        if (!entries.contains(key)) return std::nullopt;
        const auto& e = entries[key];
        if (!e.is_object() || e.value("engine", "") != kEngineVersion) return std::nullopt;
        if (!e.contains("payload") || !e["payload"].is_string()) return std::nullopt;
        return std::make_pair(e["payload"].get<std::string>(), e.value("exit", 0));
    }

    void store(const std::string& key, const std::string& payload, int exit_code) {
        if (!usable) return;
        if (!data.contains("entries")) data["entries"] = json::object();
        json e;
        e["payload"] = payload;
        e["exit"] = exit_code;
        e["engine"] = kEngineVersion;
        e["timestamp"] = static_cast<long long>(std::chrono::duration_cast<std::chrono::seconds>(
                                                    std::chrono::system_clock::now().time_since_epoch())
                                                    .count());
        data["entries"][key] = e;
        std::ofstream out(path);
        if (out) out << data.dump(1) << '\n';
        else std::cerr << "warning: cannot write cache at " << path << '\n';
    }
};

// ---- check -----------------------------------------------------------------

struct CheckArgs {
    std::vector<long long> join; // p a b
    std::string graph_file;
    std::string lists_file;
    std::string witness_out;
    std::string format = "json";
};

int run_check(const CheckArgs& args) {
    ParsedGraph graph = [&]() -> ParsedGraph {
        if (!args.join.empty())
            return JoinGraph(static_cast<int>(args.join[0]), static_cast<int>(args.join[1]),
                             static_cast<int>(args.join[2]));
        if (args.graph_file.empty()) throw InputError("check needs --join or --graph");
        return read_graph_file(args.graph_file);
    }();
    const ListAssignment L = read_lists_file(args.lists_file, graph);

    bool colorable = false;
    std::optional<Coloring> witness;
    if (const auto* jg = std::get_if<JoinGraph>(&graph)) {
        if (jg->p() + jg->a() <= 16) {
            JoinColorability res = is_colorable_join_fast(*jg, L);
            colorable = res.colorable;
            witness = std::move(res.witness);
        } else {
            witness = find_proper_coloring(*jg, L);
            colorable = witness.has_value();
        }
    } else {
        witness = find_proper_coloring(std::get<GenericGraph>(graph), L);
        colorable = witness.has_value();
    }

    json out;
    out["colorable"] = colorable;
    if (witness) out["witness"] = witness_to_json(graph, *witness);
    if (args.format == "pretty") {
        std::cout << (colorable ? "colorable" : "uncolorable") << '\n';
        if (witness) {
            std::ostringstream os;
            write_coloring(os, graph, *witness);
            std::cout << os.str();
        }
    } else {
        std::cout << out.dump() << '\n';
    }
    if (witness && !args.witness_out.empty()) {
        std::ofstream wf(args.witness_out);
        write_coloring(wf, graph, *witness);
    }
    return colorable ? 0 : 1;
}

// ---- tau -------------------------------------------------------------------

struct TauArgs {
    int s = 0;
    int a = 1;
    long long b = 1;
    std::string method = "formula";
    std::string format = "json";
    std::string cache_path;
};

json tau_result_to_json(const TauResult& r, const std::string& method) {
    json j;
    j["s"] = r.query.s;
    j["a"] = r.query.a;
    j["b"] = r.query.b;
    j["method"] = method;
    j["exact"] = r.exact;
    if (r.exact) j["value"] = r.value;
    j["interval"] = {r.lower, r.upper};
    j["provenance"] = r.provenance;
    if (method == "formula" || method == "sandwich") {
        // Full reports for the condition-carrying bounds that apply here.
        json reports = json::array();
        if (r.query.a == r.query.s + 2) {
            reports.push_back(bound_report_to_json(bounds::cor5_lower(r.query.s, r.query.b)));
        } else if (r.query.a > r.query.s + 2) {
            const long long best = bounds::thm67_best_lower(r.query.s, r.query.a, r.query.b);
            reports.push_back(bound_report_to_json(bounds::thm67_threshold(
                r.query.s, static_cast<int>(std::max<long long>(best, 2)), r.query.a)));
        }
        j["reports"] = reports;
    }
    return j;
}

std::string render_tau(const TauResult& r, const std::string& method,
                       const std::string& format) {
    std::ostringstream os;
    if (format == "pretty") {
        os << "tau_" << r.query.s << "(" << r.query.a << "," << r.query.b << ") ";
        if (r.exact) os << "= " << r.value;
        else os << "in [" << r.lower << ", " << r.upper << "]";
        os << "   [" << r.provenance << "]\n";
    } else {
        os << tau_result_to_json(r, method).dump() << '\n';
    }
    return os.str();
}

int run_tau(const TauArgs& args) {
    const TauQuery q{args.s, args.a, args.b};

    if (args.method == "formula") {
        const TauResult r = tau_sandwich(q);
        if (!r.exact) {
            std::cerr << "no theorem pins tau_" << args.s << "(" << args.a << "," << args.b
                      << ") exactly; best closed-form interval is [" << r.lower << ", "
                      << r.upper << "] (" << r.provenance
                      << "); use --method sandwich or search\n";
            return 3;
        }
        std::cout << render_tau(r, "formula", args.format);
        return 0;
    }
    if (args.method == "sandwich") {
        const TauResult r = tau_sandwich(q);
        std::cout << render_tau(r, "sandwich", args.format);
        return 0;
    }
    if (args.method != "search") throw InputError("unknown method '" + args.method + "'");

    Cache cache = Cache::open(args.cache_path);
    const std::string key = "tau|search|s=" + std::to_string(args.s) +
                            "|a=" + std::to_string(args.a) + "|b=" + std::to_string(args.b) +
                            "|fmt=" + args.format;
    if (const auto hit = cache.lookup(key)) {
        std::cout << hit->first;
        return hit->second;
    }
    const TauResult r = tau_exact(q);
    const std::string payload = render_tau(r, "search", args.format);
    const int code = r.exact ? 0 : 3;
    std::cout << payload;
    cache.store(key, payload, code);
    return code;
}

// ---- choosable -------------------------------------------------------------

struct ChoosableArgs {
    std::vector<long long> join; // p a b
    int k = 0;
    bool naive = false;
    std::string witness_out;
    std::string format = "json";
};

int run_choosable(const ChoosableArgs& args) {
    const JoinGraph g(static_cast<int>(args.join[0]), static_cast<int>(args.join[1]),
                      static_cast<int>(args.join[2]));
    const ChoosabilityVerdict v =
        args.naive ? is_k_choosable_naive(to_generic(g), args.k)
                   : is_k_choosable_join(g, args.k);

    json out;
    out["query"] = {{"p", g.p()},
                    {"a", g.a()},
                    {"b", g.b()},
                    {"k", args.k},
                    {"oracle", args.naive ? "naive" : "structured"}};
    out["choosable"] = v.choosable;
    out["certificate"] = to_string(v.certificate);
    out["detail"] = v.detail;
    if (v.bad_assignment && !args.witness_out.empty()) {
        std::ofstream wf(args.witness_out);
        write_lists(wf, ParsedGraph(g), *v.bad_assignment);
        out["witness_file"] = args.witness_out;
    }
    if (args.format == "pretty") {
        std::cout << "K_" << g.p() << " v K_{" << g.a() << "," << g.b() << "} is "
                  << (v.choosable ? "" : "NOT ") << args.k << "-choosable  ["
                  << to_string(v.certificate) << "] " << v.detail << '\n';
    } else {
        std::cout << out.dump() << '\n';
    }
    return v.choosable ? 0 : 1;
}

// ---- scan-conjecture -------------------------------------------------------

struct ScanArgs {
    int s = 0;
    int l_max = 3;
    long long confirm_b_limit = 0; // confirm rows by search where b fits the budget
    std::string format = "pretty";
};

int run_scan(const ScanArgs& args) {
    if (args.s < 0 || args.s > 2) throw ParamError("scan-conjecture supports s <= 2");
    json rows = json::array();
    for (int l = 1; l <= args.l_max; ++l) {
        const bounds::Interval iv = bounds::conjecture11_interval(args.s, l);
        json row;
        row["l"] = l;
        row["interval"] = {int_to_json(iv.lo), int_to_json(iv.hi)};
        row["lower_certified"] = "T4"; // threshold construction reaches every b >= lo

        // Upper side: T8 certifies tau <= l on [lo, window_end(s, l+1)].
        const bounds::Int window = bounds::thm8_window_end(args.s, l + 1);
        std::string status;
        if (args.s == 0) {
            status = "exact";
            row["upper_certified"] = "Cor9";
        } else if (l == 1) {
            status = "exact";
            row["upper_certified"] = "T10";
        } else if (window >= iv.hi) {
            status = "exact";
            row["upper_certified"] = "T8";
        } else if (window >= iv.lo) {
            status = "partial";
            row["certified_subrange"] = {int_to_json(iv.lo), int_to_json(window)};
            row["upper_certified"] = "T8(window)";
        } else {
            status = "open";
        }
        row["status"] = status;

        if (args.confirm_b_limit > 0 && iv.lo <= args.confirm_b_limit) {
            // Independent spot confirmation by exact search at the left edge.
            try {
                const TauResult t = tau_exact({args.s, args.s + 2,
                                               static_cast<long long>(iv.lo)});
                row["search_confirmation"] = t.exact && t.value == l;
            } catch (const BudgetError&) {
                row["search_confirmation"] = "refused";
            }
        }
        rows.push_back(row);

        if (args.format == "pretty") {
            std::cout << "l=" << l << "  b in [" << iv.lo.str() << ", " << iv.hi.str()
                      << "]  " << status;
            if (row.contains("certified_subrange"))
                std::cout << "  certified on [" << iv.lo.str() << ", " << window.str()
                          << "]";
            if (row.contains("search_confirmation"))
                std::cout << "  search=" << row["search_confirmation"].dump();
            std::cout << '\n';
        }
    }
    if (args.format != "pretty") std::cout << rows.dump() << '\n';
    return 0;
}

// ---- construct / verify ----------------------------------------------------

struct ConstructArgs {
    int thm = 4;
    int s = 0;
    int l = 0;
    int a = -1;
    long long b = 0;
    std::string out_dir;
};

ConstructionKind kind_of(int thm) {
    switch (thm) {
    case 1: return ConstructionKind::T1;
    case 4: return ConstructionKind::T4;
    case 6: return ConstructionKind::T6;
    case 7: return ConstructionKind::T7;
    default: throw ParamError("--thm must be one of 1, 4, 6, 7");
    }
}

json spec_to_json(const ConstructionInstance& inst) {
    const ConstructionSpec& s = inst.spec;
    json j;
    j["theorem"] = to_string(s.theorem);
    j["s"] = s.s;
    j["l"] = s.l;
    j["a"] = s.a;
    j["b"] = s.b;
    j["k"] = s.k;
    if (s.theorem == ConstructionKind::T6 || s.theorem == ConstructionKind::T7) {
        j["q"] = s.q;
        j["h"] = s.h;
    }
    if (s.theorem == ConstructionKind::T7) {
        j["r"] = s.r;
        j["u"] = s.u;
    }
    j["c_size"] = inst.c_size;
    j["p"] = inst.graph.p();
    j["engine"] = kEngineVersion;
    return j;
}

int run_construct(const ConstructArgs& args) {
    const ConstructionInstance inst = construct(kind_of(args.thm), args.s, args.l, args.a, args.b);
    const json meta = spec_to_json(inst);
    if (!args.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(args.out_dir);
        const ParsedGraph pg = inst.graph;
        std::ofstream gf(fs::path(args.out_dir) / "graph.txt");
        write_graph(gf, pg);
        std::ofstream lf(fs::path(args.out_dir) / "lists.txt");
        write_lists(lf, pg, inst.lists);
        std::ofstream sf(fs::path(args.out_dir) / "spec.json");
        sf << meta.dump(1) << '\n';
    }
    std::cout << meta.dump() << '\n';
    return 0;
}

int run_verify(const ConstructArgs& args) {
    const VerifyReport report =
        verify_construction(kind_of(args.thm), args.s, args.l, args.a, args.b);
    for (const VerifyClause& c : report.clauses)
        std::cout << (c.ok ? "  ok  " : " FAIL ") << c.name
                  << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    std::cout << (report.pass ? "PASS" : "FAIL") << ' ' << to_string(report.spec.theorem)
              << " s=" << report.spec.s << " l=" << report.spec.l << " a=" << report.spec.a
              << " b=" << report.spec.b << " |C|=" << report.c_size << '\n';
    return report.pass ? 0 : 1;
}

// ---- bounds-table ----------------------------------------------------------

struct TableArgs {
    int a = 2;
    int s = 0;
    long long b_from = 2;
    long long b_to = 20;
    std::string format = "csv";
};

// Fixed column order; empty cells mean "not applicable / not valid here".
const char* kTableColumns =
    "b,exact,lower,upper,provenance,L13,T8,T4,T67,Cor5,T3_lo,T3_hi,Cor9";

int run_bounds_table(const TableArgs& args) {
    if (args.b_from > args.b_to) throw ParamError("empty b range");
    if (args.format == "csv") std::cout << kTableColumns << '\n';
    json rows = json::array();

    for (long long b = args.b_from; b <= args.b_to; ++b) {
        if (b < args.a) continue;
        const TauResult r = tau_sandwich({args.s, args.a, b});

        std::string l13, t8, t4, t67, c5, t3lo, t3hi, c9;
        l13 = std::to_string(bounds::lemma13_upper(args.a, b));
        if (args.a == args.s + 2) {
            t8 = std::to_string(bounds::thm8_upper(args.s, b));
            t4 = std::to_string(bounds::thm4_best_lower(args.s, b));
            const bounds::BoundReport cr = bounds::cor5_lower(args.s, b);
            if (cr.valid) c5 = cr.value->str();
        } else if (args.a > args.s + 2) {
            t67 = std::to_string(bounds::thm67_best_lower(args.s, args.a, b));
        }
        if (args.a == 2 && args.s == 0) {
            if (b >= 5) {
                const bounds::Interval t3 = bounds::allagan_bounds(b);
                t3lo = t3.lo.str();
                t3hi = t3.hi.str();
            }
            c9 = std::to_string(bounds::cor9_exact(b));
        }

        if (args.format == "csv") {
            std::cout << b << ',' << (r.exact ? "1" : "0") << ',' << r.lower << ','
                      << r.upper << ',' << r.provenance << ',' << l13 << ',' << t8 << ','
                      << t4 << ',' << t67 << ',' << c5 << ',' << t3lo << ',' << t3hi << ','
                      << c9 << '\n';
        } else {
            json row = tau_result_to_json(r, "sandwich");
            row.erase("method");
            if (!l13.empty()) row["L13"] = std::stoll(l13);
            if (!t8.empty()) row["T8"] = std::stoll(t8);
            if (!t4.empty()) row["T4"] = std::stoll(t4);
            if (!t67.empty()) row["T67"] = std::stoll(t67);
            if (!c5.empty()) row["Cor5"] = std::stoll(c5);
            if (!t3lo.empty()) row["T3"] = {std::stoll(t3lo), std::stoll(t3hi)};
            if (!c9.empty()) row["Cor9"] = std::stoll(c9);
            rows.push_back(row);
            if (args.format == "pretty") {
                std::cout << "b=" << b << "  ";
                if (r.exact) std::cout << "tau = " << r.value;
                else std::cout << "tau in [" << r.lower << ", " << r.upper << "]";
                std::cout << "  (" << r.provenance << ")\n";
            }
        }
    }
    if (args.format == "json") std::cout << rows.dump() << '\n';
    return 0;
}

// ---- lemmas ----------------------------------------------------------------

struct LemmasArgs {
    int lemma = 16;
    int count = 50;
    int s = 2;
    std::uint64_t seed = kDefaultSeed;
};

int run_lemmas(const LemmasArgs& args) {
    bool all_ok = true;
    if (args.lemma == 16) {
        // Deterministic sweep: k in {2,3,4}, weights up to 6, every valid l.
        for (int k = 2; k <= 4; ++k) {
            std::vector<long long> d(static_cast<std::size_t>(k), 1);
            while (true) {
                const long long d1 = *std::min_element(d.begin(), d.end());
                if (d.front() == d1) {
                    for (long long l = 0; l <= d1 - 1; ++l) {
                        const long long lhs = min_weighted_product({d, l});
                        long long rhs = d1 - l;
                        for (int i = 1; i < k; ++i) rhs *= d[static_cast<std::size_t>(i)];
                        json line;
                        line["lemma"] = 16;
                        line["instance"] = {{"d", d}, {"l", l}};
                        line["lhs"] = lhs;
                        line["rhs"] = rhs;
                        line["ok"] = lhs >= rhs;
                        line["seed"] = nullptr;
                        std::cout << line.dump() << '\n';
                        all_ok = all_ok && lhs >= rhs;
                    }
                }
                int i = k - 1;
                while (i >= 0 && d[static_cast<std::size_t>(i)] == 6) {
                    d[static_cast<std::size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++d[static_cast<std::size_t>(i)];
            }
        }
    } else if (args.lemma == 17) {
        for (int i = 0; i < args.count; ++i) {
            const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
            const Lemma17Instance inst = random_lemma17_instance(seed);
            const Lemma17Report r = check_lemma17(inst.g, inst.x_set, inst.L);
            json line;
            line["lemma"] = 17;
            line["instance"] = {{"n", r.n}, {"s", r.s}};
            line["lhs"] = r.range_count;
            line["rhs"] = r.product;
            line["ok"] = r.ok;
            line["seed"] = seed;
            std::cout << line.dump() << '\n';
            all_ok = all_ok && r.ok;
        }
    } else if (args.lemma == 18) {
        for (int i = 0; i < args.count; ++i) {
            const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
            const ListAssignment L = random_lemma18_assignment(args.s, seed);
            const Lemma18Report r = check_lemma18(args.s, L);
            json line;
            line["lemma"] = 18;
            line["instance"] = {{"s", r.s}};
            line["lhs"] = r.range_count;
            line["rhs"] = r.bound;
            line["ok"] = r.ok;
            line["seed"] = seed;
            std::cout << line.dump() << '\n';
            all_ok = all_ok && r.ok;
        }
    } else {
        throw ParamError("--lemma must be 16, 17 or 18");
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact list-coloring lab for K_p v K_{a,b}"};
    app.set_version_flag("--version", kEngineVersion);
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "decide L-colorability of a graph");
    auto* join_opt = check->add_option("--join", check_args.join, "join graph p a b")
                         ->expected(3);
    check->add_option("--graph", check_args.graph_file, "graph file")->excludes(join_opt);
    check->add_option("--lists", check_args.lists_file, "list-assignment file")->required();
    check->add_option("--witness-out", check_args.witness_out, "write witness coloring here");
    check->add_option("--format", check_args.format)->check(CLI::IsMember({"json", "pretty"}));

    TauArgs tau_args;
    auto* tau = app.add_subcommand("tau", "generalized Ohba number of K_{a,b}");
    tau->add_option("s", tau_args.s)->required();
    tau->add_option("a", tau_args.a)->required();
    tau->add_option("b", tau_args.b)->required();
    tau->add_option("--method", tau_args.method)
        ->check(CLI::IsMember({"formula", "sandwich", "search"}));
    tau->add_option("--format", tau_args.format)->check(CLI::IsMember({"json", "pretty"}));
    tau->add_option("--cache", tau_args.cache_path, "cache file (default $OHBA_CACHE_PATH)");

    ChoosableArgs cho_args;
    auto* cho = app.add_subcommand("choosable", "exact k-choosability of K_p v K_{a,b}");
    cho->add_option("--join", cho_args.join, "join graph p a b")->expected(3)->required();
    cho->add_option("--k", cho_args.k)->required();
    cho->add_flag("--naive", cho_args.naive, "use the exhaustive oracle (|V| <= 8, k <= 3)");
    cho->add_option("--witness-out", cho_args.witness_out,
                    "write a bad assignment here when not choosable");
    cho->add_option("--format", cho_args.format)->check(CLI::IsMember({"json", "pretty"}));

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan-conjecture",
                                    "conjectured tau staircase with certification status");
    scan->add_option("--s", scan_args.s)->required();
    scan->add_option("--l-max", scan_args.l_max);
    scan->add_option("--confirm-b-limit", scan_args.confirm_b_limit,
                     "also confirm rows by exact search when the left endpoint is at most this");
    scan->add_option("--format", scan_args.format)
        ->check(CLI::IsMember({"json", "pretty"}));

    ConstructArgs con_args;
    auto* con = app.add_subcommand("construct", "emit an adversarial instance");
    con->add_option("--thm", con_args.thm)->required();
    con->add_option("--s", con_args.s);
    con->add_option("--l", con_args.l);
    con->add_option("--a", con_args.a);
    con->add_option("--b", con_args.b)->required();
    con->add_option("--out", con_args.out_dir, "write graph.txt, lists.txt, spec.json here");

    ConstructArgs ver_args;
    auto* ver = app.add_subcommand("verify", "regenerate and verify an instance");
    ver->add_option("--thm", ver_args.thm)->required();
    ver->add_option("--s", ver_args.s);
    ver->add_option("--l", ver_args.l);
    ver->add_option("--a", ver_args.a);
    ver->add_option("--b", ver_args.b)->required();

    TableArgs table_args;
    auto* table = app.add_subcommand("bounds-table", "per-b bound table for tau_s(a,.)");
    table->add_option("--a", table_args.a)->required();
    table->add_option("--s", table_args.s)->required();
    table->add_option("--b-from", table_args.b_from)->required();
    table->add_option("--b-to", table_args.b_to)->required();
    table->add_option("--format", table_args.format)
        ->check(CLI::IsMember({"csv", "json", "pretty"}));

    LemmasArgs lemmas_args;
    auto* lem = app.add_subcommand("lemmas", "counting-lemma oracle reports (JSON lines)");
    lem->add_option("--lemma", lemmas_args.lemma)->required();
    lem->add_option("--count", lemmas_args.count);
    lem->add_option("--s", lemmas_args.s, "star size for lemma 18");
    lem->add_option("--seed", lemmas_args.seed, "instance seed (default 20240)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (tau->parsed()) return run_tau(tau_args);
        if (cho->parsed()) return run_choosable(cho_args);
        if (scan->parsed()) return run_scan(scan_args);
        if (con->parsed()) return run_construct(con_args);
        if (ver->parsed()) return run_verify(ver_args);
        if (table->parsed()) return run_bounds_table(table_args);
        if (lem->parsed()) return run_lemmas(lemmas_args);
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
