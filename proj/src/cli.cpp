#include "isolation/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isolation/canonical.hpp"
#include "isolation/constructive.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/solver.hpp"

namespace isolation {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family = "diamond";
    std::string ratio = "1/5";
    std::string input = "-";
    std::string format;  ///< empty selects the subcommand default
    int workers = 0;
    std::uint64_t seed = 1;
    std::string set;
    std::string name;
    int enumerate_max = 0;
    int enumerate_min = 1;
    bool allow_known = false;
    std::vector<std::string> known;
    long samples = 500;
    int max_n = 12;
};

std::vector<int> parse_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0) throw UsageError("--set: bad vertex '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// Reads graph6 input; malformed lines are fatal unless `skipped` is given.
std::vector<SourceGraph> read_input(const Options& o, std::istream& in,
                                    std::vector<std::pair<std::size_t, std::string>>* skipped) {
    std::vector<std::pair<std::size_t, std::string>> malformed;
    std::vector<SourceGraph> graphs;
    if (o.input == "-") {
        graphs = parse_source(in, malformed);
    } else {
        std::ifstream file(o.input);
        if (!file) throw UsageError("cannot read input file '" + o.input + "'");
        graphs = parse_source(file, malformed);
    }
    if (!malformed.empty()) {
        if (!skipped) {
            const auto& [line, what] = malformed.front();
            throw UsageError("malformed graph6 on line " + std::to_string(line) + ": " + what);
        }
        *skipped = std::move(malformed);
    }
    return graphs;
}

void emit(std::ostream& out, const Options& o, const json& record,
          const std::vector<std::string>& columns) {
    if (o.format == "table") {
        for (size_t i = 0; i < columns.size(); ++i) {
            if (i) out << "  ";
            const json& v = record.contains(columns[i]) ? record[columns[i]] : json();
            out << std::left << std::setw(10) << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << '\n';
    } else if (o.format == "g6" && record.contains("g6")) {
        out << record["g6"].get<std::string>() << '\n';
    } else {
        out << record.dump() << '\n';
    }
}

void table_header(std::ostream& out, const Options& o, const std::vector<std::string>& columns) {
    if (o.format != "table") return;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out << "  ";
        out << std::left << std::setw(10) << columns[i];
    }
    out << '\n';
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
    auto family = PatternFamily::parse(o.family);
    auto graphs = read_input(o, in, nullptr);
    const std::vector<std::string> cols{"g6", "n", "iota", "witness"};
    table_header(out, o, cols);
    for (const auto& s : graphs) {
        SolveResult r = iota_exact(s.graph, family);
        emit(out, o,
             {{"g6", encode_g6(s.graph)},
              {"n", s.graph.order()},
              {"family", family.name()},
              {"iota", r.value},
              {"witness", r.witness.to_vector()},
              {"copies", r.copies_found},
              {"nodes", r.nodes_explored},
              {"elapsed_ms", millis(r.elapsed)}},
             cols);
    }
    return 0;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out) {
    auto family = PatternFamily::parse(o.family);
    auto members = parse_set(o.set);
    auto graphs = read_input(o, in, nullptr);
    const std::vector<std::string> cols{"g6", "set", "isolating"};
    table_header(out, o, cols);
    bool all = true;
    for (const auto& s : graphs) {
        VertexSet set;
        for (int v : members) {
            if (v >= s.graph.order())
                throw UsageError("--set vertex " + std::to_string(v) + " out of range on line " +
                                 std::to_string(s.line));
            set.insert(v);
        }
        bool ok = is_isolating(s.graph, family, set);
        all = all && ok;
        emit(out, o,
             {{"g6", encode_g6(s.graph)},
              {"family", family.name()},
              {"set", members},
              {"isolating", ok}},
             cols);
    }
    return all ? 0 : 1;
}

int cmd_construct(const Options& o, std::ostream& out) {
    Graph g = make_named(o.name);
    if (o.format == "json-lines")
        out << json{{"name", o.name}, {"g6", encode_g6(g)}, {"n", g.order()}, {"m", g.size()}}.dump()
            << '\n';
    else
        out << encode_g6(g) << '\n';
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.enumerate_max < 1 || o.enumerate_max > 9) throw UsageError("--n must be in 1..9");
    for (int n = std::max(1, o.enumerate_min); n <= o.enumerate_max; ++n) {
        for (const auto& g : enumerate_connected(n, o.workers)) {
            if (o.format == "json-lines")
                out << json{{"g6", encode_g6(g)}, {"n", n}, {"m", g.size()}}.dump() << '\n';
            else
                out << encode_g6(g) << '\n';
        }
    }
    return 0;
}

int cmd_bound(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    BoundSpec spec;
    spec.family = PatternFamily::parse(o.family);
    std::tie(spec.numerator, spec.denominator) = parse_ratio(o.ratio);
    spec.known_exceptions = known_exceptions_for(spec.family, spec.numerator, spec.denominator);
    for (const auto& k : o.known) {
        try {
            spec.known_exceptions.push_back(canonical_form(decode_g6(k)));
        } catch (const Graph6Error& e) {
            throw UsageError("--known: " + std::string(e.what()));
        }
    }

    std::vector<std::pair<std::size_t, std::string>> malformed;
    std::vector<SourceGraph> source;
    if (o.enumerate_max > 0) {
        if (o.enumerate_max > 9) throw UsageError("--enumerate supports orders up to 9");
        source = enumerated_source(o.enumerate_min, o.enumerate_max, o.workers);
    } else {
        source = read_input(o, in, &malformed);
    }
    BoundReport report = verify_bound(source, spec, o.workers);
    report.malformed = malformed;

    const std::vector<std::string> cols{"g6", "n", "iota", "bound", "status"};
    table_header(out, o, cols);
    for (const auto& r : report.records) {
        if (o.format == "g6" && r.status != BoundStatus::exception) continue;
        json rec{{"g6", r.g6},      {"n", r.n},         {"iota", r.iota},
                 {"bound", r.bound}, {"raw_bound", r.raw_bound}, {"status", to_string(r.status)}};
        if (r.line) rec["line"] = r.line;
        if (r.status == BoundStatus::exception) rec["known"] = r.known;
        emit(out, o, rec, cols);
    }
    json per_order = json::object();
    long extremal_total = 0;
    for (const auto& [n, t] : report.per_order) extremal_total += t.extremal;
    for (const auto& [n, t] : report.per_order)
        per_order[std::to_string(n)] = {
            {"checked", t.checked}, {"exceptions", t.exceptions}, {"extremal", t.extremal}};
    json exceptions = json::array();
    for (const auto& r : report.exceptions)
        exceptions.push_back({{"g6", r.g6}, {"iota", r.iota}, {"known", r.known}});
    json bad = json::array();
    for (const auto& [line, what] : report.malformed) {
        bad.push_back({{"line", line}, {"error", what}});
        err << "line " << line << ": " << what << '\n';
    }
    json summary{{"summary", true},
                 {"family", spec.family.name()},
                 {"ratio", o.ratio},
                 {"per_order", per_order},
                 {"exceptions", exceptions},
                 {"extremal_count", extremal_total},
                 {"skipped_disconnected", report.skipped_disconnected},
                 {"malformed", bad},
                 {"elapsed_ms", millis(report.elapsed)}};
    if (o.format == "table") {
        out << "checked=" << report.records.size() << " exceptions=" << report.exceptions.size()
            << " unknown=" << report.unknown_exceptions() << '\n';
    } else if (o.format == "json-lines") {
        out << summary.dump() << '\n';
    }
    if (!report.malformed.empty()) return 2;
    if (report.exceptions.empty()) return 0;
    if (o.allow_known && report.unknown_exceptions() == 0) return 0;
    return 1;
}

int cmd_n5(const Options& o, std::istream& in, std::ostream& out, bool with_trace) {
    auto graphs = read_input(o, in, nullptr);
    const std::vector<std::string> cols{"g6", "n", "budget", "size", "set", "status"};
    if (!with_trace) table_header(out, o, cols);
    bool violation = false;
    for (const auto& s : graphs) {
        const Graph& g = s.graph;
        json rec{{"g6", encode_g6(g)}, {"n", g.order()}, {"budget", budget(g.order())}};
        try {
            auto r = isolating_set_n5(g);
            bool ok = is_isolating(g, PatternFamily::diamond(), r.set) &&
                      r.set.count() <= budget(g.order());
            violation = violation || !ok;
            rec["set"] = r.set.to_vector();
            rec["size"] = r.set.count();
            rec["status"] = ok ? "ok" : "violation";
            if (with_trace) {
                if (o.format == "table") {
                    out << rec["g6"].get<std::string>() << " n=" << g.order()
                        << " budget=" << budget(g.order()) << " size=" << r.set.count() << '\n'
                        << r.trace.to_text();
                    continue;
                }
                rec["trace"] = json::parse(r.trace.to_json());
            }
        } catch (const ExceptionalGraphError&) {
            rec["status"] = "exceptional";
        } catch (const PreconditionError&) {
            rec["status"] = "disconnected";
        } catch (const BudgetInvariantError& e) {
            rec["status"] = "violation";
            rec["error"] = e.what();
            violation = true;
        }
        emit(out, o, rec, cols);
    }
    return violation ? 1 : 0;
}

int cmd_attachment(const Options& o, std::ostream& out) {
    if (o.max_n < 1 || o.max_n > 12) throw UsageError("--max-n must be in 1..12");
    auto report = verify_attachment_invariance(o.samples, o.max_n, o.seed);
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"g6", v.g6},
                              {"vertex", v.vertex},
                              {"kind", to_string(v.kind)},
                              {"before", v.before},
                              {"after", v.after}});
    json rec{{"samples", report.samples}, {"violations", violations}, {"passed", report.passed()}};
    if (o.format == "table")
        out << "samples=" << report.samples << " violations=" << report.violations.size() << '\n';
    else
        out << rec.dump() << '\n';
    return report.passed() ? 0 : 1;
}

int cmd_ycheck(const Options& o, std::istream& in, std::ostream& out) {
    std::vector<SourceGraph> graphs;
    if (o.input == "-" && o.name.empty())
        graphs.push_back({y_graph(), 0});
    else if (!o.name.empty())
        graphs.push_back({make_named(o.name), 0});
    else
        graphs = read_input(o, in, nullptr);
    bool all = true;
    for (const auto& s : graphs) {
        const Graph& g = s.graph;
        YProperties p = verify_y_properties(g);
        int iota = iota_exact(g, PatternFamily::diamond()).value;
        bool exceeds = iota > budget(g.order());
        bool ok = p.all() && iota == 2 && exceeds;
        all = all && ok;
        json rec{{"g6", encode_g6(g)},
                 {"connectivity_four", p.connectivity_four},
                 {"four_regular", p.four_regular},
                 {"common_neighbors_le_two", p.common_neighbors_le_two},
                 {"p3_pivots", p.p3_pivots},
                 {"iota", iota},
                 {"exceeds_bound", exceeds},
                 {"passed", ok}};
        emit(out, o, rec, {"g6", "iota", "passed"});
    }
    return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Options o;
    o.workers = default_workers();
    CLI::App app{"Isolation numbers of graphs: exact solver, n/5 construction, bound sweeps"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "Pattern family (diamond, k1, k2, k:K, p3, star:K, "
                                              "book:P, anycycle, custom:<g6>)");
        sub->add_option("--input", o.input, "graph6 file, or - for standard input");
        sub->add_option("--format", o.format, "json-lines, table or g6")
            ->check(CLI::IsMember({"json-lines", "table", "g6"}));
        sub->add_option("--workers", o.workers, "Worker threads (env ISOLATION_WORKERS)")
            ->check(CLI::PositiveNumber);
    };

    auto* solve = app.add_subcommand("solve", "Exact isolation number and witness per graph");
    add_common(solve);
    auto* certify = app.add_subcommand("certify", "Check that a vertex set is isolating");
    add_common(certify);
    certify->add_option("--set", o.set, "Comma-separated vertices, e.g. 0,3,7")->required();
    auto* construct = app.add_subcommand("construct", "Emit a named graph");
    construct->add_option("--name", o.name, "path:N, cycle:N, complete:N, complete_bipartite:P,Q, "
                                            "diamond, book:P, circulant:N:D1,D2, Y, H15")
        ->required();
    construct->add_option("--format", o.format)->check(CLI::IsMember({"json-lines", "table", "g6"}));
    auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
    add_common(enumerate);
    enumerate->add_option("--n", o.enumerate_max, "Largest order (<= 9)")->required();
    enumerate->add_option("--min-n", o.enumerate_min, "Smallest order");
    auto* bound = app.add_subcommand("bound", "Check iota <= floor(p n / q) over a population");
    add_common(bound);
    bound->add_option("--ratio", o.ratio, "Bound ratio p/q");
    bound->add_option("--enumerate", o.enumerate_max, "Check all connected graphs up to this order");
    bound->add_option("--min-n", o.enumerate_min, "Smallest enumerated order");
    bound->add_flag("--allow-known", o.allow_known, "Exit 0 when every exception is known");
    bound->add_option("--known", o.known, "Additional known exceptions (graph6)")->delimiter(',');
    auto* n5 = app.add_subcommand("n5", "Construct a diamond-isolating set of size <= n/5");
    add_common(n5);
    auto* trace = app.add_subcommand("trace", "n5 with the full case trace");
    add_common(trace);
    auto* attachment = app.add_subcommand("lemma5-check",
                                      "Attachment gadgets leave the isolation number unchanged");
    add_common(attachment);
    attachment->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    attachment->add_option("--max-n", o.max_n);
    attachment->add_option("--seed", o.seed);
    auto* ycheck = app.add_subcommand("y-check", "Structural checks of the 9-vertex exception");
    add_common(ycheck);
    ycheck->add_option("--name", o.name, "Named graph to check instead of Y");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (o.format.empty()) o.format = enumerate->parsed() || construct->parsed() ? "g6" : "json-lines";

    try {
        if (solve->parsed()) return cmd_solve(o, in, out);
        if (certify->parsed()) return cmd_certify(o, in, out);
        if (construct->parsed()) return cmd_construct(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (bound->parsed()) return cmd_bound(o, in, out, err);
        if (n5->parsed()) return cmd_n5(o, in, out, false);
        if (trace->parsed()) return cmd_n5(o, in, out, true);
        if (attachment->parsed()) return cmd_attachment(o, out);
        if (ycheck->parsed()) return cmd_ycheck(o, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace isolation
