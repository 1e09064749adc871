#include "isolation/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "isolation/canonical.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/solver.hpp"

namespace isolation {

int default_workers() {
    if (const char* env = std::getenv("ISOLATION_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <typename Job>
void parallel_for(std::size_t count, int workers, Job&& job) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int workers) {
    if (n < 1 || n > 9) throw std::out_of_range("enumerate_connected supports 1 <= n <= 9");
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        const int m = k - 1;
        const std::size_t masks = (std::size_t{1} << m) - 1;
        std::vector<std::set<std::string>> found(level.size());
        parallel_for(level.size(), workers, [&](std::size_t i) {
            for (std::size_t mask = 1; mask <= masks; ++mask) {
                Graph h = level[i];
                int v = h.add_vertex();
                for (int b = 0; b < m; ++b)
                    if ((mask >> b) & 1) h.add_edge(b, v);
                found[i].insert(canonical_form(h));
            }
        });
        std::set<std::string> all;
        for (auto& f : found) all.merge(f);
        level.clear();
        level.reserve(all.size());
        for (const auto& code : all) level.push_back(decode_g6(code));
    }
    return level;
}

std::pair<int, int> parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument("");
        size_t a = 0, b = 0;
        int p = std::stoi(text.substr(0, slash), &a);
        int q = std::stoi(text.substr(slash + 1), &b);
        if (a != slash || b != text.size() - slash - 1 || p < 0 || q <= 0)
            throw std::invalid_argument("");
        return {p, q};
    } catch (const std::exception&) {
        throw std::invalid_argument("ratio must look like p/q with q > 0, got '" + text + "'");
    }
}

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::ok: return "ok";
        case BoundStatus::extremal: return "extremal";
        case BoundStatus::exception: return "exception";
    }
    return "?";
}

long BoundReport::unknown_exceptions() const {
    return std::count_if(exceptions.begin(), exceptions.end(),
                         [](const BoundRecord& r) { return !r.known; });
}

std::vector<std::string> BoundReport::exception_classes() const {
    std::set<std::string> classes;
    for (const auto& r : exceptions) classes.insert(canonical_form(decode_g6(r.g6)));
    return {classes.begin(), classes.end()};
}

BoundReport verify_bound(const std::vector<SourceGraph>& source, const BoundSpec& spec,
                         int workers, std::size_t extremal_cap) {
    auto start = std::chrono::steady_clock::now();
    BoundReport report;
    std::vector<BoundRecord> records(source.size());
    std::vector<char> connected(source.size(), 0);
    parallel_for(source.size(), workers, [&](std::size_t i) {
        const Graph& g = source[i].graph;
        if (!is_connected(g) || g.order() == 0) return;
        connected[i] = 1;
        BoundRecord& r = records[i];
        r.g6 = encode_g6(g);
        r.line = source[i].line;
        r.n = g.order();
        r.iota = iota_exact(g, spec.family).value;
        r.bound = spec.bound(r.n);
        r.raw_bound = static_cast<double>(spec.numerator) * r.n / spec.denominator;
        if (r.iota > r.bound) {
            r.status = BoundStatus::exception;
            if (iota_exact(decode_g6(r.g6), spec.family).value != r.iota)
                throw std::logic_error("exception did not reproduce from graph6: " + r.g6);
            std::string canon = canonical_form(g);
            r.known = std::find(spec.known_exceptions.begin(), spec.known_exceptions.end(),
                                canon) != spec.known_exceptions.end();
        } else if (r.iota == r.bound && r.bound > 0) {
            r.status = BoundStatus::extremal;
        }
    });
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (!connected[i]) {
            ++report.skipped_disconnected;
            continue;
        }
        const BoundRecord& r = records[i];
        auto& tally = report.per_order[r.n];
        ++tally.checked;
        if (r.status == BoundStatus::exception) {
            ++tally.exceptions;
            report.exceptions.push_back(r);
        } else if (r.status == BoundStatus::extremal) {
            ++tally.extremal;
            if (report.extremal.size() < extremal_cap) report.extremal.push_back(r);
        }
        report.records.push_back(r);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<SourceGraph> parse_source(std::istream& in,
                                      std::vector<std::pair<std::size_t, std::string>>& malformed) {
    std::vector<SourceGraph> out;
    for (const auto& line : read_g6_lines(in)) {
        try {
            out.push_back({decode_g6(line.text), line.line_number});
        } catch (const Graph6Error& e) {
            malformed.emplace_back(line.line_number, e.what());
        }
    }
    return out;
}

std::vector<SourceGraph> enumerated_source(int min_n, int max_n, int workers) {
    std::vector<SourceGraph> out;
    for (int n = std::max(1, min_n); n <= max_n; ++n)
        for (auto& g : enumerate_connected(n, workers)) out.push_back({std::move(g), 0});
    return out;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(order[i], order[pick(rng)]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_gadget_graph(int target_n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    Graph g(0);
    while (g.order() < target_n) {
        Graph piece;
        switch (kind(rng)) {
            case 0:
            case 1:
            case 2: piece = diamond_graph(); break;
            case 3:
            case 4: piece = complete_graph(4); break;
            case 5: piece = y_graph(); break;
            case 6: piece = path_graph(1); break;
            case 7: piece = path_graph(2); break;
            case 8: piece = complete_graph(3); break;
            default: piece = book_graph(3); break;
        }
        if (g.order() + piece.order() > target_n) piece = path_graph(target_n - g.order());
        const int base = g.order();
        g = disjoint_union(g, piece);
        if (base > 0) {
            std::uniform_int_distribution<int> old_v(0, base - 1);
            std::uniform_int_distribution<int> new_v(base, g.order() - 1);
            std::uniform_int_distribution<int> extra(0, 2);
            int links = 1 + (extra(rng) == 0 ? 1 : 0);
            for (int i = 0; i < links; ++i) {
                int a = old_v(rng), b = new_v(rng);
                if (!g.adjacent(a, b)) g.add_edge(a, b);
            }
        }
    }
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute(g, perm);
}

AttachmentReport verify_attachment_invariance(long samples, int n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, n_max);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const auto diamond = PatternFamily::diamond();
    AttachmentReport report;
    for (long s = 0; s < samples; ++s) {
        int n = order(rng);
        Graph g = random_connected_graph(n, density(rng), rng);
        std::uniform_int_distribution<int> vertex(0, n - 1);
        int v = vertex(rng);
        Attachment a = static_cast<Attachment>(s % 3);
        int before = iota_exact(g, diamond).value;
        int after = iota_exact(attach(g, v, a), diamond).value;
        ++report.samples;
        ++report.per_kind[s % 3];
        if (before != after) report.violations.push_back({encode_g6(g), v, a, before, after});
    }
    return report;
}

std::vector<Graph> find_extremal(const std::vector<Graph>& population, const PatternFamily& f) {
    std::vector<Graph> out;
    for (const auto& g : population) {
        int n = g.order();
        if (n == 0 || n % 5 != 0 || !is_connected(g)) continue;
        if (iota_exact(g, f).value == n / 5) out.push_back(g);
    }
    return out;
}

std::vector<Graph> find_extremal(int n, const PatternFamily& f) {
    if (n % 5 != 0) return {};
    return find_extremal(enumerate_connected(n), f);
}

std::vector<std::string> known_exceptions_for(const PatternFamily& f, int numerator,
                                              int denominator) {
    using Kind = PatternFamily::Kind;
    std::vector<Graph> graphs;
    auto ratio_is = [&](int p, int q) { return numerator * q == denominator * p; };
    switch (f.kind()) {
        case Kind::diamond:
            if (ratio_is(1, 5)) graphs = {diamond_graph(), complete_graph(4), y_graph()};
            break;
        case Kind::k1:
            if (ratio_is(1, 2)) graphs = {complete_graph(1)};
            break;
        case Kind::k2:
            if (ratio_is(1, 3)) graphs = {complete_graph(2), cycle_graph(5)};
            break;
        case Kind::clique:
            if (ratio_is(1, f.parameter() + 1)) graphs = {complete_graph(f.parameter())};
            break;
        case Kind::any_cycle:
            if (ratio_is(1, 4)) graphs = {complete_graph(3)};
            break;
        case Kind::p3:
            if (ratio_is(2, 7)) graphs = {path_graph(3), cycle_graph(3), cycle_graph(6)};
            break;
        default: break;
    }
    std::vector<std::string> out;
    for (const auto& g : graphs) out.push_back(canonical_form(g));
    return out;
}

}  // namespace isolation
