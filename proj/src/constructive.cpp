#include "isolation/constructive.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "isolation/canonical.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/patterns.hpp"
#include "isolation/solver.hpp"

namespace isolation {

bool is_exceptional(const Graph& g) {
    const int n = g.order();
    if (n == 4) return g.size() >= 5;  // four vertices with a diamond: diamond or K4
    if (n == 9 && g.size() == 18) return canonical_form(g) == canonical_form(y_graph());
    return false;
}

namespace {

enum class Shape { none, diamond, k4, y };

struct Move {
    std::string label;
    VertexSet pivots;
    VertexSet removed;
};

struct Outcome {
    VertexSet set;
    std::vector<CaseStep> steps;
};

CaseStep make_step(std::string label, int order, const VertexSet& pivots, const VertexSet& removed,
                   std::vector<int> suborders = {}) {
    CaseStep s;
    s.label = std::move(label);
    s.order = order;
    s.pivots = pivots.to_vector();
    s.removed = removed.to_vector();
    s.suborders = std::move(suborders);
    return s;
}

void append_nested(std::vector<CaseStep>& out, const std::vector<CaseStep>& inner) {
    for (auto s : inner) {
        ++s.depth;
        out.push_back(std::move(s));
    }
}

class Constructor {
public:
    explicit Constructor(const Graph& g)
        : g_(g), diamond_(PatternFamily::diamond()), y_canon_(canonical_form(y_graph())) {}

    std::optional<Outcome> solve(const VertexSet& piece) {
        if (auto it = memo_.find(piece); it != memo_.end()) return it->second;
        auto result = solve_uncached(piece);
        memo_.emplace(piece, result);
        return result;
    }

    ConstructiveStats stats;

private:
    VertexSet nb(int v, const VertexSet& within) const { return g_.neighbors(v) & within; }
    VertexSet closed(int v, const VertexSet& within) const {
        VertexSet s = nb(v, within);
        s.insert(v);
        return s;
    }
    VertexSet closed(const VertexSet& a, const VertexSet& within) const {
        return closed_neighborhood(g_, a) & within;
    }
    int deg(int v, const VertexSet& within) const { return g_.neighbors(v).intersection_count(within); }
    bool has_diamond(const VertexSet& w) const { return contains_pattern_within(g_, w, diamond_); }

    Shape shape(const VertexSet& w) const {
        const int n = w.count();
        if (n != 4 && n != 9) return Shape::none;
        int twice = 0;
        bool regular4 = true;
        w.for_each([&](int v) {
            int d = deg(v, w);
            twice += d;
            if (d != 4) regular4 = false;
        });
        if (n == 4) return twice == 12 ? Shape::k4 : twice == 10 ? Shape::diamond : Shape::none;
        if (!regular4) return Shape::none;
        return canonical_form(induced(g_, w).graph) == y_canon_ ? Shape::y : Shape::none;
    }

    // Removes pendant vertices and hanging triangles (which also peels K3
    // bridges: triangle first, then the leftover pendant) until none remain.
    VertexSet strip(VertexSet core) const {
        bool changed = true;
        while (changed && core.count() > 1) {
            changed = false;
            for (int v = core.first(); v >= 0 && !changed; v = core.next(v)) {
                int d = deg(v, core);
                if (d == 1) {
                    core.erase(v);
                    changed = true;
                } else if (d == 2) {
                    VertexSet n2 = nb(v, core);
                    int a = n2.first();
                    int b = n2.next(a);
                    if (!g_.adjacent(a, b)) continue;
                    if (deg(a, core) == 2) {
                        core.erase(v);
                        core.erase(a);
                        changed = true;
                    } else if (deg(b, core) == 2) {
                        core.erase(v);
                        core.erase(b);
                        changed = true;
                    }
                }
            }
        }
        return core;
    }

    // Isolators a connected piece will consume if the bound holds for it.
    int estimate(const VertexSet& piece) const {
        if (!has_diamond(piece)) return 0;
        VertexSet core = strip(piece);
        switch (shape(core)) {
            case Shape::diamond:
            case Shape::k4: return 1;
            case Shape::y: return 2;
            case Shape::none: break;
        }
        return budget(core.count());
    }

    std::optional<Outcome> exact(const VertexSet& core, const std::string& label) const {
        SolveResult r = iota_exact_within(g_, core, diamond_);
        Outcome out;
        out.set = r.witness;
        out.steps.push_back(make_step(label, core.count(), r.witness, core));
        return out;
    }

    std::optional<Outcome> solve_uncached(const VertexSet& piece) {
        if (!has_diamond(piece)) {
            Outcome out;
            out.steps.push_back(make_step("diamond-free", piece.count(), {}, piece));
            return out;
        }
        VertexSet core = strip(piece);
        std::vector<CaseStep> prefix;
        if (core != piece)
            prefix.push_back(make_step("strip-attachments", piece.count(), {}, piece - core,
                                       {core.count()}));

        std::optional<Outcome> body;
        Shape s = shape(core);
        if (s != Shape::none) {
            body = exact(core, "exceptional-piece");
        } else if (core.count() <= 9) {
            body = exact(core, "small-order");
            if (body->set.count() > budget(core.count())) body.reset();
        } else {
            body = search(core);
        }
        if (!body) return std::nullopt;
        if (prefix.empty()) return body;
        Outcome out;
        out.set = body->set;
        out.steps = std::move(prefix);
        append_nested(out.steps, body->steps);
        return out;
    }

    // Applies the move if the residual budgets fit, recursing on the residual pieces.
    std::optional<Outcome> attempt(const VertexSet& core, const Move& m) {
        ++stats.moves_evaluated;
        if (m.pivots.empty() || !m.pivots.is_subset_of(core)) return std::nullopt;
        if (!m.removed.is_subset_of(closed(m.pivots, core)) || m.removed.count() < 2)
            return std::nullopt;
        const int limit = budget(core.count());
        VertexSet residual = core - m.removed;
        auto pieces = components_within(g_, residual);
        int est = m.pivots.count();
        for (const auto& p : pieces) {
            est += estimate(p);
            if (est > limit) return std::nullopt;
        }
        ++stats.moves_recursed;
        Outcome out;
        out.set = m.pivots;
        std::vector<int> suborders;
        std::vector<CaseStep> nested;
        for (const auto& p : pieces) {
            auto sub = solve(p);
            if (!sub) return std::nullopt;
            out.set |= sub->set;
            suborders.push_back(p.count());
            nested.insert(nested.end(), sub->steps.begin(), sub->steps.end());
        }
        if (out.set.count() > limit) return std::nullopt;
        if (has_diamond(core - closed(out.set, core))) return std::nullopt;
        out.steps.push_back(make_step(m.label, core.count(), m.pivots, m.removed, suborders));
        append_nested(out.steps, nested);
        return out;
    }

    std::optional<Outcome> try_moves(const VertexSet& core, const std::vector<Move>& moves) {
        for (const auto& m : moves)
            if (auto r = attempt(core, m)) return r;
        return std::nullopt;
    }

    Move single(std::string label, int p, const VertexSet& core) const {
        return {std::move(label), VertexSet{p}, closed(p, core)};
    }

    Move multi(std::string label, const VertexSet& pivots, const VertexSet& core) const {
        return {std::move(label), pivots, closed(pivots, core)};
    }

    // Pivot with its closed neighbourhood, and with one neighbour kept back.
    void add_variants(std::vector<Move>& moves, const std::string& label, int p,
                      const VertexSet& core) const {
        VertexSet full = closed(p, core);
        moves.push_back({label, VertexSet{p}, full});
        nb(p, core).for_each([&](int q) { moves.push_back({label, VertexSet{p}, full - VertexSet{q}}); });
    }

    std::optional<Outcome> search(const VertexSet& core) {
        std::vector<int> named;
        std::vector<Move> moves = core_max_degree(core) == 3 ? cubic_moves(core, named)
                                                             : dense_moves(core, named);
        if (auto r = try_moves(core, moves)) return r;

        // Named-pivot fallback: every vertex the case analysis names, with
        // neighbourhood variants, then pairs of them.
        ++stats.fallback_levels;
        std::vector<Move> fallback;
        for (int p : named) add_variants(fallback, "fallback", p, core);
        for (size_t i = 0; i < named.size(); ++i)
            for (size_t j = i + 1; j < named.size(); ++j)
                fallback.push_back(multi("fallback", VertexSet{named[i], named[j]}, core));
        if (auto r = try_moves(core, fallback)) return r;

        ++stats.wide_fallback_levels;
        std::vector<int> order = core.to_vector();
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg(a, core) > deg(b, core); });
        std::vector<Move> wide;
        for (int p : order) add_variants(wide, "fallback-wide", p, core);
        if (auto r = try_moves(core, wide)) return r;
        wide.clear();
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                wide.push_back(multi("fallback-wide", VertexSet{order[i], order[j]}, core));
        return try_moves(core, wide);
    }

    int core_max_degree(const VertexSet& core) const {
        int m = 0;
        core.for_each([&](int v) { m = std::max(m, deg(v, core)); });
        return m;
    }

    static void add_named(std::vector<int>& named, int v, size_t cap) {
        if (v < 0 || named.size() >= cap) return;
        if (std::find(named.begin(), named.end(), v) == named.end()) named.push_back(v);
    }

    // Maximum degree 3: a vertex u whose closed neighbourhood spans a diamond,
    // with u2 the other hub and rims u1, u3.
    std::vector<Move> cubic_moves(const VertexSet& core, std::vector<int>& named) const {
        std::vector<Move> moves;
        const size_t cap = 3 + 8;
        int u = -1, u1 = -1, u2 = -1, u3 = -1;
        for (int v = core.first(); v >= 0 && u < 0; v = core.next(v)) {
            if (deg(v, core) != 3) continue;
            std::vector<int> n3 = nb(v, core).to_vector();
            for (int i = 0; i < 3; ++i) {
                int a = n3[i], b = n3[(i + 1) % 3], c = n3[(i + 2) % 3];
                if (g_.adjacent(a, b) && g_.adjacent(a, c) && !g_.adjacent(b, c)) {
                    u = v;
                    u2 = a;
                    u1 = b;
                    u3 = c;
                    break;
                }
            }
        }
        if (u < 0) return moves;
        if (deg(u1, core) < deg(u3, core)) std::swap(u1, u3);
        for (int v : {u, u1, u2, u3}) add_named(named, v, cap);

        VertexSet hub = closed(u, core);
        auto outside = [&](int v) { return (nb(v, core) - hub).first(); };
        int w = deg(u1, core) == 3 ? outside(u1) : -1;
        int z = deg(u3, core) == 3 ? outside(u3) : -1;
        add_named(named, w, cap);
        add_named(named, z, cap);

        const bool both_heavy = w >= 0 && z >= 0;
        const std::string label = both_heavy ? "max-degree-3:two-heavy-rims"
                                             : "max-degree-3:one-heavy-rim";
        moves.push_back(single(label, u1, core));
        if (both_heavy) moves.push_back(single(label, u3, core));
        for (int p : {w, z}) {
            if (p < 0) continue;
            moves.push_back(single(label, p, core));
            // Second pivot beside w: its neighbours outside the hub diamond.
            VertexSet beyond = nb(p, core) - hub;
            beyond.for_each([&](int q) {
                add_named(named, q, cap);
                moves.push_back(multi(label, VertexSet{p, q}, core));
                (nb(q, core) - hub - VertexSet{p}).for_each([&](int r) {
                    moves.push_back(multi(label, VertexSet{p, r}, core));
                });
            });
        }
        return moves;
    }

    struct Piece {
        VertexSet vertices;
        Shape shape = Shape::none;
        int rank = 4;  // k4, y, diamond with hub attached, diamond rim-only, other
    };

    // Maximum degree >= 4: u of maximum degree, H = core - N[u].
    std::vector<Move> dense_moves(const VertexSet& core, std::vector<int>& named) const {
        std::vector<Move> moves;
        int u = -1;
        int delta = 0;
        core.for_each([&](int v) {
            int d = deg(v, core);
            if (d > delta) {
                delta = d;
                u = v;
            }
        });
        const size_t cap = static_cast<size_t>(delta) + 8;
        const VertexSet nu = nb(u, core);
        const VertexSet hub = closed(u, core);
        add_named(named, u, cap);
        nu.for_each([&](int v) { add_named(named, v, cap); });

        moves.push_back(single("max-degree-4+:max-vertex", u, core));

        std::vector<Piece> pieces;
        for (const auto& p : components_within(g_, core - hub)) {
            Piece piece{p, shape(p), 4};
            switch (piece.shape) {
                case Shape::k4: piece.rank = 0; break;
                case Shape::y: piece.rank = 1; break;
                case Shape::diamond: {
                    bool hub_attached = false;
                    p.for_each([&](int v) {
                        if (deg(v, p) == 3 && g_.neighbors(v).intersects(nu)) hub_attached = true;
                    });
                    piece.rank = hub_attached ? 2 : 3;
                    break;
                }
                case Shape::none: break;
            }
            pieces.push_back(piece);
        }
        std::stable_sort(pieces.begin(), pieces.end(),
                         [](const Piece& a, const Piece& b) { return a.rank < b.rank; });
        if (pieces.empty() || pieces.front().rank == 4) return moves;

        const Piece& first = pieces.front();
        const VertexSet g1 = first.vertices;
        int u1 = -1;
        nu.for_each([&](int v) {
            if (u1 < 0 && g_.neighbors(v).intersects(g1)) {
                if (first.rank != 2) {
                    u1 = v;
                    return;
                }
                // prefer a neighbour of u touching a hub of the diamond
                (g_.neighbors(v) & g1).for_each([&](int x) {
                    if (deg(x, g1) == 3) u1 = v;
                });
            }
        });
        if (u1 < 0) return moves;
        int x = -1;
        (g_.neighbors(u1) & g1).for_each([&](int c) {
            if (x >= 0) return;
            if (first.rank == 2 && deg(c, g1) != 3) return;
            if (first.rank == 3 && deg(c, g1) != 2) return;
            x = c;
        });
        if (x < 0) x = (g_.neighbors(u1) & g1).first();
        add_named(named, x, cap);
        (nb(x, g1)).for_each([&](int v) { add_named(named, v, cap); });

        const VertexSet g1u1 = g1 | VertexSet{u1};
        const VertexSet rest = core - g1u1;  // the graph G* of the case analysis
        const auto rest_parts = components_within(g_, rest);
        const bool rest_connected = rest_parts.size() == 1;
        const std::string tag = rest_connected ? "max-degree-4+:case1" : "max-degree-4+:case2";

        // A component of G* shaped like Y, and its P3 pivot relative to u.
        int y_pivot = -1;
        for (const auto& part : rest_parts) {
            if (!part.contains(u) || shape(part) != Shape::y) continue;
            Subgraph sub = induced(g_, part);
            int local_u = static_cast<int>(
                std::find(sub.to_parent.begin(), sub.to_parent.end(), u) - sub.to_parent.begin());
            int v = p3_pivot(sub.graph, local_u);
            if (v >= 0) y_pivot = sub.to_parent[v];
        }
        add_named(named, y_pivot, cap);

        switch (first.shape) {
            case Shape::k4: {
                moves.push_back({tag + ".k4", VertexSet{x}, g1u1});
                if (y_pivot >= 0) moves.push_back(multi(tag + ".k4", VertexSet{u1, y_pivot}, core));
                break;
            }
            case Shape::y: {
                // dominating pair of g1 + u1, preferring pairs through x
                std::vector<int> cand = g1u1.to_vector();
                std::vector<VertexSet> pairs;
                for (size_t i = 0; i < cand.size(); ++i)
                    for (size_t j = i + 1; j < cand.size(); ++j) {
                        VertexSet d{cand[i], cand[j]};
                        if (g1u1.is_subset_of(closed_neighborhood(g_, d))) pairs.push_back(d);
                    }
                std::stable_partition(pairs.begin(), pairs.end(),
                                      [&](const VertexSet& d) { return d.contains(x); });
                for (const auto& d : pairs) moves.push_back({tag + ".y", d, g1u1});
                if (y_pivot >= 0) {
                    Subgraph sub = induced(g_, g1);
                    int local_x = static_cast<int>(std::find(sub.to_parent.begin(),
                                                             sub.to_parent.end(), x) -
                                                   sub.to_parent.begin());
                    int v2 = p3_pivot(sub.graph, local_x);
                    if (v2 >= 0)
                        moves.push_back(multi(tag + ".y",
                                              VertexSet{y_pivot, u1, sub.to_parent[v2]}, core));
                }
                break;
            }
            case Shape::diamond: {
                if (first.rank == 2) {
                    moves.push_back({tag + ".diamond-hub", VertexSet{x}, g1u1});
                    if (y_pivot >= 0)
                        moves.push_back(multi(tag + ".diamond-hub", VertexSet{u1, y_pivot}, core));
                    nb(x, g1).for_each([&](int xi) {
                        moves.push_back({tag + ".diamond-hub", VertexSet{xi},
                                         closed(xi, core) - VertexSet{x}});
                    });
                } else {
                    // x and x2 are the degree-2 vertices of the diamond, x1, x3 its hubs.
                    int x2 = (g1 - closed(x, g1)).first();
                    add_named(named, x2, cap);
                    moves.push_back({tag + ".diamond-rim", VertexSet{x}, closed(x, core) & g1u1});
                    if (y_pivot >= 0)
                        moves.push_back(multi(tag + ".diamond-rim", VertexSet{u1, y_pivot}, core));
                    if (x2 >= 0) {
                        moves.push_back(single(tag + ".diamond-rim", x2, core));
                        (nb(x2, core) & nu).for_each([&](int ui) {
                            moves.push_back(single(tag + ".diamond-rim", ui, core));
                        });
                    }
                }
                break;
            }
            case Shape::none: break;
        }
        if (!rest_connected) {
            moves.push_back(single(tag, u1, core));
            // a Y-shaped part of G* around u, paired with u1
            if (y_pivot >= 0) moves.push_back(multi(tag, VertexSet{u1, y_pivot}, core));
            nu.for_each([&](int ui) {
                if (ui != u1 && g_.neighbors(ui).intersection_count(g1) >= 2)
                    moves.push_back(single(tag, ui, core));
            });
            g1.for_each([&](int xi) {
                if (xi != x) moves.push_back({tag, VertexSet{xi}, closed(xi, core) - VertexSet{x}});
            });
        }
        return moves;
    }

    const Graph& g_;
    PatternFamily diamond_;
    std::string y_canon_;
    std::map<VertexSet, std::optional<Outcome>> memo_;
};

}  // namespace

std::string CaseTrace::to_text() const {
    std::ostringstream out;
    auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    for (const auto& s : steps) {
        out << std::string(2 * s.depth, ' ') << s.label << " order=" << s.order
            << " pivots=" << list(s.pivots) << " removed=" << list(s.removed);
        if (!s.suborders.empty()) out << " suborders=" << list(s.suborders);
        out << '\n';
    }
    return out.str();
}

std::string CaseTrace::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : steps)
        arr.push_back({{"label", s.label},
                       {"depth", s.depth},
                       {"order", s.order},
                       {"pivots", s.pivots},
                       {"removed", s.removed},
                       {"suborders", s.suborders}});
    return arr.dump();
}

ConstructiveResult isolating_set_n5(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("isolating_set_n5 requires a connected graph");
    if (is_exceptional(g))
        throw ExceptionalGraphError("graph is the diamond, K4 or Y; the n/5 bound does not apply");
    Constructor c(g);
    auto outcome = c.solve(g.vertices());
    if (!outcome) throw BudgetInvariantError("no candidate met the n/5 budget", encode_g6(g));
    ConstructiveResult r;
    r.set = outcome->set;
    r.trace.steps = std::move(outcome->steps);
    r.stats = c.stats;
    if (r.set.count() > budget(g.order()) ||
        !is_isolating(g, PatternFamily::diamond(), r.set))
        throw BudgetInvariantError("constructed set failed certification", encode_g6(g));
    return r;
}

}  // namespace isolation
