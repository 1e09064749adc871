#include "isolation/patterns.hpp"

#include <algorithm>
#include <unordered_set>

#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"

namespace isolation {

PatternFamily PatternFamily::clique(int k) {
    if (k < 3) throw std::invalid_argument("clique family needs k >= 3 (use k1/k2)");
    if (k > 8) throw std::invalid_argument("clique patterns are capped at 8 vertices");
    return PatternFamily(Kind::clique, k);
}

PatternFamily PatternFamily::star(int k) {
    if (k < 1) throw std::invalid_argument("star parameter must be positive");
    if (k + 2 > 8) throw std::invalid_argument("star patterns are capped at 8 vertices");
    return PatternFamily(Kind::star, k);
}

PatternFamily PatternFamily::book(int p) {
    if (p < 1) throw std::invalid_argument("book page count must be positive");
    if (p + 2 > 8) throw std::invalid_argument("book patterns are capped at 8 vertices");
    return PatternFamily(Kind::book, p);
}

PatternFamily PatternFamily::custom(Graph pattern) {
    if (pattern.order() < 1 || pattern.order() > 8)
        throw std::invalid_argument("custom pattern must have 1..8 vertices");
    if (!is_connected(pattern)) throw std::invalid_argument("custom pattern must be connected");
    PatternFamily f(Kind::custom, pattern.order());
    f.custom_ = std::move(pattern);
    return f;
}

namespace {

int parse_positive(const std::string& text, const std::string& spec) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw std::invalid_argument("bad numeric parameter in family '" + spec + "'");
    return value;
}

}  // namespace

PatternFamily PatternFamily::parse(const std::string& spec) {
    std::string head = spec;
    std::string arg;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        arg = spec.substr(colon + 1);
    }
    std::transform(head.begin(), head.end(), head.begin(), ::tolower);
    if (arg.empty()) {
        if (head == "k1") return k1();
        if (head == "k2") return k2();
        if (head == "p3") return p3();
        if (head == "diamond" || head == "b2") return diamond();
        if (head == "anycycle" || head == "cycles") return any_cycle();
    } else {
        if (head == "k") {
            int k = parse_positive(arg, spec);
            if (k == 1) return k1();
            if (k == 2) return k2();
            return clique(k);
        }
        if (head == "star") return star(parse_positive(arg, spec));
        if (head == "book") return book(parse_positive(arg, spec));
        if (head == "custom") {
            try {
                return custom(decode_g6(arg));
            } catch (const Graph6Error& e) {
                throw std::invalid_argument("bad custom pattern: " + std::string(e.what()));
            }
        }
    }
    throw std::invalid_argument("unknown pattern family '" + spec + "'");
}

Graph PatternFamily::pattern_graph() const {
    switch (kind_) {
        case Kind::k1: return Graph(1);
        case Kind::k2: return complete_graph(2);
        case Kind::clique: return complete_graph(param_);
        case Kind::p3: return path_graph(3);
        case Kind::star: return complete_bipartite_graph(1, param_ + 1);
        case Kind::book: return book_graph(param_);
        case Kind::diamond: return diamond_graph();
        case Kind::custom: return *custom_;
        case Kind::any_cycle: break;
    }
    throw UnsupportedFamily("the cycle family has no single pattern graph");
}

std::string PatternFamily::name() const {
    switch (kind_) {
        case Kind::k1: return "k1";
        case Kind::k2: return "k2";
        case Kind::clique: return "k:" + std::to_string(param_);
        case Kind::p3: return "p3";
        case Kind::star: return "star:" + std::to_string(param_);
        case Kind::book: return "book:" + std::to_string(param_);
        case Kind::diamond: return "diamond";
        case Kind::any_cycle: return "anycycle";
        case Kind::custom: return "custom:" + encode_g6(*custom_);
    }
    return "?";
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
    return for_each_embedding(g, g.vertices(), pattern, [](const VertexSet&) { return true; });
}

bool contains_pattern_within(const Graph& g, const VertexSet& within, const PatternFamily& f) {
    using Kind = PatternFamily::Kind;
    switch (f.kind()) {
        case Kind::k1: return !within.empty();
        case Kind::k2: {
            bool found = false;
            within.for_each([&](int v) { found = found || g.neighbors(v).intersects(within); });
            return found;
        }
        case Kind::p3: {
            bool found = false;
            within.for_each([&](int v) {
                found = found || g.neighbors(v).intersection_count(within) >= 2;
            });
            return found;
        }
        case Kind::star: {
            bool found = false;
            within.for_each([&](int v) {
                found = found || g.neighbors(v).intersection_count(within) >= f.parameter() + 1;
            });
            return found;
        }
        case Kind::diamond: {
            // Some edge uv whose ends share at least two neighbours.
            bool found = false;
            within.for_each([&](int u) {
                if (found) return;
                VertexSet nu = g.neighbors(u) & within;
                nu.for_each([&](int v) {
                    if (!found && u < v && nu.intersection_count(g.neighbors(v)) >= 2) found = true;
                });
            });
            return found;
        }
        case Kind::any_cycle: {
            int vertices = within.count();
            int twice_edges = 0;
            within.for_each([&](int v) { twice_edges += g.neighbors(v).intersection_count(within); });
            int parts = static_cast<int>(components_within(g, within).size());
            return twice_edges / 2 + parts != vertices;
        }
        case Kind::clique:
        case Kind::book:
        case Kind::custom:
            return for_each_embedding(g, within, f.pattern_graph(),
                                      [](const VertexSet&) { return true; });
    }
    return false;
}

bool contains_pattern(const Graph& g, const PatternFamily& f) {
    return contains_pattern_within(g, g.vertices(), f);
}

std::vector<VertexSet> enumerate_copies_within(const Graph& g, const VertexSet& within,
                                               const PatternFamily& f) {
    using Kind = PatternFamily::Kind;
    std::vector<VertexSet> out;
    switch (f.kind()) {
        case Kind::any_cycle:
            throw UnsupportedFamily("cycle family copies are unbounded; use the forest check");
        case Kind::k1:
            within.for_each([&](int v) { out.push_back(VertexSet{v}); });
            return out;
        case Kind::k2:
            within.for_each([&](int u) {
                (g.neighbors(u) & within).for_each([&](int v) {
                    if (u < v) out.push_back(VertexSet{u, v});
                });
            });
            return out;
        case Kind::p3: {
            std::unordered_set<VertexSet, VertexSetHash> seen;
            within.for_each([&](int center) {
                std::vector<int> nb = (g.neighbors(center) & within).to_vector();
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j)
                        seen.insert(VertexSet{center, nb[i], nb[j]});
            });
            out.assign(seen.begin(), seen.end());
            break;
        }
        case Kind::diamond: {
            std::unordered_set<VertexSet, VertexSetHash> seen;
            within.for_each([&](int u) {
                VertexSet nu = g.neighbors(u) & within;
                nu.for_each([&](int v) {
                    if (v <= u) return;
                    std::vector<int> common = (nu & g.neighbors(v)).to_vector();
                    for (size_t i = 0; i < common.size(); ++i)
                        for (size_t j = i + 1; j < common.size(); ++j)
                            seen.insert(VertexSet{u, v, common[i], common[j]});
                });
            });
            out.assign(seen.begin(), seen.end());
            break;
        }
        case Kind::star:
        case Kind::clique:
        case Kind::book:
        case Kind::custom: {
            std::unordered_set<VertexSet, VertexSetHash> seen;
            for_each_embedding(g, within, f.pattern_graph(), [&](const VertexSet& support) {
                seen.insert(support);
                return false;
            });
            out.assign(seen.begin(), seen.end());
            break;
        }
    }
    // Equal-size supports: lexicographic order of the sorted member lists.
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        int m = ((a - b) | (b - a)).first();
        return m >= 0 && a.contains(m);
    });
    return out;
}

std::vector<VertexSet> enumerate_copies(const Graph& g, const PatternFamily& f) {
    return enumerate_copies_within(g, g.vertices(), f);
}

}  // namespace isolation
