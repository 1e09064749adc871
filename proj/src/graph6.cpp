#include "isolation/graph6.hpp"

namespace isolation {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string encode_g6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph decode_g6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 string", base);

    auto value = [&](std::size_t pos) {
        if (pos >= text.size()) throw Graph6Error("truncated graph6 string", base + pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw Graph6Error("invalid graph6 character (code " + std::to_string(c) + ")", base + pos);
        return static_cast<int>(c) - kBias;
    };

    std::size_t pos = 0;
    int n = value(pos++);
    if (n == 63) {
        if (pos < text.size() && text[pos] == 126)
            throw Graph6Error("graph order exceeds supported limit", base + pos);
        n = (value(pos) << 12) | (value(pos + 1) << 6) | value(pos + 2);
        pos += 3;
        if (n > kMaxVertices)
            throw Graph6Error("graph order " + std::to_string(n) + " exceeds limit " +
                                  std::to_string(kMaxVertices),
                              base + 1);
    }

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() < pos + bytes) throw Graph6Error("truncated graph6 string", base + text.size());
    if (text.size() > pos + bytes)
        throw Graph6Error("trailing characters after graph6 data", base + pos + bytes);

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph6Line> read_g6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.starts_with(kHeader)) line.erase(0, kHeader.size());
        if (line.empty()) continue;
        out.push_back({number, line});
    }
    return out;
}

}  // namespace isolation
