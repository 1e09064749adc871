#include "isolation/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "isolation/graph6.hpp"

namespace isolation {

namespace {

// Ordered partition stored as cell index per vertex; cells are numbered 0..count-1
// in their canonical order.
struct Partition {
    std::vector<int> cell_of;
    int count = 0;
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
        rows_.reserve(n_);
        for (int v = 0; v < n_; ++v) rows_.push_back(g.neighbors(v));
    }

    std::vector<int> run() {
        if (n_ == 0) return {};
        Partition p{std::vector<int>(n_, 0), 1};
        refine(p);
        search(p);
        return best_perm_;
    }

private:
    bool twins(int u, int w) const {
        VertexSet a = rows_[u];
        VertexSet b = rows_[w];
        a.erase(w);
        b.erase(u);
        return a == b;
    }

    // Splits cells by neighbour counts into every other cell until stable.
    // Split order is decided by the count vectors only, so the result is
    // equivariant under relabeling.
    void refine(Partition& p) const {
        std::vector<int> order(n_);
        std::vector<std::vector<int>> key(n_);
        while (true) {
            for (int v = 0; v < n_; ++v) {
                auto& k = key[v];
                k.assign(p.count + 1, 0);
                k[0] = p.cell_of[v];
                rows_[v].for_each([&](int w) { ++k[1 + p.cell_of[w]]; });
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return key[a] < key[b]; });
            int cells = 0;
            std::vector<int> next(n_);
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && key[order[i]] != key[order[i - 1]]) ++cells;
                next[order[i]] = cells;
            }
            ++cells;
            bool changed = cells != p.count;
            p.cell_of = std::move(next);
            p.count = cells;
            if (!changed) return;
        }
    }

    std::vector<uint64_t> code_of(const std::vector<int>& label) const {
        std::vector<int> at(n_);
        for (int v = 0; v < n_; ++v) at[label[v]] = v;
        std::vector<uint64_t> code((static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64, 0);
        size_t k = 0;
        for (int j = 1; j < n_; ++j) {
            const VertexSet& row = rows_[at[j]];
            for (int i = 0; i < j; ++i, ++k)
                if (row.contains(at[i])) code[k >> 6] |= uint64_t{1} << (63 - (k & 63));
        }
        return code;
    }

    void search(const Partition& p) {
        if (p.count == n_) {
            auto code = code_of(p.cell_of);
            if (best_perm_.empty() || code > best_code_) {
                best_code_ = std::move(code);
                best_perm_ = p.cell_of;
            }
            return;
        }
        // First non-singleton cell; smallest such cell would also be invariant.
        std::vector<int> size(p.count, 0);
        for (int c : p.cell_of) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (p.cell_of[v] != target) continue;
            bool redundant = false;
            for (int w : tried)
                if (twins(v, w)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);

            Partition child = p;
            for (int u = 0; u < n_; ++u)
                if (child.cell_of[u] > target || (child.cell_of[u] == target && u != v))
                    ++child.cell_of[u];
            ++child.count;
            refine(child);
            search(child);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<VertexSet> rows_;
    std::vector<uint64_t> best_code_;
    std::vector<int> best_perm_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

std::string canonical_form(const Graph& g) {
    return encode_g6(permute(g, canonical_labeling(g)));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace isolation
