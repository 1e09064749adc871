#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "isolation/graph.hpp"
#include "isolation/patterns.hpp"

namespace isolation {

/// Worker count from ISOLATION_WORKERS, defaulting to the hardware concurrency.
int default_workers();

/**
 * One representative per isomorphism class of connected graphs of order n,
 * sorted by canonical form. Built by adding a vertex with every non-empty
 * neighbourhood to each connected graph of order n-1 (every connected graph
 * has a non-cut vertex) and deduplicating by canonical form. 1 <= n <= 9.
 */
std::vector<Graph> enumerate_connected(int n, int workers = 1);

/// Ratio bound iota <= floor(numerator * n / denominator), with known exceptions.
struct BoundSpec {
    PatternFamily family = PatternFamily::diamond();
    int numerator = 1;
    int denominator = 5;
    std::vector<std::string> known_exceptions;  ///< canonical forms

    int bound(int n) const { return numerator * n / denominator; }
};

/// Parses "p/q" with q > 0.
std::pair<int, int> parse_ratio(const std::string& text);

enum class BoundStatus { ok, extremal, exception };
std::string to_string(BoundStatus s);

struct BoundRecord {
    std::string g6;
    std::size_t line = 0;  ///< input line, 0 for generated graphs
    int n = 0;
    int iota = 0;
    int bound = 0;
    double raw_bound = 0;  ///< numerator * n / denominator before flooring
    BoundStatus status = BoundStatus::ok;
    bool known = false;    ///< exception matches a known exceptional class
};

struct OrderTally {
    long checked = 0;
    long exceptions = 0;
    long extremal = 0;
};

struct BoundReport {
    std::map<int, OrderTally> per_order;
    std::vector<BoundRecord> records;     ///< every checked graph, in input order
    std::vector<BoundRecord> exceptions;
    std::vector<BoundRecord> extremal;    ///< capped at extremal_cap
    long skipped_disconnected = 0;
    std::vector<std::pair<std::size_t, std::string>> malformed;  ///< (line, message)
    std::chrono::nanoseconds elapsed{0};

    long unknown_exceptions() const;
    /// Canonical forms of the exceptional classes, deduplicated and sorted.
    std::vector<std::string> exception_classes() const;
};

struct SourceGraph {
    Graph graph;
    std::size_t line = 0;
};

/**
 * Solves each connected input exactly and compares with the bound. Records
 * with iota above the bound are exceptions; iota equal to a positive bound is
 * extremal. Each exception is re-solved from its graph6 string before it is
 * reported.
 */
BoundReport verify_bound(const std::vector<SourceGraph>& source, const BoundSpec& spec,
                         int workers = 1, std::size_t extremal_cap = 1000);

/// Parses graph6 lines into a source, collecting malformed lines instead of throwing.
std::vector<SourceGraph> parse_source(std::istream& in,
                                      std::vector<std::pair<std::size_t, std::string>>& malformed);

std::vector<SourceGraph> enumerated_source(int min_n, int max_n, int workers = 1);

struct AttachmentViolation {
    std::string g6;
    int vertex = 0;
    Attachment kind = Attachment::pendant;
    int before = 0;
    int after = 0;
};

struct AttachmentReport {
    long samples = 0;
    std::array<long, 3> per_kind{};  ///< samples per Attachment kind
    std::vector<AttachmentViolation> violations;
    bool passed() const { return violations.empty(); }
};

/// Random connected graphs with 1..n_max vertices and a random vertex; sample i
/// uses attachment kind i mod 3. Checks that the diamond isolation number is unchanged.
AttachmentReport verify_attachment_invariance(long samples, int n_max, std::uint64_t seed);

/// Connected graphs with n divisible by 5 whose diamond isolation number is n/5.
std::vector<Graph> find_extremal(const std::vector<Graph>& population, const PatternFamily& f);
std::vector<Graph> find_extremal(int n, const PatternFamily& f);

/// Random spanning tree plus independent extra edges with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/**
 * Random connected graph assembled from diamond, K4, Y and short-path
 * gadgets joined by a few random edges; dense in near-tight cases for the
 * n/5 bound.
 */
Graph random_gadget_graph(int target_n, std::mt19937_64& rng);

/// Built-in exception lists for the classical ratio bounds (canonical forms).
std::vector<std::string> known_exceptions_for(const PatternFamily& f, int numerator, int denominator);

}  // namespace isolation
