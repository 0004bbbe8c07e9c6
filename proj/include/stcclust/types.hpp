#ifndef STCCLUST_TYPES_HPP
#define STCCLUST_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace stcc {

using Node = std::int32_t;

/// Unordered node pair, stored with u < v.
struct Pair {
    Node u = 0;
    Node v = 0;

    Pair() = default;
    Pair(Node a, Node b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Packed key for hashing pairs; requires nonnegative node ids.
using PairKey = std::uint64_t;

inline PairKey pair_key(Node a, Node b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
}

inline PairKey pair_key(const Pair& p) { return pair_key(p.u, p.v); }

inline Pair pair_from_key(PairKey k) {
    return Pair(static_cast<Node>(k >> 32), static_cast<Node>(k & 0xffffffffu));
}

enum class ObjectiveKind { cluster_editing, cluster_deletion };

enum class StcFlavor { stc, stc_plus };

inline const char* to_string(ObjectiveKind k) {
    return k == ObjectiveKind::cluster_editing ? "ce" : "cd";
}

inline const char* to_string(StcFlavor f) {
    return f == StcFlavor::stc ? "STC" : "STC+";
}

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input describes a graph with no nodes at all.
struct EmptyGraphError : std::runtime_error {
    explicit EmptyGraphError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A pivot instance violates the budget preconditions of deterministic pivoting.
struct InvalidInstanceError : std::runtime_error {
    explicit InvalidInstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied fractional solution fails its feasibility constraints.
struct InfeasibleSolutionError : std::runtime_error {
    explicit InfeasibleSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// A per-graph time limit ran out mid-computation.
struct TimeoutError : std::runtime_error {
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stcc

#endif
