// J(n,k) fundamentals: vertices as sorted k-subsets of [1..n], adjacency
// (intersection of size k-1), the lexicographic order with exact
// rank/unrank, and for k = 2 the triangular-diagram geometry (row/column,
// domination order, reflection automorphism).
#pragma once

#include "jiso/wide_int.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jiso {

struct GraphParams {
    i64 n = 0;  // ground set {1..n}
    i64 k = 0;  // subset size

    GraphParams() = default;
    GraphParams(i64 n_, i64 k_);

    // C(n,k), exact.
    BigInt vertex_count() const;

    bool operator==(const GraphParams&) const = default;
};

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(i64 n, i64 k);

// A vertex of J(n,k): strictly increasing elements, each in [1, n].
// Construction normalizes (sorts) and rejects duplicates; range against a
// concrete n is checked where a GraphParams is in hand.
class Vertex {
  public:
    Vertex() = default;
    explicit Vertex(std::vector<int> elems);
    Vertex(std::initializer_list<int> elems);

    i64 k() const { return static_cast<i64>(elems_.size()); }
    std::span<const int> elements() const { return elems_; }
    int operator[](std::size_t i) const { return elems_[i]; }

    // Triangular-diagram coordinates, k = 2 only.
    int row() const;
    int column() const;

    std::string to_string() const;  // "{1,3}"

    bool operator==(const Vertex&) const = default;
    std::strong_ordering operator<=>(const Vertex& other) const;

  private:
    std::vector<int> elems_;
};

// Throws std::invalid_argument unless v is a valid vertex of J(n,k).
void validate_vertex(const GraphParams& params, const Vertex& v);
void validate_vertex(const GraphParams& params, std::span<const int> elems);

// Regular degree k(n-k).
i64 degree(const GraphParams& params);

// |u ∩ v| == k-1. Vertices of different k -> std::invalid_argument.
bool adjacent(const Vertex& u, const Vertex& v);
bool adjacent_spans(std::span<const int> u, std::span<const int> v);

std::strong_ordering lex_compare(const Vertex& u, const Vertex& v);

// 0-based lexicographic rank; F_m is exactly ranks 0..m-1.
using LexRank = BigInt;

LexRank rank_vertex(const GraphParams& params, const Vertex& v);
Vertex unrank_vertex(const GraphParams& params, const LexRank& r);

// k = 2 reflection over the diagram line through {1,n} and {2,n-1}:
// {i,j} -> {n+1-j, n+1-i}. An involution and an automorphism of J(n,2).
Vertex reflect(const GraphParams& params, const Vertex& v);

// k = 2 domination: u dominates v iff u.row <= v.row and u.column <= v.column.
bool dominates(const Vertex& u, const Vertex& v);

}  // namespace jiso
