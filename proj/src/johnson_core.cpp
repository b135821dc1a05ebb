#include "jiso/johnson_core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jiso {

GraphParams::GraphParams(i64 n_, i64 k_) : n(n_), k(k_) {
    if (k < 1 || k > n) throw std::invalid_argument("GraphParams: need 1 <= k <= n");
}

BigInt binomial(i64 n, i64 k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

BigInt GraphParams::vertex_count() const { return binomial(n, k); }

Vertex::Vertex(std::vector<int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw std::invalid_argument("Vertex: elements must be >= 1");
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw std::invalid_argument("Vertex: duplicate element");
    }
}

Vertex::Vertex(std::initializer_list<int> elems) : Vertex(std::vector<int>(elems)) {}

int Vertex::row() const {
    if (k() != 2) throw std::domain_error("row(): diagram coordinates require k = 2");
    return elems_[0];
}

int Vertex::column() const {
    if (k() != 2) throw std::domain_error("column(): diagram coordinates require k = 2");
    return elems_[1];
}

std::string Vertex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

std::strong_ordering Vertex::operator<=>(const Vertex& other) const {
    return lex_compare(*this, other);
}

void validate_vertex(const GraphParams& params, std::span<const int> elems) {
    if (static_cast<i64>(elems.size()) != params.k)
        throw std::invalid_argument("vertex has wrong subset size for this graph");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > params.n)
            throw std::invalid_argument("vertex element out of [1, n]");
        if (i > 0 && elems[i] <= elems[i - 1])
            throw std::invalid_argument("vertex elements must strictly increase");
    }
}

void validate_vertex(const GraphParams& params, const Vertex& v) {
    validate_vertex(params, v.elements());
}

i64 degree(const GraphParams& params) { return params.k * (params.n - params.k); }

bool adjacent_spans(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw std::invalid_argument("adjacent: mismatched subset sizes");
    // sorted merge walk; adjacency means exactly one element differs
    std::size_t common = 0, a = 0, b = 0;
    while (a < u.size() && b < v.size()) {
        if (u[a] == v[b]) {
            ++common, ++a, ++b;
        } else if (u[a] < v[b]) {
            ++a;
        } else {
            ++b;
        }
    }
    return common + 1 == u.size();
}

bool adjacent(const Vertex& u, const Vertex& v) {
    return adjacent_spans(u.elements(), v.elements());
}

std::strong_ordering lex_compare(const Vertex& u, const Vertex& v) {
    auto ue = u.elements(), ve = v.elements();
    auto mismatch = std::mismatch(ue.begin(), ue.end(), ve.begin(), ve.end());
    if (mismatch.first == ue.end() && mismatch.second == ve.end())
        return std::strong_ordering::equal;
    if (mismatch.first == ue.end()) return std::strong_ordering::less;
    if (mismatch.second == ve.end()) return std::strong_ordering::greater;
    return *mismatch.first <=> *mismatch.second;
}

LexRank rank_vertex(const GraphParams& params, const Vertex& v) {
    validate_vertex(params, v);
    // number of vertices strictly below v: sum over positions of the
    // blocks skipped before v's element was reached
    BigInt r = 0;
    i64 prev = 0;
    for (i64 t = 0; t < params.k; ++t) {
        for (i64 c = prev + 1; c < v[static_cast<std::size_t>(t)]; ++c)
            r += binomial(params.n - c, params.k - t - 1);
        prev = v[static_cast<std::size_t>(t)];
    }
    return r;
}

Vertex unrank_vertex(const GraphParams& params, const LexRank& rank) {
    if (rank < 0 || rank >= params.vertex_count())
        throw std::out_of_range("unrank: rank outside [0, C(n,k))");
    BigInt r = rank;
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(params.k));
    i64 prev = 0;
    for (i64 t = 0; t < params.k; ++t) {
        i64 c = prev + 1;
        for (;; ++c) {
            BigInt block = binomial(params.n - c, params.k - t - 1);
            if (r < block) break;
            r -= block;
        }
        elems.push_back(static_cast<int>(c));
        prev = c;
    }
    return Vertex(std::move(elems));
}

Vertex reflect(const GraphParams& params, const Vertex& v) {
    if (params.k != 2) throw std::domain_error("reflect: defined for k = 2 only");
    validate_vertex(params, v);
    int i = v[0], j = v[1];
    int n = static_cast<int>(params.n);
    return Vertex{n + 1 - j, n + 1 - i};
}

bool dominates(const Vertex& u, const Vertex& v) {
    if (u.k() != 2 || v.k() != 2) throw std::domain_error("dominates: defined for k = 2 only");
    return u.row() <= v.row() && u.column() <= v.column();
}

}  // namespace jiso
