#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

namespace lcx {

// A subset of the vertices 0..n-1, one bit per vertex.
// Bit i set <=> vertex i is a member.  Supports at most kMaxVertices
// vertices so that a subset doubles as a dense table index.
class VertexSet {
public:
    static constexpr int kMaxVertices = 31;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        assert(n >= 0 && n <= kMaxVertices);
        return VertexSet(n == 0 ? 0u : ((std::uint32_t{1} << n) - 1u));
    }
    static constexpr VertexSet single(int v) {
        assert(v >= 0 && v < kMaxVertices);
        return VertexSet(std::uint32_t{1} << v);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr void add(int v) { bits_ |= std::uint32_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint32_t{1} << v); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint32_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint32_t{1} << v)); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    // set difference
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    // Iterates members in ascending vertex order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint32_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << s.to_string(); }

// Visits every nonempty subset of {0..n-1} grouped by descending
// cardinality; within one cardinality class masks come in ascending
// numeric order (Gosper's hack).
template <typename F>
void for_each_subset_desc_cardinality(int n, F&& visit) {
    assert(n >= 0 && n <= VertexSet::kMaxVertices);
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (int k = n; k >= 1; --k) {
        std::uint32_t m = (std::uint32_t{1} << k) - 1u;
        while (m < limit) {
            visit(VertexSet(m));
            const std::uint32_t c = m & (0u - m);
            const std::uint32_t r = m + c;
            if (r >= limit) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
}

// Visits every submask of `set`, the empty set included.
template <typename F>
void for_each_submask(VertexSet set, F&& visit) {
    std::uint32_t s = set.bits();
    while (true) {
        visit(VertexSet(s));
        if (s == 0) break;
        s = (s - 1) & set.bits();
    }
}

}  // namespace lcx
