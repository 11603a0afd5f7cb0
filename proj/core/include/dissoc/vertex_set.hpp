#ifndef DISSOC_VERTEX_SET_HPP
#define DISSOC_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>

namespace dissoc {

/// Set of vertex labels in 0..125, two 64-bit words. Graphs are capped at
/// 126 vertices so a fixed-width set covers every label.
class VertexSet {
public:
    static constexpr int max_bits = 126;

    VertexSet() = default;

    static VertexSet all(int n) {
        VertexSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    void set(int v) { w_[word(v)] |= bit(v); }
    void reset(int v) { w_[word(v)] &= ~bit(v); }
    bool test(int v) const { return (w_[word(v)] & bit(v)) != 0; }

    int count() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }

    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool is_subset_of(const VertexSet& other) const {
        return (w_[0] & ~other.w_[0]) == 0 && (w_[1] & ~other.w_[1]) == 0;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        r.w_[0] = w_[0] | o.w_[0];
        r.w_[1] = w_[1] | o.w_[1];
        return r;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        r.w_[0] = w_[0] & o.w_[0];
        r.w_[1] = w_[1] & o.w_[1];
        return r;
    }

    /// Set difference: bits of *this not in o.
    VertexSet minus(const VertexSet& o) const {
        VertexSet r;
        r.w_[0] = w_[0] & ~o.w_[0];
        r.w_[1] = w_[1] & ~o.w_[1];
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }

    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t x = w_[w];
            while (x != 0) {
                int b = std::countr_zero(x);
                f(64 * w + b);
                x &= x - 1;
            }
        }
    }

    std::uint64_t word0() const { return w_[0]; }
    std::uint64_t word1() const { return w_[1]; }

private:
    static int word(int v) { return v >> 6; }
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, 2> w_{0, 0};
};

} // namespace dissoc

#endif
