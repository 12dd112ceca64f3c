#ifndef HAMTOUGH_VERTEX_SET_HPP
#define HAMTOUGH_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace hamtough {

/// Maximum number of vertices a Graph may hold.
inline constexpr int kMaxVertices = 512;

/// Fixed-width bit set over vertex ids [0, kMaxVertices).
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    /// The set {0, ..., n-1}.
    static VertexSet prefix(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Lowest member, or -1 when empty.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Lowest member strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int w = v >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w == kWords) return -1;
            cur = words_[w];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                f(w * 64 + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// |a & b| without materializing the intersection.
    friend int intersection_count(const VertexSet& a, const VertexSet& b) {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(a.words_[w] & b.words_[w]);
        return c;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace hamtough

#endif  // HAMTOUGH_VERTEX_SET_HPP
