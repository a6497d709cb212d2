#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace bk {

// Hard cap on vertex indices; campaigns run far below this, the cap just
// keeps every set a fixed-size value type.
inline constexpr int kMaxVertices = 512;

class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    VertexSet() = default;

    // Set {0, 1, ..., n-1}.
    static VertexSet full(int n)
    {
        VertexSet s;
        for (int wi = 0; wi < kWords; ++wi) {
            const int lo = wi * 64;
            if (n >= lo + 64)
                s.w_[wi] = ~0ull;
            else if (n > lo)
                s.w_[wi] = (1ull << (n - lo)) - 1;
        }
        return s;
    }

    static VertexSet single(int v)
    {
        VertexSet s;
        s.set(v);
        return s;
    }

    // Low 64 vertices from a plain mask; handy for augmentation loops.
    static VertexSet from_mask(std::uint64_t mask)
    {
        VertexSet s;
        s.w_[0] = mask;
        return s;
    }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1ull; }
    void set(int v) { w_[v >> 6] |= 1ull << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }

    bool empty() const
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }

    int count() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }

    // Smallest element, -1 when empty.
    int lowest() const
    {
        for (int wi = 0; wi < kWords; ++wi)
            if (w_[wi])
                return wi * 64 + std::countr_zero(w_[wi]);
        return -1;
    }

    // Smallest element > v, -1 when none.
    int next(int v) const
    {
        int wi = (v + 1) >> 6;
        if (wi >= kWords)
            return -1;
        std::uint64_t w = w_[wi] & (~0ull << ((v + 1) & 63));
        while (true) {
            if (w)
                return wi * 64 + std::countr_zero(w);
            if (++wi == kWords)
                return -1;
            w = w_[wi];
        }
    }

    bool intersects(const VertexSet& o) const
    {
        for (int wi = 0; wi < kWords; ++wi)
            if (w_[wi] & o.w_[wi])
                return true;
        return false;
    }

    // o subset of *this
    bool contains_all(const VertexSet& o) const
    {
        for (int wi = 0; wi < kWords; ++wi)
            if (o.w_[wi] & ~w_[wi])
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int wi = 0; wi < kWords; ++wi)
            w_[wi] &= o.w_[wi];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (int wi = 0; wi < kWords; ++wi)
            w_[wi] |= o.w_[wi];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o)
    {
        for (int wi = 0; wi < kWords; ++wi)
            w_[wi] ^= o.w_[wi];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    // *this \ o
    VertexSet minus(const VertexSet& o) const
    {
        VertexSet r;
        for (int wi = 0; wi < kWords; ++wi)
            r.w_[wi] = w_[wi] & ~o.w_[wi];
        return r;
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const
    {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int x) { v.push_back(x); });
        return v;
    }

    std::size_t hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

    // Ascending order.
    template <typename F>
    void for_each(F f) const
    {
        for (int wi = 0; wi < kWords; ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, kWords> w_{};
};

} // namespace bk
