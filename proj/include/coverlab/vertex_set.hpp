// Fixed-width vertex bitset used for adjacency rows and vertex subsets.

#ifndef COVERLAB_VERTEX_SET_HPP
#define COVERLAB_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace coverlab {

using Vertex = std::size_t;

/// Largest graph order representable by a VertexSet row.
inline constexpr std::size_t kMaxVertices = 256;

class VertexSet {
  public:
    static constexpr std::size_t kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, 1, ..., n-1}
    static VertexSet prefix(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            if (n >= 64) {
                s.words_[w] = ~std::uint64_t{0};
                n -= 64;
            } else {
                s.words_[w] = (std::uint64_t{1} << n) - 1;
                n = 0;
            }
        }
        return s;
    }

    template <class Range>
    static VertexSet from(const Range& r) {
        VertexSet s;
        for (auto v : r) s.insert(static_cast<Vertex>(v));
        return s;
    }

    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
    bool contains(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Least element, or kMaxVertices when empty.
    Vertex first() const { return next(0); }

    /// Least element >= from, or kMaxVertices when none.
    Vertex next(Vertex from) const {
        if (from >= kMaxVertices) return kMaxVertices;
        std::size_t w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == kWords) return kMaxVertices;
            word = words_[w];
        }
    }

    /// Greatest element, or kMaxVertices when empty.
    Vertex last() const {
        for (std::size_t w = kWords; w-- > 0;)
            if (words_[w]) return (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return kMaxVertices;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    std::size_t intersection_size(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < kWords; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders sets by their sorted element sequences (lexicographic).
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        Vertex x = a.first(), y = b.first();
        while (x != kMaxVertices && y != kMaxVertices) {
            if (x != y) return x < y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        return x == kMaxVertices && y != kMaxVertices;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    class iterator {
      public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_ + 1);
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

      private:
        const VertexSet* set_ = nullptr;
        Vertex v_ = kMaxVertices;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, kMaxVertices}; }

  private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
    std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace coverlab

#endif  // COVERLAB_VERTEX_SET_HPP
