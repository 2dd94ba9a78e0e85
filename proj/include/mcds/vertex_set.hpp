#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace mcds {

// Word-packed subset of {0, ..., n-1}. All set algebra is per-word; sets over
// the same universe size may be combined freely.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }
    static VertexSet singleton(int universe, int v) {
        VertexSet s(universe);
        s.insert(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void insert(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }
    void erase(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // Lowest member, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    // Lowest member > v, or -1.
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        std::size_t i = v >> 6;
        std::uint64_t w = words_[i] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        for (++i; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (int v = first(); v >= 0; v = next(v)) fn(v);
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    // True if *this precedes o when both are read as ascending id sequences
    // compared lexicographically (the lowest differing id decides).
    bool lex_less(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return words_[i] & low;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// (size, lexicographic) order used for all canonical output.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mcds
