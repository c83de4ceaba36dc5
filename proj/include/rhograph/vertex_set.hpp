#ifndef RHOGRAPH_VERTEX_SET_HPP
#define RHOGRAPH_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rhograph {

/// Subset of the vertex indices 0..n-1 with set semantics, stored as a
/// dynamically sized bitset (one word covers graphs up to 64 vertices;
/// bigger universes just use more words).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(int universe, std::initializer_list<int> members)
        : VertexSet(universe) {
        for (int v : members) set(v);
    }

    int universe() const { return universe_; }

    bool test(int v) const {
        assert(v >= 0 && v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than `v`, or -1.
    int next(int v) const {
        for (int i = (v + 1) >> 6; i < static_cast<int>(words_.size()); ++i) {
            std::uint64_t w = words_[i];
            if (i == (v + 1) >> 6) {
                int shift = (v + 1) & 63;
                w &= ~std::uint64_t{0} << shift;
            }
            if (w) return i * 64 + std::countr_zero(w);
        }
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement relative to the universe.
    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    static VertexSet full(int universe) {
        return VertexSet(universe).complement();
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    /// Range-for support: for (int v : s) { ... }
    class iterator {
    public:
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = set_->next(v_); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* set_;
        int v_;
    };
    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    void trim() {
        if (universe_ & 63)
            words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rhograph

#endif
