#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace nearopt {

// Fixed-universe dynamic bitset used as the vertex-set type everywhere.
// Binary operations require both operands to share the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe)
        : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) throw std::invalid_argument("negative universe");
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset s(universe);
        for (int b : bits) s.set(b);
        return s;
    }

    static Bitset full(int universe) {
        Bitset s(universe);
        for (auto& w : s.w_) w = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL;
    }
    void set(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
    }
    void reset(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63));
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    // Lowest set bit strictly greater than i, or -1.
    int next_after(int i) const {
        if (i < 0) return first();
        std::size_t k = static_cast<std::size_t>(i) >> 6;
        if (k >= w_.size()) return -1;
        std::uint64_t w = w_[k] & ~((i & 63) == 63 ? ~0ULL : ((2ULL << (i & 63)) - 1));
        if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
        for (++k; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    bool intersects(const Bitset& o) const {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool contains_all(const Bitset& o) const {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (o.w_[k] & ~w_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        match(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        r.subtract(o);
        return r;
    }
    Bitset minus(int v) const {
        Bitset r = *this;
        r.reset(v);
        return r;
    }
    Bitset with(int v) const {
        Bitset r = *this;
        r.set(v);
        return r;
    }
    Bitset complemented() const {
        Bitset r = *this;
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Bitset&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        const_iterator(const Bitset* bs, int pos) : bs_(bs), pos_(pos) {}
        int operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = bs_->next_after(pos_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

    private:
        const Bitset* bs_;
        int pos_;
    };
    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("bit index out of universe");
    }
    void match(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("bitset universe mismatch");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace nearopt
