// Fixed-width dynamic bitset used for adjacency rows and vertex sets.
// All target graphs are dense and small (n up to ~1000), so flat 64-bit
// words beat any sparse structure.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cliquegraph/errors.hpp"

namespace cliquegraph {

class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {
        if (nbits < 0) throw invalid_argument_error("bitset size must be nonnegative");
    }

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

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

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Clear all bits strictly below position i.
    void reset_below(int i) {
        if (i <= 0) return;
        std::size_t full = static_cast<std::size_t>(i) >> 6;
        for (std::size_t w = 0; w < full && w < words_.size(); ++w) words_[w] = 0;
        if (full < words_.size() && (i & 63)) words_[full] &= ~std::uint64_t{0} << (i & 63);
    }

    // First set bit at position >= from, or -1.
    int find_next(int from) const {
        if (from >= nbits_) return -1;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }
    int find_first() const { return find_next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = find_first(); v >= 0; v = find_next(v + 1)) out.push_back(v);
        return out;
    }

    // Range-for support over set bit positions.
    class const_iterator {
      public:
        const_iterator(const Bitset* bs, int pos) : bs_(bs), pos_(pos) {}
        int operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = bs_->find_next(pos_ + 1);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

      private:
        const Bitset* bs_;
        int pos_;
    };
    const_iterator begin() const { return {this, find_first()}; }
    const_iterator end() const { return {this, -1}; }

  private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cliquegraph
