#pragma once

// Dynamic bitset over 64-bit words.  Sized at construction; operands of the
// binary operations must have equal size.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace skelrec {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    // Word-lexicographic; a deterministic total order usable as a map key.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        assert(a.n_ == b.n_);
        return a.w_ < b.w_;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace skelrec
