#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hgq {

/// Fixed-width bitset over positions 1..n, matching the vertex labels used
/// throughout (vertices are 1-based everywhere, including on disk).
/// Position 0 is reserved and always clear.
class Bitvec {
public:
    Bitvec() : n_(0) {}
    explicit Bitvec(int n) : n_(n), blocks_((n + 64) / 64, 0) {
        if (n < 0) throw std::invalid_argument("Bitvec: negative size");
    }

    static Bitvec from_indices(int n, const std::vector<int>& indices) {
        Bitvec b(n);
        for (int i : indices) b.set(i);
        return b;
    }

    int size() const { return n_; }

    bool test(int pos) const {
        check(pos);
        return (blocks_[pos >> 6] >> (pos & 63)) & 1u;
    }

    void set(int pos, bool value = true) {
        check(pos);
        const uint64_t mask = uint64_t(1) << (pos & 63);
        if (value)
            blocks_[pos >> 6] |= mask;
        else
            blocks_[pos >> 6] &= ~mask;
    }

    int count() const {
        int c = 0;
        for (uint64_t b : blocks_) c += std::popcount(b);
        return c;
    }

    bool any() const {
        for (uint64_t b : blocks_)
            if (b) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool disjoint_with(const Bitvec& other) const {
        check_same(other);
        for (size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return false;
        return true;
    }

    /// other is a subset of *this.
    bool contains(const Bitvec& other) const {
        check_same(other);
        for (size_t i = 0; i < blocks_.size(); ++i)
            if (other.blocks_[i] & ~blocks_[i]) return false;
        return true;
    }

    Bitvec operator|(const Bitvec& other) const {
        check_same(other);
        Bitvec out(n_);
        for (size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] | other.blocks_[i];
        return out;
    }

    Bitvec operator&(const Bitvec& other) const {
        check_same(other);
        Bitvec out(n_);
        for (size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] & other.blocks_[i];
        return out;
    }

    /// Complement within positions 1..n.
    Bitvec complement() const {
        Bitvec out(n_);
        for (size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = ~blocks_[i];
        out.blocks_[0] &= ~uint64_t(1);  // position 0 stays clear
        const int top = n_ + 1;
        if (top & 63) out.blocks_.back() &= (uint64_t(1) << (top & 63)) - 1;
        return out;
    }

    /// Ascending list of set positions (1-based).
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < blocks_.size(); ++i) {
            uint64_t b = blocks_[i];
            while (b) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(b)));
                b &= b - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Bitvec& a, const Bitvec& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend std::strong_ordering operator<=>(const Bitvec& a, const Bitvec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        // Reverse block order so the ordering matches lexicographic order of
        // ascending index lists closely enough for deterministic map keys.
        return a.blocks_ <=> b.blocks_;
    }

private:
    void check(int pos) const {
        if (pos < 1 || pos > n_) throw std::out_of_range("Bitvec: position out of range");
    }
    void check_same(const Bitvec& other) const {
        if (n_ != other.n_) throw std::invalid_argument("Bitvec: size mismatch");
    }

    int n_;
    std::vector<uint64_t> blocks_;
};

}  // namespace hgq
