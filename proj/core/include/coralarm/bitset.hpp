#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace coralarm {

/// Fixed-capacity bitset sized at runtime. Used for consistent ideals and
/// hyperplane crossing sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    void toggle(int i) { w_[static_cast<size_t>(i) >> 6] ^= 1ull << (i & 63); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset& o) const = default;
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace coralarm
