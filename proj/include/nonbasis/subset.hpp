#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nonbasis {

/// Fixed-width bitset over the element indices [0, n) of a group.
class Subset {
public:
    Subset() = default;
    explicit Subset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Subset full(int n) {
        Subset s(n);
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static Subset single(int n, int i) {
        Subset s(n);
        s.set(i);
        return s;
    }
    static Subset of(int n, const std::vector<int>& indices) {
        Subset s(n);
        for (int i : indices) s.set(i);
        return s;
    }

    int universe() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int size() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return size() == n_; }

    bool contains(const Subset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }

    Subset& operator|=(const Subset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Subset& operator&=(const Subset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// Set difference: removes the members of o.
    Subset& operator-=(const Subset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

    friend bool operator==(const Subset& a, const Subset& b) = default;
    friend bool operator<(const Subset& a, const Subset& b) { return a.w_ < b.w_; }

    /// Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    int first() const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi)
            if (w_[wi]) return int(wi * 64 + std::countr_zero(w_[wi]));
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace nonbasis
