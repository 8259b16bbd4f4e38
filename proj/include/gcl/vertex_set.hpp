// gcl/vertex_set.hpp -- word-parallel vertex sets over a fixed ground set 0..n-1.
#pragma once

#include <cstdint>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcl {

/// Dense bitset over vertices 0..n-1. The ground-set size n is fixed at
/// construction so set algebra between mismatched universes is rejected.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int wi = 0; wi < (int)words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f((wi << 6) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        match(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        match(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference: keep members not in o.
    VertexSet& operator-=(const VertexSet& o) {
        match(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    int intersection_count(const VertexSet& o) const {
        match(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool subset_of(const VertexSet& o) const {
        match(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Lexicographic order on the sorted member lists ({0,2} < {0,3} < {1,2}).
    bool lex_less(const VertexSet& o) const {
        match(o);
        int a = next(0), b = o.next(0);
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = next(a + 1);
            b = o.next(b + 1);
        }
        return a == -1 && b != -1;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }
    void match(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace gcl
