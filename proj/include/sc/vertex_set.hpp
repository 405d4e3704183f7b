#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sc {

/// Fixed-universe vertex set with bitset semantics over ids 0..n-1.
/// Cardinality is kept up to date on every mutation.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet singleton(int universe, int v) {
        VertexSet s(universe);
        s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t(1) << (v & 63);
        if (!(w & bit)) { w |= bit; ++count_; }
    }
    void erase(int v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t(1) << (v & 63);
        if (w & bit) { w &= ~bit; --count_; }
    }

    /// Members in ascending id order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }
    int first() const {
        for (int v = 0; v < n_; ++v)
            if (contains(v)) return v;
        throw std::logic_error("VertexSet::first on empty set");
    }

    VertexSet complement() const {
        VertexSet r(n_);
        for (int v = 0; v < n_; ++v)
            if (!contains(v)) r.insert(v);
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        VertexSet r(a.n_);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & b.words_[i];
        r.recount();
        return r;
    }
    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
        VertexSet r(a.n_);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] | b.words_[i];
        r.recount();
        return r;
    }
    /// Set difference a \ b.
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
        VertexSet r(a.n_);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & ~b.words_[i];
        r.recount();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(n_);
        for (std::uint64_t w : words_) h = h * 1099511628211ull ^ w;
        return h;
    }

private:
    void recount() {
        count_ = 0;
        for (std::uint64_t w : words_) count_ += __builtin_popcountll(w);
    }

    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace sc
