#ifndef SPS_VERTEX_SET_HPP
#define SPS_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sps {

/// Set of vertex identifiers backed by a word-packed bitset.
/// intersection_size is the hot operation and never allocates.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t capacity)
        : nbits_(capacity), words_((capacity + 63) / 64, 0) {}

    VertexSet(std::size_t capacity, std::initializer_list<unsigned> verts)
        : VertexSet(capacity) {
        for (unsigned v : verts) insert(v);
    }

    static VertexSet from_vector(std::size_t capacity, const std::vector<unsigned>& verts) {
        VertexSet s(capacity);
        for (unsigned v : verts) s.insert(v);
        return s;
    }

    std::size_t capacity() const { return nbits_; }

    bool contains(unsigned v) const {
        if (v >= nbits_) return false;
        return (words_[v / 64] >> (v % 64)) & 1u;
    }

    void insert(unsigned v) {
        if (v >= nbits_) throw std::out_of_range("VertexSet::insert: vertex beyond capacity");
        words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    void erase(unsigned v) {
        if (v >= nbits_) return;
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t intersection_size(const VertexSet& other) const {
        const std::size_t n = words_.size() < other.words_.size() ? words_.size() : other.words_.size();
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            count += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return count;
    }

    bool intersects(const VertexSet& other) const {
        const std::size_t n = words_.size() < other.words_.size() ? words_.size() : other.words_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet union_with(const VertexSet& other) const {
        const VertexSet& big = nbits_ >= other.nbits_ ? *this : other;
        const VertexSet& small = nbits_ >= other.nbits_ ? other : *this;
        VertexSet out = big;
        for (std::size_t i = 0; i < small.words_.size(); ++i)
            out.words_[i] |= small.words_[i];
        return out;
    }

    /// Copy into a set with a (possibly larger) capacity, shifting every
    /// vertex by `offset`.
    VertexSet shifted(std::size_t new_capacity, unsigned offset) const {
        VertexSet out(new_capacity);
        for (unsigned v : to_sorted_vector()) out.insert(v + offset);
        return out;
    }

    std::vector<unsigned> to_sorted_vector() const {
        std::vector<unsigned> out;
        out.reserve(size());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                out.push_back(static_cast<unsigned>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool same_elements(const VertexSet& other) const {
        const std::size_t n = words_.size() > other.words_.size() ? words_.size() : other.words_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t a = i < words_.size() ? words_[i] : 0;
            const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
            if (a != b) return false;
        }
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.same_elements(b);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sps

#endif
