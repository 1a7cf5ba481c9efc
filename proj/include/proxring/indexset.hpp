#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace proxring {

/// Fixed-universe bit set over element indices 0..size-1.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe)
        : size_(universe), blocks_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const {
        return (blocks_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : blocks_) n += static_cast<std::size_t>(__builtin_popcountll(b));
        return n;
    }
    bool empty() const {
        for (auto b : blocks_)
            if (b) return false;
        return true;
    }

    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] |= o.blocks_[k];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= o.blocks_[k];
        return *this;
    }
    IndexSet& subtract(const IndexSet& o) {
        for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= ~o.blocks_[k];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

    bool operator==(const IndexSet& o) const = default;
    bool operator<(const IndexSet& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return blocks_ < o.blocks_;
    }

    bool is_subset_of(const IndexSet& o) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            if (blocks_[k] & ~o.blocks_[k]) return false;
        return true;
    }
    bool intersects(const IndexSet& o) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            if (blocks_[k] & o.blocks_[k]) return true;
        return false;
    }

    /// Ascending member indices.
    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            std::uint64_t b = blocks_[k];
            while (b) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(b));
                out.push_back(static_cast<std::uint32_t>(k * 64 + bit));
                b &= b - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : blocks_) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h ^ size_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace proxring
