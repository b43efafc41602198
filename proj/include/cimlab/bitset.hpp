#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cimlab {

/// Fixed-size bitset used for element sets inside an indexed group.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const DynBitset& o) const {
        return bits_ == o.bits_ && words_ == o.words_;
    }

    struct Hash {
        std::size_t operator()(const DynBitset& b) const noexcept {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : b.words_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cimlab
