// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mereoscan::core::detail {

// Fixed-width bitset sized at runtime.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1U;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits operator^(const Bits& o) const {
        Bits r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] ^ o.words_[i];
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mereoscan::core::detail
