#pragma once

// Word-parallel helpers over spans of 64-bit words. Bit i of a set lives in
// word i / 64 at position i % 64.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace phcurv::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> s, std::size_t i) { return (s[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> s, std::size_t i) { s[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> s, std::size_t i) { s[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t count(std::span<const Word> s)
{
    std::size_t c = 0;
    for (Word w : s)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b)
{
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        c += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    return c;
}

inline bool any(std::span<const Word> s)
{
    for (Word w : s)
        if (w != 0)
            return true;
    return false;
}

inline void assign_and(std::span<Word> out, std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a[k] & b[k];
}

inline void assign_and_not(std::span<Word> out, std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a[k] & ~b[k];
}

/// Calls fn(i) for every set bit in increasing order.
template <typename Fn>
void for_each(std::span<const Word> s, Fn&& fn)
{
    for (std::size_t k = 0; k < s.size(); ++k) {
        Word w = s[k];
        while (w != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(w));
            fn(k * kWordBits + bit);
            w &= w - 1;
        }
    }
}

} // namespace phcurv::bits
