#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dicebits {

using Bit = std::uint8_t;

// Finite sequence over {0,1}. The empty string stands in for the
// "no output" value that extracting procedures emit on discarded input.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::vector<Bit> bits);

    // Parses a string of '0'/'1' characters ("" gives the empty string).
    static BitString from_string(std::string_view text);

    void push_back(Bit bit);
    void append(const BitString& other);
    void reserve(std::size_t n) { bits_.reserve(n); }
    void clear() { bits_.clear(); }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }

    std::span<const Bit> bits() const { return bits_; }
    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

    std::string str() const;

    // Interprets the bits as a big-endian binary numeral and adds one,
    // keeping the length fixed. Wraps around at all-ones.
    void increment();

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<Bit> bits_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& s) const noexcept;
};

// Packs bits into bytes, most significant bit first; the final partial
// byte is zero-padded.
std::vector<std::uint8_t> pack_bits(const BitString& bits);

// Inverse of pack_bits given the true bit count.
BitString unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count);

} // namespace dicebits
