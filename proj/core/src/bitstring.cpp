#include "dicebits/bitstring.hpp"

#include <stdexcept>

#include "dicebits/errors.hpp"

namespace dicebits {

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
    for (Bit b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString: element is not 0 or 1");
    }
}

BitString BitString::from_string(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c == '0') {
            out.bits_.push_back(0);
        } else if (c == '1') {
            out.bits_.push_back(1);
        } else {
            throw ParseError(std::string("invalid bit character '") + c + "'");
        }
    }
    return out;
}

void BitString::push_back(Bit bit) {
    if (bit > 1) throw std::invalid_argument("BitString: element is not 0 or 1");
    bits_.push_back(bit);
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BitString::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (Bit b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

void BitString::increment() {
    for (std::size_t i = bits_.size(); i-- > 0;) {
        if (bits_[i] == 0) {
            bits_[i] = 1;
            return;
        }
        bits_[i] = 0;
    }
}

std::size_t BitStringHash::operator()(const BitString& s) const noexcept {
    // FNV-1a over the bit bytes, length mixed in up front so that "0" and
    // "00" of equal prefix content hash apart cheaply.
    std::uint64_t h = 14695981039346656037ull ^ (s.size() * 0x9e3779b97f4a7c15ull);
    for (Bit b : s.bits()) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<std::uint8_t> pack_bits(const BitString& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return bytes;
}

BitString unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8) {
        throw std::invalid_argument("unpack_bits: bit count exceeds byte payload");
    }
    BitString out;
    out.reserve(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) {
        out.push_back((bytes[i / 8] >> (7 - i % 8)) & 1);
    }
    return out;
}

} // namespace dicebits
