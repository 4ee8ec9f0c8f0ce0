#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dicebits {

using Symbol = std::uint16_t;

inline constexpr unsigned kMaxAlphabet = 1u << 16;

// Finite sequence over {0,...,m-1}; the alphabet size m travels with it.
class SymbolString {
public:
    explicit SymbolString(unsigned m);
    SymbolString(unsigned m, std::vector<Symbol> symbols);

    // Whitespace-separated decimal tokens. With digits=true the input is
    // instead read one character at a time (requires m <= 10).
    // Reports the 1-based token index on error.
    static SymbolString parse(unsigned m, std::string_view text, bool digits = false);

    unsigned alphabet_size() const { return m_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    void push_back(Symbol s);
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::vector<Symbol>& symbols() { return symbols_; }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    std::string str() const; // space-separated decimal

    friend bool operator==(const SymbolString&, const SymbolString&) = default;

private:
    unsigned m_;
    std::vector<Symbol> symbols_;
};

} // namespace dicebits
