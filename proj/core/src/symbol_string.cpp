#include "dicebits/symbol_string.hpp"

#include <charconv>
#include <stdexcept>

#include "dicebits/errors.hpp"

namespace dicebits {

namespace {

void check_alphabet(unsigned m) {
    if (m < 1 || m > kMaxAlphabet) {
        throw std::invalid_argument("alphabet size out of range [1, 2^16]");
    }
}

} // namespace

SymbolString::SymbolString(unsigned m) : m_(m) { check_alphabet(m); }

SymbolString::SymbolString(unsigned m, std::vector<Symbol> symbols)
    : m_(m), symbols_(std::move(symbols)) {
    check_alphabet(m);
    for (Symbol s : symbols_) {
        if (s >= m_) throw std::invalid_argument("symbol out of range for alphabet");
    }
}

void SymbolString::push_back(Symbol s) {
    if (s >= m_) throw std::invalid_argument("symbol out of range for alphabet");
    symbols_.push_back(s);
}

SymbolString SymbolString::parse(unsigned m, std::string_view text, bool digits) {
    check_alphabet(m);
    SymbolString out(m);
    if (digits) {
        if (m > 10) throw ParseError("digit streams require m <= 10");
        std::size_t token = 0;
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
            ++token;
            if (c < '0' || c > '9') {
                throw ParseError("token " + std::to_string(token) + ": not a digit");
            }
            unsigned v = static_cast<unsigned>(c - '0');
            if (v >= m) {
                throw ParseError("token " + std::to_string(token) + ": symbol " +
                                 std::to_string(v) + " out of range for m=" + std::to_string(m));
            }
            out.symbols_.push_back(static_cast<Symbol>(v));
        }
        return out;
    }
    std::size_t token = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                                   text[i] == '\r')) {
            ++i;
        }
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
               text[j] != '\r') {
            ++j;
        }
        ++token;
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
        if (ec != std::errc() || ptr != text.data() + j) {
            throw ParseError("token " + std::to_string(token) + ": not a decimal symbol");
        }
        if (v >= m) {
            throw ParseError("token " + std::to_string(token) + ": symbol " + std::to_string(v) +
                             " out of range for m=" + std::to_string(m));
        }
        out.symbols_.push_back(static_cast<Symbol>(v));
        i = j;
    }
    return out;
}

std::string SymbolString::str() const {
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(symbols_[i]);
    }
    return s;
}

} // namespace dicebits
