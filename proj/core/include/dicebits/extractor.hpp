#pragma once

#include <cstdint>
#include <string>

#include "dicebits/bitstring.hpp"

namespace dicebits {

enum class ExtractorKind { von_neumann, peres, elias };

// Selects a binary extracting procedure. For Elias the input is cut into
// blocks of elias_block bits, each ranked independently.
struct ExtractorSpec {
    ExtractorKind kind = ExtractorKind::von_neumann;
    unsigned elias_block = 16;

    static ExtractorSpec vn() { return {ExtractorKind::von_neumann, 0}; }
    static ExtractorSpec peres() { return {ExtractorKind::peres, 0}; }
    static ExtractorSpec elias(unsigned block = 16) { return {ExtractorKind::elias, block}; }

    // "vn" | "peres" | "elias" | "elias:<block>"
    static ExtractorSpec parse(std::string_view text);
    std::string name() const;
};

// 00 -> (), 01 -> 0, 10 -> 1, 11 -> (); pairs taken left to right, a
// trailing unpaired bit is discarded.
BitString von_neumann(const BitString& x);

// Iterated von Neumann: the first-level output is followed by the
// extraction of the pair XORs and of the second halves of the equal
// pairs. Implemented with an explicit work stack; inputs of 2^20 bits
// and beyond are fine.
BitString peres(const BitString& x);

// Ranks x inside its constant-weight class S_{n,k}, splits N = C(n,k)
// into powers of two (largest first) and emits the offset of the rank
// within its block in binary. Block sizes above 64 switch to
// arbitrary-precision rank arithmetic.
BitString elias(const BitString& x);

// Dispatch over the three procedures. Elias input is processed in
// consecutive blocks of spec.elias_block bits; a final short block is
// ranked as-is.
BitString extract(const ExtractorSpec& spec, const BitString& x);

} // namespace dicebits
