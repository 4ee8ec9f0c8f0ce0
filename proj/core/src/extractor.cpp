#include "dicebits/extractor.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicebits/errors.hpp"

namespace dicebits {

namespace {

// Lexicographic rank of x within S_{n,k}, then the offset of the rank
// inside the power-of-two block decomposition of N = C(n,k), blocks
// taken largest first. A block of size 2^beta contributes beta bits.
//
// The running binomial cur = C(n-i-1, remaining) is maintained with one
// exact multiply/divide per position, so no factorial tables are needed
// and Int only has to hold values up to N * n.
template <typename Int>
BitString elias_rank(const BitString& x) {
    const std::size_t n = x.size();
    if (n < 2) return {};
    std::size_t k = 0;
    for (Bit b : x.bits()) k += b;

    // cur = C(n-1, k); zero when k > n-1.
    Int cur = 1;
    if (k > n - 1) {
        cur = 0;
    } else {
        for (std::size_t i = 1; i <= k; ++i) {
            cur = cur * Int(static_cast<unsigned long long>(n - 1 - k + i)) /
                  Int(static_cast<unsigned long long>(i));
        }
    }

    Int rank = 0;
    std::size_t remaining = k;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i]) {
            rank += cur;
            if (i + 1 < n) {
                // C(a-1, rem-1) = C(a, rem) * rem / a with a = n-1-i
                cur = cur * Int(static_cast<unsigned long long>(remaining)) /
                      Int(static_cast<unsigned long long>(n - 1 - i));
            }
            --remaining;
        } else if (i + 1 < n) {
            // C(a-1, rem) = C(a, rem) * (a-rem) / a
            if (n - 1 - i >= remaining) {
                cur = cur * Int(static_cast<unsigned long long>(n - 1 - i - remaining)) /
                      Int(static_cast<unsigned long long>(n - 1 - i));
            }
        }
    }

    // N = C(n, k)
    Int total = 1;
    {
        std::size_t kk = k < n - k ? k : n - k;
        for (std::size_t i = 1; i <= kk; ++i) {
            total = total * Int(static_cast<unsigned long long>(n - kk + i)) /
                    Int(static_cast<unsigned long long>(i));
        }
    }

    BitString out;
    Int base = 0;
    for (std::size_t beta = n + 1; beta-- > 0;) {
        if (((total >> beta) & 1) == 0) continue;
        Int block_size = Int(1) << beta;
        if (rank < base + block_size) {
            Int offset = rank - base;
            for (std::size_t j = beta; j-- > 0;) {
                out.push_back(static_cast<Bit>(static_cast<unsigned>((offset >> j) & 1)));
            }
            return out;
        }
        base += block_size;
    }
    return out; // unreachable: rank < N always
}

} // namespace

BitString von_neumann(const BitString& x) {
    BitString out;
    const std::size_t pairs = x.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        Bit a = x[2 * i];
        Bit b = x[2 * i + 1];
        if (a != b) out.push_back(a);
    }
    return out;
}

BitString peres(const BitString& x) {
    BitString out;
    // Depth-first over the (xors, equal-pair-seconds) recursion with an
    // explicit stack; the xor child is processed before the seconds child.
    std::vector<BitString> work;
    work.push_back(x);
    while (!work.empty()) {
        BitString cur = std::move(work.back());
        work.pop_back();
        if (cur.size() < 2) continue;
        BitString xors, seconds;
        const std::size_t pairs = cur.size() / 2;
        xors.reserve(pairs);
        for (std::size_t i = 0; i < pairs; ++i) {
            Bit a = cur[2 * i];
            Bit b = cur[2 * i + 1];
            if (a != b) {
                out.push_back(a);
                xors.push_back(1);
            } else {
                xors.push_back(0);
                seconds.push_back(b);
            }
        }
        work.push_back(std::move(seconds));
        work.push_back(std::move(xors));
    }
    return out;
}

BitString elias(const BitString& x) {
    if (x.size() <= 96) return elias_rank<unsigned __int128>(x);
    return elias_rank<boost::multiprecision::cpp_int>(x);
}

BitString extract(const ExtractorSpec& spec, const BitString& x) {
    switch (spec.kind) {
        case ExtractorKind::von_neumann:
            return von_neumann(x);
        case ExtractorKind::peres:
            return peres(x);
        case ExtractorKind::elias:
            break;
    }
    if (spec.elias_block < 1) throw std::invalid_argument("elias block size must be >= 1");
    BitString out;
    const std::size_t block = spec.elias_block;
    for (std::size_t i = 0; i < x.size(); i += block) {
        const std::size_t end = i + block < x.size() ? i + block : x.size();
        BitString chunk;
        chunk.reserve(end - i);
        for (std::size_t j = i; j < end; ++j) chunk.push_back(x[j]);
        out.append(elias(chunk));
    }
    return out;
}

ExtractorSpec ExtractorSpec::parse(std::string_view text) {
    if (text == "vn") return vn();
    if (text == "peres") return peres();
    if (text == "elias") return elias();
    if (text.starts_with("elias:")) {
        std::string_view rest = text.substr(6);
        unsigned block = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), block);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || block < 1) {
            throw ParseError("invalid elias block size '" + std::string(rest) + "'");
        }
        return elias(block);
    }
    throw ParseError("unknown extractor '" + std::string(text) + "' (want vn|peres|elias[:block])");
}

std::string ExtractorSpec::name() const {
    switch (kind) {
        case ExtractorKind::von_neumann:
            return "vn";
        case ExtractorKind::peres:
            return "peres";
        case ExtractorKind::elias:
            return "elias:" + std::to_string(elias_block);
    }
    return "?";
}

} // namespace dicebits
