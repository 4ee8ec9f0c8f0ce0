#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicebits/symbol_string.hpp"

namespace dicebits {

// Value of one component map at one symbol: 0, 1, or "no letter".
enum class ComponentValue : std::uint8_t { zero, one, skip };

// Binary tree with m uniquely labeled leaves and m-1 internal nodes,
// numbered breadth-first from the root (root = 1). Internal node i
// induces the component map Phi_i: symbols in its left subtree go to 0,
// right subtree to 1, anything else is skipped.
//
// Immutable after construction.
class BinarizationTree {
public:
    struct Child {
        enum class Kind : std::uint8_t { internal, leaf };
        Kind kind;
        std::uint32_t value; // node index or leaf symbol

        bool is_leaf() const { return kind == Kind::leaf; }
        friend bool operator==(const Child&, const Child&) = default;
    };

    // Parses "(tree tree)" pair expressions with decimal leaf labels,
    // e.g. "((2 5) ((1 (4 0)) 3))"; whitespace-insensitive. The alphabet
    // size is the leaf count and labels must cover 0..m-1 exactly.
    static BinarizationTree parse(std::string_view text);

    // Left-leaning comb (((0 1) 2) ...): node m-i realizes the map
    // "0 below i, 1 at i, skip above i".
    static BinarizationTree comb(unsigned m);

    // Tree induced by ceil(lg m)-bit binary expansions with degenerate
    // single-child positions collapsed; the perfect tree when m is a
    // power of two.
    static BinarizationTree zhou_bruck(unsigned m);

    // Uniformly random leaf labeling with random recursive splits.
    // Deterministic for a fixed generator state.
    static BinarizationTree random(unsigned m, std::mt19937_64& rng);

    unsigned alphabet_size() const { return m_; }
    std::uint32_t internal_count() const { return m_ - 1; }

    Child left(std::uint32_t i) const { return left_[i]; }
    Child right(std::uint32_t i) const { return right_[i]; }

    // Internal-child maps with the "0 means leaf" sentinel.
    std::uint32_t a(std::uint32_t i) const {
        return left_[i].is_leaf() ? 0 : left_[i].value;
    }
    std::uint32_t b(std::uint32_t i) const {
        return right_[i].is_leaf() ? 0 : right_[i].value;
    }

    ComponentValue component(std::uint32_t i, Symbol x) const;

    // Root-to-leaf path of a symbol as (internal node, branch bit) steps;
    // the branch bits form the symbol's codeword.
    std::vector<std::pair<std::uint32_t, std::uint8_t>> path_of(Symbol x) const;

    std::vector<Symbol> support0(std::uint32_t i) const; // sorted leaf labels, left subtree
    std::vector<Symbol> support1(std::uint32_t i) const; // sorted leaf labels, right subtree

    // Component presentation order used by the constructions' published
    // tables: reverse node order for the comb, expansion-prefix shortlex
    // for Zhou-Bruck, node order for parsed/random trees.
    std::span<const std::uint32_t> paper_order() const { return paper_order_; }

    // Canonical pair expression with single-space separators.
    std::string to_text() const;

    // Structural equality (presentation order is not compared).
    friend bool operator==(const BinarizationTree& x, const BinarizationTree& y) {
        return x.m_ == y.m_ && x.left_ == y.left_ && x.right_ == y.right_;
    }

private:
    struct Proto; // building block shared by the constructors
    explicit BinarizationTree(unsigned m);
    static BinarizationTree from_proto(unsigned m, const Proto* root);
    void index_leaves();

    unsigned m_ = 0;
    std::vector<Child> left_;   // slot 0 unused; indices 1..m-1
    std::vector<Child> right_;
    // Per internal node: parent index (0 for the root) and which side of
    // the parent it hangs on.
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parent_side_;
    // Per symbol: the internal node owning the leaf and the side.
    std::vector<std::uint32_t> leaf_parent_;
    std::vector<std::uint8_t> leaf_side_;
    std::vector<std::uint32_t> paper_order_;
};

} // namespace dicebits
