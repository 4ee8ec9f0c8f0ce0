#include "dicebits/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <memory>
#include <stdexcept>

#include "dicebits/errors.hpp"

namespace dicebits {

struct BinarizationTree::Proto {
    long leaf = -1; // >= 0 for leaves
    std::unique_ptr<Proto> l, r;
    std::string zb_prefix; // expansion prefix, Zhou-Bruck only

    bool is_leaf() const { return leaf >= 0; }
};

BinarizationTree::BinarizationTree(unsigned m) : m_(m) {
    if (m < 2) throw std::invalid_argument("binarization tree needs m >= 2");
    if (m > kMaxAlphabet) throw std::invalid_argument("alphabet size above 2^16");
    left_.resize(m);
    right_.resize(m);
    parent_.assign(m, 0);
    parent_side_.assign(m, 0);
    leaf_parent_.assign(m, 0);
    leaf_side_.assign(m, 0);
    paper_order_.resize(m - 1);
    for (std::uint32_t i = 1; i < m; ++i) paper_order_[i - 1] = i;
}

void BinarizationTree::index_leaves() {
    for (std::uint32_t i = 1; i <= internal_count(); ++i) {
        if (left_[i].is_leaf()) {
            leaf_parent_[left_[i].value] = i;
            leaf_side_[left_[i].value] = 0;
        } else {
            parent_[left_[i].value] = i;
            parent_side_[left_[i].value] = 0;
        }
        if (right_[i].is_leaf()) {
            leaf_parent_[right_[i].value] = i;
            leaf_side_[right_[i].value] = 1;
        } else {
            parent_[right_[i].value] = i;
            parent_side_[right_[i].value] = 1;
        }
    }
}

BinarizationTree BinarizationTree::from_proto(unsigned m, const Proto* root) {
    BinarizationTree tree(m);
    // Breadth-first numbering, root = 1.
    std::deque<std::pair<const Proto*, std::uint32_t>> queue;
    queue.emplace_back(root, 1);
    std::uint32_t next = 2;
    while (!queue.empty()) {
        auto [node, index] = queue.front();
        queue.pop_front();
        for (int side = 0; side < 2; ++side) {
            const Proto* child = side == 0 ? node->l.get() : node->r.get();
            Child& slot = side == 0 ? tree.left_[index] : tree.right_[index];
            if (child->is_leaf()) {
                slot = {Child::Kind::leaf, static_cast<std::uint32_t>(child->leaf)};
            } else {
                slot = {Child::Kind::internal, next};
                queue.emplace_back(child, next);
                ++next;
            }
        }
    }
    tree.index_leaves();
    return tree;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of tree expression");
        return text[pos];
    }

    std::unique_ptr<BinarizationTree::Proto> parse_node() {
        char c = peek();
        auto node = std::make_unique<BinarizationTree::Proto>();
        if (c == '(') {
            ++pos;
            node->l = parse_node();
            node->r = parse_node();
            if (peek() != ')') throw ParseError("expected ')' in tree expression");
            ++pos;
            return node;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = pos;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            unsigned long v = 0;
            std::from_chars(text.data() + pos, text.data() + j, v);
            if (v >= kMaxAlphabet) throw ParseError("leaf label " + std::to_string(v) + " too large");
            pos = j;
            node->leaf = static_cast<long>(v);
            return node;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in tree expression");
    }
};

unsigned count_and_check_leaves(const BinarizationTree::Proto* root) {
    // Collect labels, then demand a bijection with 0..m-1.
    std::vector<unsigned long> labels;
    std::vector<const BinarizationTree::Proto*> stack{root};
    while (!stack.empty()) {
        const auto* n = stack.back();
        stack.pop_back();
        if (n->is_leaf()) {
            labels.push_back(static_cast<unsigned long>(n->leaf));
        } else {
            stack.push_back(n->l.get());
            stack.push_back(n->r.get());
        }
    }
    const unsigned m = static_cast<unsigned>(labels.size());
    if (m < 2) throw ParseError("tree must have at least two leaves");
    if (m > kMaxAlphabet) throw ParseError("tree has more than 2^16 leaves");
    std::vector<bool> seen(m, false);
    for (unsigned long v : labels) {
        if (v >= m) {
            throw ParseError("leaf label " + std::to_string(v) + " out of range for " +
                             std::to_string(m) + " leaves");
        }
        if (seen[v]) throw ParseError("duplicate leaf label " + std::to_string(v));
        seen[v] = true;
    }
    return m;
}

} // namespace

BinarizationTree BinarizationTree::parse(std::string_view text) {
    Parser p{text};
    char c = p.peek();
    if (c != '(') throw ParseError("tree expression must be a pair, e.g. \"(0 1)\"");
    auto root = p.parse_node();
    p.skip_ws();
    if (p.pos != text.size()) {
        throw ParseError("trailing characters after tree expression: '" +
                         std::string(text.substr(p.pos)) + "'");
    }
    const unsigned m = count_and_check_leaves(root.get());
    return from_proto(m, root.get());
}

BinarizationTree BinarizationTree::comb(unsigned m) {
    if (m < 2) throw std::invalid_argument("comb tree needs m >= 2");
    if (m > kMaxAlphabet) throw std::invalid_argument("alphabet size above 2^16");
    BinarizationTree tree(m);
    // Node i has the internal node i+1 (or leaf 0 at the bottom) on the
    // left and leaf m-i on the right, so node m-i realizes x^(i).
    for (std::uint32_t i = 1; i + 1 < m; ++i) {
        tree.left_[i] = {Child::Kind::internal, i + 1};
        tree.right_[i] = {Child::Kind::leaf, m - i};
    }
    tree.left_[m - 1] = {Child::Kind::leaf, 0};
    tree.right_[m - 1] = {Child::Kind::leaf, 1};
    tree.index_leaves();
    for (std::uint32_t i = 0; i + 1 < m; ++i) tree.paper_order_[i] = m - 1 - i;
    return tree;
}

namespace {

// Splits [lo, hi) by the current expansion bit, collapsing positions
// where one half is empty.
std::unique_ptr<BinarizationTree::Proto> zb_build(unsigned lo, unsigned hi, unsigned width,
                                                  const std::string& prefix) {
    auto node = std::make_unique<BinarizationTree::Proto>();
    if (hi - lo == 1) {
        node->leaf = static_cast<long>(lo);
        return node;
    }
    const unsigned half = 1u << (width - 1);
    const unsigned mid = lo + half;
    if (mid >= hi) {
        return zb_build(lo, hi, width - 1, prefix + "0");
    }
    node->zb_prefix = prefix;
    node->l = zb_build(lo, mid, width - 1, prefix + "0");
    node->r = zb_build(mid, hi, width - 1, prefix + "1");
    return node;
}

unsigned ceil_log2(unsigned m) {
    unsigned w = 0;
    while ((1u << w) < m) ++w;
    return w;
}

} // namespace

BinarizationTree BinarizationTree::zhou_bruck(unsigned m) {
    if (m < 2) throw std::invalid_argument("zhou-bruck tree needs m >= 2");
    if (m > kMaxAlphabet) throw std::invalid_argument("alphabet size above 2^16");
    auto root = zb_build(0, m, ceil_log2(m), "");
    BinarizationTree tree = from_proto(m, root.get());
    // Presentation order: shortlex over the surviving expansion prefixes.
    // Recover each node's prefix by walking the proto alongside the tree.
    std::vector<std::string> prefix(m);
    std::vector<std::pair<const Proto*, std::uint32_t>> stack{{root.get(), 1}};
    while (!stack.empty()) {
        auto [node, index] = stack.back();
        stack.pop_back();
        prefix[index] = node->zb_prefix;
        if (!node->l->is_leaf()) stack.emplace_back(node->l.get(), tree.left_[index].value);
        if (!node->r->is_leaf()) stack.emplace_back(node->r.get(), tree.right_[index].value);
    }
    std::sort(tree.paper_order_.begin(), tree.paper_order_.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                  if (prefix[x].size() != prefix[y].size()) {
                      return prefix[x].size() < prefix[y].size();
                  }
                  return prefix[x] < prefix[y];
              });
    return tree;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

std::unique_ptr<BinarizationTree::Proto> random_split(std::span<const Symbol> labels,
                                                      std::mt19937_64& rng) {
    auto node = std::make_unique<BinarizationTree::Proto>();
    if (labels.size() == 1) {
        node->leaf = labels[0];
        return node;
    }
    const std::size_t cut =
        1 + static_cast<std::size_t>(uniform_below(rng, labels.size() - 1));
    node->l = random_split(labels.subspan(0, cut), rng);
    node->r = random_split(labels.subspan(cut), rng);
    return node;
}

} // namespace

BinarizationTree BinarizationTree::random(unsigned m, std::mt19937_64& rng) {
    if (m < 2) throw std::invalid_argument("random tree needs m >= 2");
    std::vector<Symbol> labels(m);
    for (unsigned i = 0; i < m; ++i) labels[i] = static_cast<Symbol>(i);
    for (std::size_t i = m - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i + 1));
        std::swap(labels[i], labels[j]);
    }
    auto root = random_split(labels, rng);
    return from_proto(m, root.get());
}

ComponentValue BinarizationTree::component(std::uint32_t i, Symbol x) const {
    if (i < 1 || i > internal_count()) throw std::out_of_range("internal node index out of range");
    if (x >= m_) throw std::out_of_range("symbol out of range");
    std::uint32_t node = leaf_parent_[x];
    std::uint8_t side = leaf_side_[x];
    while (true) {
        if (node == i) return side ? ComponentValue::one : ComponentValue::zero;
        if (node == 1) return ComponentValue::skip;
        side = parent_side_[node];
        node = parent_[node];
    }
}

std::vector<std::pair<std::uint32_t, std::uint8_t>> BinarizationTree::path_of(Symbol x) const {
    if (x >= m_) throw std::out_of_range("symbol out of range");
    std::vector<std::pair<std::uint32_t, std::uint8_t>> steps;
    std::uint32_t node = leaf_parent_[x];
    std::uint8_t side = leaf_side_[x];
    while (true) {
        steps.emplace_back(node, side);
        if (node == 1) break;
        side = parent_side_[node];
        node = parent_[node];
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

namespace {

void collect_leaves(const BinarizationTree& tree, BinarizationTree::Child child,
                    std::vector<Symbol>& out) {
    if (child.is_leaf()) {
        out.push_back(static_cast<Symbol>(child.value));
        return;
    }
    collect_leaves(tree, tree.left(child.value), out);
    collect_leaves(tree, tree.right(child.value), out);
}

} // namespace

std::vector<Symbol> BinarizationTree::support0(std::uint32_t i) const {
    if (i < 1 || i > internal_count()) throw std::out_of_range("internal node index out of range");
    std::vector<Symbol> out;
    collect_leaves(*this, left_[i], out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Symbol> BinarizationTree::support1(std::uint32_t i) const {
    if (i < 1 || i > internal_count()) throw std::out_of_range("internal node index out of range");
    std::vector<Symbol> out;
    collect_leaves(*this, right_[i], out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void print_node(const BinarizationTree& tree, BinarizationTree::Child child, std::string& out) {
    if (child.is_leaf()) {
        out += std::to_string(child.value);
        return;
    }
    out.push_back('(');
    print_node(tree, tree.left(child.value), out);
    out.push_back(' ');
    print_node(tree, tree.right(child.value), out);
    out.push_back(')');
}

} // namespace

std::string BinarizationTree::to_text() const {
    std::string out;
    out.push_back('(');
    print_node(*this, left_[1], out);
    out.push_back(' ');
    print_node(*this, right_[1], out);
    out.push_back(')');
    return out;
}

} // namespace dicebits
