#include "oddgraph/tpp.hpp"

#include <algorithm>

#include "oddgraph/error.hpp"

namespace oddgraph {

ParenthesizedNumbering ParenthesizedNumbering::parse(std::string_view text) {
  ParenthesizedNumbering h;
  std::string sep;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',') {
      sep.push_back(c);
    } else if (digit_value(c) > 0) {
      h.separators.push_back(sep);
      sep.clear();
      h.values.push_back(digit_value(c));
    } else {
      fail(ErrorCode::Parse, "unexpected character in numbering '" + std::string(text) + "'");
    }
  }
  h.separators.push_back(sep);
  (void)h.blocks();
  return h;
}

std::vector<ParenthesizedNumbering::Block> ParenthesizedNumbering::blocks() const {
  if (values.empty() || separators.size() != values.size() + 1)
    fail(ErrorCode::Structure, "numbering needs one separator slot around each entry");
  std::vector<Block> out;
  std::vector<std::size_t> open;  // indices into out
  const int len = static_cast<int>(values.size());
  for (int slot = 0; slot <= len; ++slot) {
    bool after_close = false;
    for (char c : separators[static_cast<std::size_t>(slot)]) {
      if (c == '(') {
        if (slot == len) fail(ErrorCode::Structure, "'(' after the last entry");
        out.push_back(Block{slot, -1, static_cast<int>(open.size())});
        open.push_back(out.size() - 1);
      } else if (c == ')') {
        if (open.empty() || slot == 0) fail(ErrorCode::Structure, "unbalanced ')'");
        Block& b = out[open.back()];
        open.pop_back();
        b.last = slot - 1;
        if (b.last <= b.first) fail(ErrorCode::Structure, "a block must hold at least two entries");
        after_close = true;
      } else if (c == ',') {
        if (after_close) fail(ErrorCode::Structure, "',' must separate two bare entries");
      }
    }
  }
  if (!open.empty()) fail(ErrorCode::Structure, "unbalanced '('");
  // Every entry must be enclosed: the top level is a concatenation of blocks.
  int covered = 0;
  for (const auto& b : out)
    if (b.depth == 0) {
      if (b.first != covered) fail(ErrorCode::Structure, "entries outside any block");
      covered = b.last + 1;
    }
  if (covered != len) fail(ErrorCode::Structure, "entries outside any block");
  return out;
}

std::string ParenthesizedNumbering::str() const {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += separators[i];
    s.push_back(digit_char(values[i]));
  }
  s += separators.back();
  return s;
}

ParenthesizedNumbering parenthesize(const Germ& g) {
  const int k = g.k();
  const std::string f = to_bitstring(bitstring_of_germ(g), g.n()).substr(1);
  ParenthesizedNumbering h;
  h.values.resize(static_cast<std::size_t>(2 * k));
  h.separators.resize(static_cast<std::size_t>(2 * k + 1));
  for (int i = 0; i < 2 * k; ++i) h.values[static_cast<std::size_t>(i)] = i + 1;
  h.separators.front() = "(";
  h.separators.back() = ")";
  for (int i = 1; i < 2 * k; ++i) {
    const char a = f[static_cast<std::size_t>(i - 1)];
    const char b = f[static_cast<std::size_t>(i)];
    std::string& sep = h.separators[static_cast<std::size_t>(i)];
    if (a == '0' && b == '1')
      sep = ",";
    else if (a == '1' && b == '0')
      sep = ")(";
    else if (a == '0' && b == '0')
      sep = "(";
    else
      sep = ")";
  }
  return h;
}

std::vector<ParenthesizedNumbering> reversal_levels(const ParenthesizedNumbering& h) {
  const auto blocks = h.blocks();
  int max_depth = 0;
  for (const auto& b : blocks) max_depth = std::max(max_depth, b.depth);
  std::vector<ParenthesizedNumbering> levels{h};
  for (int depth = 0; depth <= max_depth; ++depth) {
    ParenthesizedNumbering next = levels.back();
    for (const auto& b : blocks)
      if (b.depth == depth)
        std::reverse(next.values.begin() + b.first, next.values.begin() + b.last + 1);
    levels.push_back(std::move(next));
  }
  return levels;
}

SupplementationOrder reversal_fixpoint(const ParenthesizedNumbering& h) {
  const auto levels = reversal_levels(h);
  SupplementationOrder order;
  order.p = levels.back().values;
  const int len = static_cast<int>(order.p.size());
  order.pi.assign(order.p.size(), 0);
  for (int i = 0; i < len; ++i) {
    const int v = order.p[static_cast<std::size_t>(i)];
    if (v < 1 || v > len || order.pi[static_cast<std::size_t>(v - 1)] != 0)
      fail(ErrorCode::Structure, "entries are not a permutation of [1," + std::to_string(len) + "]");
    order.pi[static_cast<std::size_t>(v - 1)] = i + 1;
  }
  return order;
}

SupplementationOrder pi_of_germ(const Germ& g) { return reversal_fixpoint(parenthesize(g)); }

}  // namespace oddgraph
