#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddgraph/germ.hpp"

namespace oddgraph {

/// A concatenation of tightly parenthesized permutations. The integer entries
/// live in `values` (1-based positions 1..2k map to indices 0..2k-1) and the
/// punctuation between them in `separators`, which has one more element than
/// `values`: separators[0] precedes the first entry and separators.back()
/// follows the last.
struct ParenthesizedNumbering {
  std::vector<int> values;
  std::vector<std::string> separators;

  static ParenthesizedNumbering parse(std::string_view text);

  /// Index ranges [first, last] of every parenthesized block in pre-order
  /// (outer blocks before the blocks they contain), with nesting depth.
  struct Block {
    int first = 0;
    int last = 0;
    int depth = 0;
  };
  std::vector<Block> blocks() const;

  std::string str() const;
};

struct SupplementationOrder {
  std::vector<int> p;   // p[i-1] = p(i)
  std::vector<int> pi;  // pi = p^{-1}
};

/// g(alpha) with its bits numbered 1..2k left to right (h_0).
ParenthesizedNumbering parenthesize(const Germ& g);

/// h_0, h_1, ..., h_s: each level reverses the entries of every block at the
/// corresponding depth, keeping the punctuation in place.
std::vector<ParenthesizedNumbering> reversal_levels(const ParenthesizedNumbering& h);

SupplementationOrder reversal_fixpoint(const ParenthesizedNumbering& h);

SupplementationOrder pi_of_germ(const Germ& g);

}  // namespace oddgraph
