#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddgraph/bits.hpp"

namespace oddgraph {

using Rank = std::uint64_t;

// catalan(30) is the largest value the rank arithmetic is validated for.
inline constexpr int kMaxCatalanOrder = 30;

Rank catalan(int k);

/// A k-germ: the (k-1)-digit restricted-growth string a_{k-1} ... a_1 naming
/// one rotation class of V(O_k). Digits are stored left to right, so
/// digits()[0] is a_{k-1}. The 1-germ is empty.
class Germ {
 public:
  /// The null germ 0^{k-1}.
  explicit Germ(int k = 1);
  /// Throws ErrorCode::Validation unless the digits satisfy the growth rule.
  Germ(int k, std::vector<std::uint8_t> digits);

  static Germ parse(int k, std::string_view text);

  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  /// a_i for 1 <= i < k.
  int digit(int i) const { return digits_[digits_.size() - static_cast<std::size_t>(i)]; }
  bool is_root() const;
  int digit_sum() const;

  std::string str() const;

  friend auto operator<=>(const Germ&, const Germ&) = default;

 private:
  int k_;
  std::vector<std::uint8_t> digits_;
};

bool is_valid_germ(int k, const std::vector<std::uint8_t>& digits);

std::optional<Germ> germ_successor(const Germ& g);
Rank germ_rank(const Germ& g);
Germ germ_unrank(int k, Rank m);
std::vector<Germ> all_germs(int k);

/// Parent in the ordered tree: the rightmost nonzero digit a_i is decremented.
Germ parent_germ(const Germ& g);
/// Index i of the digit parent_germ() decrements.
int parent_index(const Germ& g);

enum class SymbolKind : std::uint8_t { Number, Equals, Under };

struct Symbol {
  SymbolKind kind = SymbolKind::Equals;
  std::uint8_t value = 0;

  static constexpr Symbol number(int v) { return {SymbolKind::Number, static_cast<std::uint8_t>(v)}; }
  static constexpr Symbol equals() { return {SymbolKind::Equals, 0}; }
  static constexpr Symbol under(int v) { return {SymbolKind::Under, static_cast<std::uint8_t>(v)}; }

  bool is_number() const { return kind == SymbolKind::Number; }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Length-n string of symbols. Used for the labeled strings F(alpha) (numbers
/// and '=' signs) and their underlined variants (numbers and underlined j).
class SymbolString {
 public:
  SymbolString() = default;
  SymbolString(int k, std::vector<Symbol> entries);

  static SymbolString parse(int k, std::string_view text);

  int k() const { return k_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Symbol& operator[](int p) const { return entries_[static_cast<std::size_t>(p)]; }
  const std::vector<Symbol>& entries() const { return entries_; }

  /// Entry at position p moves to position p + j (mod n).
  SymbolString rotated(int j) const;
  /// 1-bits at '=' and underlined positions.
  Vertex support() const;
  /// Position of Num(value), or -1.
  int find_number(int value) const;

  std::string str() const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

 private:
  int k_ = 0;
  std::vector<Symbol> entries_;
};

using LabeledString = SymbolString;
using UnderlinedString = SymbolString;

/// Germ of a rotation class plus the rotation index j such that the
/// canonical position-0 entry sits at position j of the observed string.
struct CanonicalForm {
  Germ germ;
  int rotation = 0;
};

/// Dyck word over {0,1} with 0 as the up-step: weight len/2 and every prefix
/// has at least as many 0-bits as 1-bits. The empty word is allowed.
class DyckWord {
 public:
  DyckWord() = default;
  explicit DyckWord(std::string bits);

  static bool is_dyck(std::string_view bits);

  const std::string& str() const { return bits_; }
  int size() const { return static_cast<int>(bits_.size()); }
  char operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string bits_;
};

/// All Dyck words of length 2*half, in lexicographic order.
std::vector<DyckWord> dyck_words(int half);

LabeledString string_of_germ(const Germ& g);
Vertex bitstring_of_germ(const Germ& g);
DyckWord dyck_word_of_germ(const Germ& g);

/// True iff v is 0 followed by a Dyck word of length 2k.
bool is_canonical(Vertex v, int k);

/// Direct labeling of a canonical bitstring: 1-bits become '=' and up-steps
/// are numbered k, k-1, ..., 0 by height band (top first), left to right
/// inside a band.
LabeledString label_bitstring(Vertex b, int k);

UnderlinedString underline_string(const Germ& g);

/// Inverse of bitstring_of_germ for canonical input.
Germ germ_of_bitstring(Vertex b, int k);

CanonicalForm canonical_rotation(Vertex b, int k);

/// Rotation index alone: rotate(b, -j) is canonical. Throws on wrong weight.
int canonical_shift(Vertex b, int k);

/// The labeled rotation F(alpha).j describing an arbitrary vertex.
LabeledString label_vertex(Vertex v, int k);

}  // namespace oddgraph
