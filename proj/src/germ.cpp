#include "oddgraph/germ.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "oddgraph/error.hpp"

namespace oddgraph {

namespace {

void require_order(int k) {
  if (k < 1 || k > kMaxOrder)
    fail(ErrorCode::Range, "k = " + std::to_string(k) + " outside [1," + std::to_string(kMaxOrder) + "]");
}

// completions[r][v]: number of digit strings of length r whose first digit is
// at most v+1 and where every digit is at most its predecessor plus one.
struct CompletionTable {
  static constexpr int kSize = kMaxCatalanOrder + 2;
  std::array<std::array<Rank, kSize + 1>, kSize> count{};

  CompletionTable() {
    for (int v = 0; v <= kSize; ++v) count[0][v] = 1;
    for (int r = 1; r < kSize; ++r)
      for (int v = 0; v + 1 <= kSize; ++v) {
        Rank s = 0;
        for (int x = 0; x <= v + 1 && x <= kSize; ++x) s += count[r - 1][x];
        count[r][v] = s;
      }
  }
};

const CompletionTable& completions() {
  static const CompletionTable table;
  return table;
}

LabeledString root_string(int k) {
  std::vector<Symbol> e;
  e.reserve(static_cast<std::size_t>(2 * k + 1));
  for (int v = 0; v <= k; ++v) e.push_back(Symbol::number(v));
  for (int v = 0; v < k; ++v) e.push_back(Symbol::equals());
  return LabeledString(k, std::move(e));
}

// F(beta) -> F(alpha) for a child alpha whose changed digit is a_i.
std::vector<Symbol> forward_step(const std::vector<Symbol>& parent, int i) {
  const int n = static_cast<int>(parent.size());
  const auto mid_begin = parent.begin() + i;
  const auto mid_end = parent.begin() + (n - i);
  if (mid_begin >= mid_end || !mid_begin->is_number() || mid_begin->value == 0)
    fail(ErrorCode::Construction, "tree transform: middle segment does not start with a positive number");
  const int gamma = mid_begin->value;
  const auto y = std::find(mid_begin, mid_end, Symbol::number(gamma + 1));
  if (y == mid_end) fail(ErrorCode::Construction, "tree transform: entry gamma+1 missing from middle segment");
  std::vector<Symbol> out;
  out.reserve(parent.size());
  out.insert(out.end(), parent.begin(), mid_begin);
  out.insert(out.end(), y, mid_end);
  out.insert(out.end(), mid_begin, y);
  out.insert(out.end(), mid_end, parent.end());
  return out;
}

// Inverse of forward_step. Returns the index i of the undone step, or 0 when
// `s` is the root string.
int backward_step(std::vector<Symbol>& s, int k) {
  const int n = static_cast<int>(s.size());
  int i = 0;
  while (i <= k && s[static_cast<std::size_t>(i)] == Symbol::number(i)) ++i;
  if (i == k + 1) return 0;
  if (i == 0 || 2 * i >= n) fail(ErrorCode::CanonicalForm, "labeled string is not in canonical form");
  const auto mid_begin = s.begin() + i;
  const auto mid_end = s.begin() + (n - i);
  if (!mid_begin->is_number() || mid_begin->value == 0)
    fail(ErrorCode::CanonicalForm, "labeled string is not in canonical form");
  const int gamma = mid_begin->value - 1;
  const auto x = std::find(mid_begin, mid_end, Symbol::number(gamma));
  if (x == mid_end) fail(ErrorCode::CanonicalForm, "labeled string is not in canonical form");
  std::rotate(mid_begin, x, mid_end);
  return i;
}

}  // namespace

int canonical_shift(Vertex b, int k) {
  require_order(k);
  const int n = 2 * k + 1;
  if ((b.bits & ~full_mask(n)) != 0 || b.weight() != k)
    fail(ErrorCode::Weight, "bitstring " + to_bitstring(b, n) + " must have weight exactly " + std::to_string(k));
  int height = 0;
  int best = 0;
  int best_at = 0;
  for (int p = 0; p < n; ++p) {
    if (height <= best) {
      best = height;
      best_at = p;
    }
    height += b.has(p) ? -1 : 1;
  }
  return best_at;
}

Rank catalan(int k) {
  if (k < 0 || k > kMaxCatalanOrder)
    fail(ErrorCode::Range, "catalan(" + std::to_string(k) + ") outside supported range [0,30]");
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<unsigned>(2 * (2 * i + 1)) / static_cast<unsigned>(i + 2);
  return static_cast<Rank>(c);
}

bool is_valid_germ(int k, const std::vector<std::uint8_t>& digits) {
  if (k < 1 || k > kMaxOrder || digits.size() != static_cast<std::size_t>(k - 1)) return false;
  int prev = 0;
  for (auto d : digits) {
    if (d > prev + 1) return false;
    prev = d;
  }
  return true;
}

Germ::Germ(int k) : k_(k) {
  require_order(k);
  digits_.assign(static_cast<std::size_t>(k - 1), 0);
}

Germ::Germ(int k, std::vector<std::uint8_t> digits) : k_(k), digits_(std::move(digits)) {
  require_order(k);
  if (!is_valid_germ(k, digits_)) fail(ErrorCode::Validation, "invalid " + std::to_string(k) + "-germ '" + str() + "'");
}

Germ Germ::parse(int k, std::string_view text) {
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char c : text) {
    const int v = digit_value(c);
    if (v < 0) fail(ErrorCode::Validation, "germ '" + std::string(text) + "' has a non-digit character");
    d.push_back(static_cast<std::uint8_t>(v));
  }
  return Germ(k, std::move(d));
}

bool Germ::is_root() const {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

int Germ::digit_sum() const {
  int s = 0;
  for (auto d : digits_) s += d;
  return s;
}

std::string Germ::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_) s.push_back(d < 36 ? digit_char(d) : '?');
  return s;
}

std::optional<Germ> germ_successor(const Germ& g) {
  auto d = g.digits();
  for (int idx = static_cast<int>(d.size()) - 1; idx >= 0; --idx) {
    const int prev = idx == 0 ? 0 : d[static_cast<std::size_t>(idx - 1)];
    if (d[static_cast<std::size_t>(idx)] < prev + 1) {
      ++d[static_cast<std::size_t>(idx)];
      std::fill(d.begin() + idx + 1, d.end(), 0);
      return Germ(g.k(), std::move(d));
    }
  }
  return std::nullopt;
}

Rank germ_rank(const Germ& g) {
  const auto& table = completions().count;
  const auto& d = g.digits();
  const int len = static_cast<int>(d.size());
  Rank rank = 0;
  for (int idx = 0; idx < len; ++idx) {
    const int remaining = len - 1 - idx;
    for (int x = 0; x < d[static_cast<std::size_t>(idx)]; ++x) rank += table[remaining][x];
  }
  return rank;
}

Germ germ_unrank(int k, Rank m) {
  require_order(k);
  if (m >= catalan(k))
    fail(ErrorCode::Range, "rank " + std::to_string(m) + " >= catalan(" + std::to_string(k) + ")");
  const auto& table = completions().count;
  std::vector<std::uint8_t> d(static_cast<std::size_t>(k - 1));
  int prev = 0;
  for (int idx = 0; idx < k - 1; ++idx) {
    const int remaining = k - 2 - idx;
    int x = 0;
    while (x <= prev && m >= table[remaining][x]) {
      m -= table[remaining][x];
      ++x;
    }
    d[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(x);
    prev = x;
  }
  return Germ(k, std::move(d));
}

std::vector<Germ> all_germs(int k) {
  std::vector<Germ> out;
  out.reserve(static_cast<std::size_t>(catalan(k)));
  std::optional<Germ> g = Germ(k);
  while (g) {
    out.push_back(*g);
    g = germ_successor(*g);
  }
  return out;
}

int parent_index(const Germ& g) {
  for (int i = 1; i < g.k(); ++i)
    if (g.digit(i) != 0) return i;
  fail(ErrorCode::NoParent, "the root germ " + g.str() + " has no parent");
}

Germ parent_germ(const Germ& g) {
  const int i = parent_index(g);
  auto d = g.digits();
  --d[d.size() - static_cast<std::size_t>(i)];
  return Germ(g.k(), std::move(d));
}

SymbolString::SymbolString(int k, std::vector<Symbol> entries) : k_(k), entries_(std::move(entries)) {}

SymbolString SymbolString::parse(int k, std::string_view text) {
  std::vector<Symbol> e;
  for (std::size_t p = 0; p < text.size(); ++p) {
    const char c = text[p];
    if (c == '=') {
      e.push_back(Symbol::equals());
    } else if (c == '_') {
      if (p + 1 >= text.size() || digit_value(text[p + 1]) < 0)
        fail(ErrorCode::Parse, "dangling underline in '" + std::string(text) + "'");
      e.push_back(Symbol::under(digit_value(text[++p])));
    } else if (digit_value(c) >= 0) {
      e.push_back(Symbol::number(digit_value(c)));
    } else {
      fail(ErrorCode::Parse, "unexpected character in '" + std::string(text) + "'");
    }
  }
  if (static_cast<int>(e.size()) != 2 * k + 1) fail(ErrorCode::Parse, "symbol string length must be 2k+1");
  return SymbolString(k, std::move(e));
}

SymbolString SymbolString::rotated(int j) const {
  const int n = size();
  std::vector<Symbol> out(entries_.size());
  j = ((j % n) + n) % n;
  for (int p = 0; p < n; ++p) out[static_cast<std::size_t>((p + j) % n)] = entries_[static_cast<std::size_t>(p)];
  return SymbolString(k_, std::move(out));
}

Vertex SymbolString::support() const {
  Mask m = 0;
  for (int p = 0; p < size(); ++p)
    if (!entries_[static_cast<std::size_t>(p)].is_number()) m |= Mask{1} << p;
  return Vertex{m};
}

int SymbolString::find_number(int value) const {
  for (int p = 0; p < size(); ++p)
    if (entries_[static_cast<std::size_t>(p)] == Symbol::number(value)) return p;
  return -1;
}

std::string SymbolString::str() const {
  std::string s;
  s.reserve(entries_.size() + 4);
  for (const auto& e : entries_) {
    switch (e.kind) {
      case SymbolKind::Number: s.push_back(digit_char(e.value)); break;
      case SymbolKind::Equals: s.push_back('='); break;
      case SymbolKind::Under:
        s.push_back('_');
        s.push_back(digit_char(e.value));
        break;
    }
  }
  return s;
}

DyckWord::DyckWord(std::string bits) : bits_(std::move(bits)) {
  if (!is_dyck(bits_)) fail(ErrorCode::Validation, "'" + bits_ + "' is not a Dyck word");
}

bool DyckWord::is_dyck(std::string_view bits) {
  int h = 0;
  for (char c : bits) {
    if (c == '0')
      ++h;
    else if (c == '1')
      --h;
    else
      return false;
    if (h < 0) return false;
  }
  return h == 0;
}

std::vector<DyckWord> dyck_words(int half) {
  std::vector<DyckWord> out;
  std::string cur;
  auto rec = [&](auto&& self, int open, int close) -> void {
    if (open == half && close == half) {
      out.emplace_back(cur);
      return;
    }
    if (open < half) {
      cur.push_back('0');
      self(self, open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back('1');
      self(self, open, close + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

LabeledString string_of_germ(const Germ& g) {
  std::vector<int> steps;
  Germ cur = g;
  while (!cur.is_root()) {
    steps.push_back(parent_index(cur));
    cur = parent_germ(cur);
  }
  std::vector<Symbol> s = root_string(g.k()).entries();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s = forward_step(s, *it);
  return LabeledString(g.k(), std::move(s));
}

Vertex bitstring_of_germ(const Germ& g) { return string_of_germ(g).support(); }

DyckWord dyck_word_of_germ(const Germ& g) {
  return DyckWord(to_bitstring(bitstring_of_germ(g), g.n()).substr(1));
}

bool is_canonical(Vertex v, int k) {
  const int n = 2 * k + 1;
  if ((v.bits & ~full_mask(n)) != 0 || v.weight() != k) return false;
  int h = 0;
  for (int p = 0; p < n; ++p) {
    h += v.has(p) ? -1 : 1;
    if (h < 1) return false;
  }
  return true;
}

LabeledString label_bitstring(Vertex b, int k) {
  require_order(k);
  const int n = 2 * k + 1;
  if (!is_canonical(b, k))
    fail(ErrorCode::CanonicalForm, to_bitstring(b, n) + " is not 0 followed by a Dyck word");
  // bands[y]: up-step positions rising from height y, left to right.
  std::vector<std::vector<int>> bands(static_cast<std::size_t>(k + 1));
  int h = 0;
  for (int p = 0; p < n; ++p) {
    if (b.has(p)) {
      --h;
    } else {
      bands[static_cast<std::size_t>(h)].push_back(p);
      ++h;
    }
  }
  std::vector<Symbol> e(static_cast<std::size_t>(n), Symbol::equals());
  int label = k;
  for (int y = k; y >= 0; --y)
    for (int p : bands[static_cast<std::size_t>(y)]) e[static_cast<std::size_t>(p)] = Symbol::number(label--);
  return LabeledString(k, std::move(e));
}

UnderlinedString underline_string(const Germ& g) {
  const LabeledString f = string_of_germ(g);
  const int n = g.n();
  std::vector<Symbol> e = f.entries();
  std::vector<int> open;
  for (int p = 1; p < n; ++p) {
    if (f[p].is_number()) {
      open.push_back(p);
    } else {
      const int q = open.back();
      open.pop_back();
      e[static_cast<std::size_t>(p)] = Symbol::under(f[q].value);
    }
  }
  return UnderlinedString(g.k(), std::move(e));
}

Germ germ_of_bitstring(Vertex b, int k) {
  std::vector<Symbol> s = label_bitstring(b, k).entries();
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(k - 1), 0);
  for (int i = backward_step(s, k); i != 0; i = backward_step(s, k)) {
    if (i >= k) fail(ErrorCode::CanonicalForm, "tree walk left the germ range");
    ++digits[digits.size() - static_cast<std::size_t>(i)];
  }
  Germ g(k, std::move(digits));
  if (bitstring_of_germ(g) != b) fail(ErrorCode::CanonicalForm, "tree walk did not invert the labeling");
  return g;
}

CanonicalForm canonical_rotation(Vertex b, int k) {
  const int j = canonical_shift(b, k);
  return CanonicalForm{germ_of_bitstring(rotate(b, -j, 2 * k + 1), k), j};
}

LabeledString label_vertex(Vertex v, int k) {
  const int j = canonical_shift(v, k);
  return label_bitstring(rotate(v, -j, 2 * k + 1), k).rotated(j);
}

}  // namespace oddgraph
