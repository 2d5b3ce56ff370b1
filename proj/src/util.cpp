#include <string>
#include <vector>

#include "oddgraph/bits.hpp"
#include "oddgraph/error.hpp"

namespace oddgraph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Range: return "range";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::NoParent: return "no-parent";
    case ErrorCode::CanonicalForm: return "canonical-form";
    case ErrorCode::Weight: return "weight";
    case ErrorCode::Adjacency: return "adjacency";
    case ErrorCode::Structure: return "structure";
    case ErrorCode::Generation: return "generation";
    case ErrorCode::Supplementation: return "supplementation";
    case ErrorCode::Partition: return "partition";
    case ErrorCode::Construction: return "construction";
    case ErrorCode::Assembly: return "assembly";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Lift: return "lift";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

std::string to_bitstring(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (v.has(p)) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

Vertex parse_bitstring(const std::string& text) {
  if (text.empty() || text.size() > 63) fail(ErrorCode::Parse, "bitstring length must be in [1,63]");
  Mask m = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] == '1')
      m |= Mask{1} << p;
    else if (text[p] != '0')
      fail(ErrorCode::Parse, "bitstring '" + text + "' contains a character other than 0/1");
  }
  return Vertex{m};
}

std::vector<int> support(Vertex v, int n) {
  std::vector<int> out;
  for (int p = 0; p < n; ++p)
    if (v.has(p)) out.push_back(p);
  return out;
}

std::vector<Vertex> all_of_weight(int n, int weight) {
  std::vector<Vertex> out;
  if (weight < 0 || weight > n) return out;
  if (weight == 0) {
    out.push_back(Vertex{0});
    return out;
  }
  out.reserve(static_cast<std::size_t>(binomial(n, weight)));
  const Mask limit = Mask{1} << n;
  Mask x = (Mask{1} << weight) - 1;
  while (x < limit) {
    out.push_back(Vertex{x});
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

char digit_char(int value) {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (value < 0 || value >= 36) fail(ErrorCode::Range, "value " + std::to_string(value) + " has no single-digit rendering");
  return kDigits[value];
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace oddgraph
