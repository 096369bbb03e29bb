#include "forest/graph6.hpp"

#include <vector>

#include "forest/error.hpp"

namespace forest {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && s.front() == ' ') {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) {
    text.remove_prefix(10);
  }
  if (text.empty()) {
    throw Error(ErrorCode::MalformedGraph6, "empty string");
  }
  for (char c : text) {
    if (c < kBias || c > kBias + 63) {
      throw Error(ErrorCode::MalformedGraph6, "byte out of range in \"" + std::string(text) + "\"");
    }
  }
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw Error(ErrorCode::UnsupportedSize, "long-form graph6 header (n > 62)");
  }
  const int n = header - kBias;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() != 1 + byte_count) {
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(1 + byte_count) + " bytes for n=" +
                                                std::to_string(n) + ", got " + std::to_string(text.size()));
  }

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((group >> (5 - bit % 6)) & 1) {
        g.add_edge(i, j);
      }
    }
  }
  // Padding bits must be zero.
  for (; bit < byte_count * 6; ++bit) {
    const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
    if ((group >> (5 - bit % 6)) & 1) {
      throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw Error(ErrorCode::UnsupportedSize, "n=" + std::to_string(n) + " needs long-form graph6");
  }
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> groups((bit_count + 5) / 6, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) {
        groups[bit / 6] |= 1 << (5 - bit % 6);
      }
    }
  }
  std::string out;
  out.reserve(1 + groups.size());
  out.push_back(static_cast<char>(n + kBias));
  for (int v : groups) {
    out.push_back(static_cast<char>(v + kBias));
  }
  return out;
}

}  // namespace forest
