#include "tokenlap/graph6.hpp"

#include <istream>

#include "tokenlap/error.hpp"

namespace tokenlap {
namespace {

constexpr std::string_view kHeaderPrefix = ">>graph6<<";

std::string_view trim_trailing(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeaderPrefix)) {
    text.remove_prefix(kHeaderPrefix.size());
    base = kHeaderPrefix.size();
  }
  text = trim_trailing(text);
  if (text.empty()) throw ParseError("empty graph6 record", base);

  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph order above 62 is not supported", base);
  if (header < 63 || header > 126) throw ParseError("invalid size header byte", base);
  const int n = header - 63;
  if (n < 1) throw ParseError("graph order must be at least 1", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != 1 + groups) {
    throw ParseError("expected " + std::to_string(1 + groups) + " bytes, found " +
                         std::to_string(text.size()),
                     base + std::min(text.size(), 1 + groups));
  }

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t pos = 1 + bit / 6;
      const int c = static_cast<unsigned char>(text[pos]);
      if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", base + pos);
      const int value = c - 63;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t pos = groups;
    const int value = static_cast<unsigned char>(text[pos]) - 63;
    if (value < 0 || value > 63) throw ParseError("byte outside graph6 range", base + pos);
    const int pad = 6 - static_cast<int>(bits % 6);
    if (value & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", base + pos);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

std::vector<Graph6Record> read_graph6_records(std::istream& in) {
  std::vector<Graph6Record> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim_trailing(line);
    if (body.empty()) continue;
    records.push_back({number, std::string(body)});
  }
  return records;
}

}  // namespace tokenlap
