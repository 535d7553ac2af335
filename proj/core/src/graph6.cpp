#include "degen/graph6.hpp"

#include <cstdint>

#include "degen/errors.hpp"

namespace degen {

namespace {

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(std::string_view record, std::size_t pos) {
  if (pos >= record.size()) throw FormatError("graph6 record truncated", pos);
  const int c = static_cast<unsigned char>(record[pos]);
  if (c < 63 || c > 126) throw FormatError("graph6 byte out of range", pos);
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& input) {
  const Graph g = input.compacted();
  const std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view record) {
  std::size_t pos = 0;
  if (record.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos < record.size() && record[pos] == ':')
    throw FormatError("sparse6 is not supported", pos);
  std::uint64_t n = 0;
  if (sextet(record, pos) < 63) {
    n = static_cast<std::uint64_t>(sextet(record, pos++));
  } else if (sextet(record, pos + 1) < 63) {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(record, pos++));
  } else {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(record, pos++));
  }
  if (n > (1u << 24)) throw FormatError("graph6 order too large", 0);

  Graph g(n);
  const std::uint64_t total_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = pos;
  const std::size_t expected = body + (total_bits + 5) / 6;
  std::uint64_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const int value = sextet(record, body + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (record.size() > expected) throw FormatError("trailing bytes after graph6 record", expected);
  return g;
}

}  // namespace degen
