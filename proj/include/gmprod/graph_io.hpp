#ifndef GMPROD_GRAPH_IO_HPP_
#define GMPROD_GRAPH_IO_HPP_

// Text formats for graphs and permutations.
//
//   n <count>
//   e <u> <v>        one line per edge, u < v, sorted on output
//   # comment
//
// Permutations are a whitespace-separated list of images.

#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gmprod
{

namespace detail
{

/// Whole-token unsigned integer parse; rejects signs, trailing junk and overflow.
inline auto parse_unsigned(const std::string &token) -> std::optional<std::uint64_t>
{
  if (token.empty() || token.size() > 19)
    return std::nullopt;
  std::uint64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9')
      return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

inline auto is_blank_or_comment(const std::string &line) -> bool
{
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

inline auto split_words(const std::string &line) -> std::vector<std::string>
{
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w)
    words.push_back(w);
  return words;
}

inline auto open_for_reading(const std::string &path) -> std::ifstream
{
  std::ifstream in(path);
  if (! in)
    throw Error("cannot open '" + path + "' for reading");
  return in;
}

inline auto open_for_writing(const std::string &path) -> std::ofstream
{
  std::ofstream out(path);
  if (! out)
    throw Error("cannot open '" + path + "' for writing");
  return out;
}

} // namespace detail

inline auto write_graph(std::ostream &out, const Graph &g) -> void
{
  out << "n " << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << "e " << u << ' ' << v << '\n';
}

inline auto to_text(const Graph &g) -> std::string
{
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline auto read_graph(std::istream &in) -> Graph
{
  std::optional<GraphBuilder> builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line))
      continue;
    auto words = detail::split_words(line);
    if (words[0] == "n") {
      if (builder)
        throw FormatError(line_no, "repeated vertex-count line");
      if (words.size() != 2)
        throw FormatError(line_no, "expected 'n <count>'");
      auto n = detail::parse_unsigned(words[1]);
      if (! n)
        throw FormatError(line_no, "malformed vertex count '" + words[1] + "'");
      if (*n > max_vertices)
        throw FormatError(line_no, "vertex count exceeds the cap of " + std::to_string(max_vertices));
      builder.emplace(static_cast<std::size_t>(*n));
    }
    else if (words[0] == "e") {
      if (! builder)
        throw FormatError(line_no, "edge line before 'n <count>'");
      if (words.size() != 3)
        throw FormatError(line_no, "expected 'e <u> <v>'");
      auto u = detail::parse_unsigned(words[1]);
      auto v = detail::parse_unsigned(words[2]);
      if (! u || ! v)
        throw FormatError(line_no, "malformed edge endpoint");
      if (*u >= builder->size() || *v >= builder->size())
        throw FormatError(line_no, "edge endpoint out of range");
      if (*u == *v)
        throw FormatError(line_no, "self-loop on vertex " + words[1]);
      auto a = static_cast<Vertex>(*u), b = static_cast<Vertex>(*v);
      if (builder->adjacent(a, b))
        throw FormatError(line_no, "duplicate edge " + words[1] + " " + words[2]);
      builder->add_edge(a, b);
    }
    else
      throw FormatError(line_no, "unrecognised line '" + line + "'");
  }
  if (! builder)
    throw FormatError(std::max<std::size_t>(line_no, 1), "missing 'n <count>' line");
  return std::move(*builder).build();
}

inline auto graph_from_text(const std::string &text) -> Graph
{
  std::istringstream in(text);
  return read_graph(in);
}

inline auto load_graph(const std::string &path) -> Graph
{
  auto in = detail::open_for_reading(path);
  return read_graph(in);
}

inline auto save_graph(const std::string &path, const Graph &g) -> void
{
  auto out = detail::open_for_writing(path);
  write_graph(out, g);
}

inline auto write_permutation(std::ostream &out, const Permutation &p) -> void
{
  for (std::size_t v = 0; v < p.size(); ++v)
    out << (v ? " " : "") << p(static_cast<Vertex>(v));
  out << '\n';
}

inline auto read_permutation(std::istream &in) -> Permutation
{
  std::vector<Vertex> images;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line))
      continue;
    for (auto &w : detail::split_words(line)) {
      auto v = detail::parse_unsigned(w);
      if (! v || *v > max_vertices)
        throw FormatError(line_no, "malformed permutation image '" + w + "'");
      images.push_back(static_cast<Vertex>(*v));
    }
  }
  try {
    return Permutation(std::move(images));
  }
  catch (const InvalidArgument &e) {
    throw FormatError(line_no, e.what());
  }
}

inline auto load_permutation(const std::string &path) -> Permutation
{
  auto in = detail::open_for_reading(path);
  return read_permutation(in);
}

inline auto save_permutation(const std::string &path, const Permutation &p) -> void
{
  auto out = detail::open_for_writing(path);
  write_permutation(out, p);
}

} // namespace gmprod

#endif // GMPROD_GRAPH_IO_HPP_
