#ifndef GMPROD_GRAPH_HPP_
#define GMPROD_GRAPH_HPP_

/**
 * Dense simple graphs with bit-packed adjacency rows.
 *
 * A Graph is an immutable value: vertices are 0..n-1 in a fixed order and two
 * graphs compare equal only when their adjacency tables match bit for bit.
 * Graphs are assembled through GraphBuilder, which keeps the table symmetric
 * and loop-free at all times.
 */

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gmprod
{

using Vertex = std::uint32_t;

inline constexpr std::size_t max_vertices = 4096;

namespace detail
{

inline constexpr std::size_t bits_per_word = 64;

constexpr auto words_for(std::size_t n) -> std::size_t
{
  return (n + bits_per_word - 1) / bits_per_word;
}

inline auto check_vertex_budget(std::size_t n) -> void
{
  if (n > max_vertices)
    throw SizeLimitError("graph on " + std::to_string(n) + " vertices exceeds the cap of " +
                         std::to_string(max_vertices));
}

} // namespace detail

class GraphBuilder;

class Graph
{
public:
  Graph() = default;

  auto size() const -> std::size_t { return _n; }

  auto adjacent(Vertex u, Vertex v) const -> bool
  {
    return (_bits[u * _words + v / detail::bits_per_word] >> (v % detail::bits_per_word)) & 1U;
  }

  /// Packed adjacency row of v; bits beyond size() are always zero.
  auto row(Vertex v) const -> std::span<const std::uint64_t>
  {
    return {_bits.data() + v * _words, _words};
  }

  auto words_per_row() const -> std::size_t { return _words; }

  auto degree(Vertex v) const -> std::size_t
  {
    std::size_t d = 0;
    for (auto w : row(v))
      d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  auto neighbours(Vertex v) const -> std::vector<Vertex>
  {
    std::vector<Vertex> result;
    auto r = row(v);
    for (std::size_t k = 0; k < r.size(); ++k) {
      auto w = r[k];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        result.push_back(static_cast<Vertex>(k * detail::bits_per_word + bit));
        w &= w - 1;
      }
    }
    return result;
  }

  auto edge_count() const -> std::size_t
  {
    std::size_t twice = 0;
    for (auto w : _bits)
      twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  auto edges() const -> std::vector<std::pair<Vertex, Vertex>>
  {
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < _n; ++u)
      for (auto v : neighbours(u))
        if (u < v)
          result.emplace_back(u, v);
    return result;
  }

  auto is_regular() const -> bool
  {
    if (_n == 0)
      return true;
    auto d = degree(0);
    for (Vertex v = 1; v < _n; ++v)
      if (degree(v) != d)
        return false;
    return true;
  }

  friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
  friend class GraphBuilder;

  std::size_t _n = 0;
  std::size_t _words = 0;
  std::vector<std::uint64_t> _bits;
};

/// Mutable staging area for a Graph. Every edit keeps the table symmetric.
class GraphBuilder
{
public:
  explicit GraphBuilder(std::size_t n)
  {
    detail::check_vertex_budget(n);
    _g._n = n;
    _g._words = detail::words_for(n);
    _g._bits.assign(n * _g._words, 0);
  }

  explicit GraphBuilder(Graph g) : _g(std::move(g)) {}

  auto size() const -> std::size_t { return _g._n; }

  auto adjacent(Vertex u, Vertex v) const -> bool { return _g.adjacent(u, v); }

  auto add_edge(Vertex u, Vertex v) -> void
  {
    check_pair(u, v);
    set_bit(u, v, true);
    set_bit(v, u, true);
  }

  auto remove_edge(Vertex u, Vertex v) -> void
  {
    check_pair(u, v);
    set_bit(u, v, false);
    set_bit(v, u, false);
  }

  auto set_edge(Vertex u, Vertex v, bool on) -> void
  {
    if (on)
      add_edge(u, v);
    else
      remove_edge(u, v);
  }

  auto toggle_edge(Vertex u, Vertex v) -> void { set_edge(u, v, ! adjacent(u, v)); }

  auto build() && -> Graph { return std::move(_g); }
  auto build() const & -> Graph { return _g; }

private:
  auto check_pair(Vertex u, Vertex v) const -> void
  {
    if (u >= _g._n || v >= _g._n)
      throw InvalidArgument("vertex out of range");
    if (u == v)
      throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  }

  auto set_bit(Vertex u, Vertex v, bool on) -> void
  {
    auto &w = _g._bits[u * _g._words + v / detail::bits_per_word];
    auto mask = std::uint64_t{1} << (v % detail::bits_per_word);
    w = on ? (w | mask) : (w & ~mask);
  }

  Graph _g;
};

/// A bijection on 0..n-1; p(v) is the image of v.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> map) : _map(std::move(map))
  {
    std::vector<bool> seen(_map.size(), false);
    for (auto v : _map) {
      if (v >= _map.size() || seen[v])
        throw InvalidArgument("permutation image list is not a bijection");
      seen[v] = true;
    }
  }

  static auto identity(std::size_t n) -> Permutation
  {
    std::vector<Vertex> map(n);
    std::iota(map.begin(), map.end(), Vertex{0});
    Permutation p;
    p._map = std::move(map);
    return p;
  }

  auto size() const -> std::size_t { return _map.size(); }
  auto operator()(Vertex v) const -> Vertex { return _map[v]; }
  auto images() const -> const std::vector<Vertex> & { return _map; }

  auto inverse() const -> Permutation
  {
    std::vector<Vertex> inv(_map.size());
    for (std::size_t v = 0; v < _map.size(); ++v)
      inv[_map[v]] = static_cast<Vertex>(v);
    Permutation p;
    p._map = std::move(inv);
    return p;
  }

  auto is_identity() const -> bool
  {
    for (std::size_t v = 0; v < _map.size(); ++v)
      if (_map[v] != v)
        return false;
    return true;
  }

  friend auto operator==(const Permutation &, const Permutation &) -> bool = default;

private:
  std::vector<Vertex> _map;
};

/// The permutation "apply first, then second".
inline auto then(const Permutation &first, const Permutation &second) -> Permutation
{
  if (first.size() != second.size())
    throw InvalidArgument("cannot compose permutations of different lengths");
  std::vector<Vertex> map(first.size());
  for (std::size_t v = 0; v < map.size(); ++v)
    map[v] = second(first(static_cast<Vertex>(v)));
  return Permutation(std::move(map));
}

inline auto empty_graph(std::size_t n) -> Graph
{
  return GraphBuilder(n).build();
}

inline auto complete_graph(std::size_t q) -> Graph
{
  GraphBuilder b(q);
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      b.add_edge(u, v);
  return std::move(b).build();
}

inline auto path_graph(std::size_t n) -> Graph
{
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    b.add_edge(v - 1, v);
  return std::move(b).build();
}

inline auto cycle_graph(std::size_t n) -> Graph
{
  if (n < 3)
    throw InvalidArgument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

inline auto complement(const Graph &g) -> Graph
{
  GraphBuilder b(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (! g.adjacent(u, v))
        b.add_edge(u, v);
  return std::move(b).build();
}

/// result.adjacent(p(u), p(v)) == g.adjacent(u, v).
inline auto relabel(const Graph &g, const Permutation &p) -> Graph
{
  if (p.size() != g.size())
    throw InvalidArgument("permutation length " + std::to_string(p.size()) +
                          " does not match graph order " + std::to_string(g.size()));
  GraphBuilder b(g.size());
  for (auto [u, v] : g.edges())
    b.add_edge(p(u), p(v));
  return std::move(b).build();
}

inline auto induced_subgraph(const Graph &g, std::span<const Vertex> vertices) -> Graph
{
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

} // namespace gmprod

#endif // GMPROD_GRAPH_HPP_
