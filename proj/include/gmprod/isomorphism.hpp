#ifndef GMPROD_ISOMORPHISM_HPP_
#define GMPROD_ISOMORPHISM_HPP_

/**
 * Canonical labelling by individualisation-refinement.
 *
 * Each search node carries the stable colour refinement of the graph after
 * individualising a sequence of vertices. The target cell is the first
 * smallest non-singleton colour class. Leaves are discrete colourings, read as
 * labellings; the canonical form is the lexicographically least upper-triangle
 * adjacency bit string over all leaves. Automorphisms discovered at equal
 * leaves prune siblings in the same orbit of the pointwise stabiliser of the
 * current prefix. Intended for structured graphs up to a few hundred vertices.
 */

#include "errors.hpp"
#include "graph.hpp"
#include "partition.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace gmprod
{

inline constexpr std::size_t canonical_form_limit = 256;

struct CanonicalForm
{
  std::size_t n = 0;
  std::vector<std::uint64_t> bits; ///< upper triangle, row-major, first pair in the top bit of word 0
  Permutation labelling;           ///< relabel(g, labelling) has exactly these bits

  friend auto operator==(const CanonicalForm &a, const CanonicalForm &b) -> bool
  {
    return a.n == b.n && a.bits == b.bits;
  }
};

/// Upper-triangle bit string of relabel(g, labelling), packed so that word-wise comparison is lexicographic.
inline auto upper_triangle_bits(const Graph &g, const Permutation &labelling) -> std::vector<std::uint64_t>
{
  const auto n = g.size();
  auto inv = labelling.inverse();
  std::vector<std::uint64_t> bits((n * (n > 0 ? n - 1 : 0) / 2 + 63) / 64, 0);
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if (g.adjacent(inv(i), inv(j)))
        bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  return bits;
}

namespace detail
{

class CanonicalSearch
{
public:
  explicit CanonicalSearch(const Graph &g) : _g(g), _n(g.size()) {}

  auto run() -> CanonicalForm
  {
    std::vector<std::uint32_t> start(_n, 0);
    std::vector<Vertex> prefix;
    search(refine_colouring(_g, std::move(start)), prefix);
    CanonicalForm f;
    f.n = _n;
    f.bits = std::move(_best_bits);
    f.labelling = std::move(_best_labelling);
    return f;
  }

  auto automorphisms() const -> const std::vector<Permutation> & { return _automorphisms; }

private:
  auto search(const std::vector<std::uint32_t> &colours, std::vector<Vertex> &prefix) -> void
  {
    auto target = target_cell(colours);
    if (target.empty()) {
      leaf(colours);
      return;
    }

    std::vector<Vertex> explored;
    for (auto v : target) {
      if (! explored.empty() && shares_orbit(v, explored, prefix))
        continue;
      explored.push_back(v);
      prefix.push_back(v);
      search(refine_colouring(_g, individualise(colours, v)), prefix);
      prefix.pop_back();
    }
  }

  auto target_cell(const std::vector<std::uint32_t> &colours) const -> std::vector<Vertex>
  {
    std::vector<std::size_t> size(_n, 0);
    for (auto c : colours)
      ++size[c];
    std::size_t best_colour = _n, best_size = _n + 1;
    for (std::size_t c = 0; c < _n; ++c)
      if (size[c] > 1 && size[c] < best_size) {
        best_size = size[c];
        best_colour = c;
      }
    std::vector<Vertex> cell;
    if (best_colour == _n)
      return cell;
    for (Vertex v = 0; v < _n; ++v)
      if (colours[v] == best_colour)
        cell.push_back(v);
    return cell;
  }

  static auto individualise(const std::vector<std::uint32_t> &colours, Vertex v) -> std::vector<std::uint32_t>
  {
    auto c = colours[v];
    std::vector<std::uint32_t> out(colours.size());
    for (std::size_t w = 0; w < colours.size(); ++w)
      out[w] = colours[w] < c || w == v ? colours[w] : colours[w] + 1;
    return out;
  }

  /// True when v is in the orbit of an explored vertex under the known automorphisms fixing prefix.
  auto shares_orbit(Vertex v, const std::vector<Vertex> &explored, const std::vector<Vertex> &prefix) const
      -> bool
  {
    std::vector<Vertex> parent(_n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto &a : _automorphisms) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return a(p) == p; });
      if (! fixes)
        continue;
      any = true;
      for (Vertex x = 0; x < _n; ++x)
        parent[find(x)] = find(a(x));
    }
    if (! any)
      return false;
    auto root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; });
  }

  auto leaf(const std::vector<std::uint32_t> &colours) -> void
  {
    std::vector<Vertex> map(colours.begin(), colours.end());
    Permutation labelling(std::move(map));
    auto bits = upper_triangle_bits(_g, labelling);
    if (! _have_best || bits < _best_bits) {
      _have_best = true;
      _best_bits = std::move(bits);
      _best_labelling = std::move(labelling);
    }
    else if (bits == _best_bits) {
      // v -> vertex holding v's position in the best labelling
      _automorphisms.push_back(then(labelling, _best_labelling.inverse()));
    }
  }

  const Graph &_g;
  std::size_t _n;
  bool _have_best = false;
  std::vector<std::uint64_t> _best_bits;
  Permutation _best_labelling;
  std::vector<Permutation> _automorphisms;
};

} // namespace detail

inline auto canonical_form(const Graph &g) -> CanonicalForm
{
  if (g.size() > canonical_form_limit)
    throw SizeLimitError("canonical labelling is limited to " + std::to_string(canonical_form_limit) +
                         " vertices");
  if (g.size() == 0)
    return {0, {}, Permutation::identity(0)};
  return detail::CanonicalSearch(g).run();
}

struct IsomorphismResult
{
  bool isomorphic = false;
  std::optional<Permutation> witness; ///< relabel(g, *witness) == h when isomorphic

  explicit operator bool() const { return isomorphic; }
};

inline auto is_isomorphic(const Graph &g, const Graph &h) -> IsomorphismResult
{
  if (g.size() > canonical_form_limit || h.size() > canonical_form_limit)
    throw SizeLimitError("isomorphism testing is limited to " + std::to_string(canonical_form_limit) +
                         " vertices");
  if (g.size() != h.size() || g.edge_count() != h.edge_count())
    return {};
  auto fg = canonical_form(g);
  auto fh = canonical_form(h);
  if (fg != fh)
    return {};
  return {true, then(fg.labelling, fh.labelling.inverse())};
}

inline constexpr std::size_t max_clique_bound = 6;

/// min(clique number, bound) by bounded branching.
inline auto clique_number_upto(const Graph &g, std::size_t bound) -> std::size_t
{
  if (bound > max_clique_bound)
    throw InvalidArgument("clique bound must be at most " + std::to_string(max_clique_bound));
  const auto n = g.size();
  if (n == 0 || bound == 0)
    return 0;

  std::size_t best = 1;
  // candidates: vertices greater than the last chosen one and adjacent to all chosen
  auto extend = [&](auto &self, const std::vector<Vertex> &candidates, std::size_t depth) -> void {
    best = std::max(best, depth);
    if (best >= bound)
      return;
    for (std::size_t k = 0; k < candidates.size() && best < bound; ++k) {
      if (depth + (candidates.size() - k) <= best)
        return;
      std::vector<Vertex> next;
      for (std::size_t l = k + 1; l < candidates.size(); ++l)
        if (g.adjacent(candidates[k], candidates[l]))
          next.push_back(candidates[l]);
      self(self, next, depth + 1);
    }
  };
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  extend(extend, all, 0);
  return std::min(best, bound);
}

/// Number of 4-cliques through each vertex.
inline auto k4_counts_per_vertex(const Graph &g) -> std::vector<std::size_t>
{
  std::vector<std::size_t> counts(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    std::vector<Vertex> common;
    for (auto w : g.neighbours(v))
      if (w > v && g.adjacent(u, w))
        common.push_back(w);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.adjacent(common[i], common[j])) {
          ++counts[u];
          ++counts[v];
          ++counts[common[i]];
          ++counts[common[j]];
        }
  }
  return counts;
}

} // namespace gmprod

#endif // GMPROD_ISOMORPHISM_HPP_
