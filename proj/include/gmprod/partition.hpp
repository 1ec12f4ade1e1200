#ifndef GMPROD_PARTITION_HPP_
#define GMPROD_PARTITION_HPP_

/**
 * Equitable partitions and Godsil-McKay switching.
 *
 * A GM partition {C_1..C_t, D} of a graph satisfies
 *   (i)  {C_1..C_t} is equitable on the graph with D deleted, and
 *   (ii) every x in D has 0, |C_i|/2 or |C_i| neighbours in each C_i.
 * Switching complements the edges between x and C_i whenever x has exactly
 * |C_i|/2 neighbours there. With the block-diagonal switching matrix Q
 * (2/|C_i| - delta inside each C_i, the identity on D) one has Q^2 = I and
 * A(switched) = Q A Q, hence the two graphs are cospectral.
 */

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmprod
{

class PartitionError : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr std::size_t no_cell = std::numeric_limits<std::size_t>::max();

namespace detail
{

/// Assigns each vertex its cell index (no_cell for vertices left over); rejects overlaps and empty cells.
inline auto index_cells(std::size_t n, const std::vector<std::vector<Vertex>> &cells)
    -> std::vector<std::size_t>
{
  std::vector<std::size_t> owner(n, no_cell);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty())
      throw PartitionError("cell " + std::to_string(i) + " is empty");
    for (auto v : cells[i]) {
      if (v >= n)
        throw PartitionError("vertex " + std::to_string(v) + " out of range");
      if (owner[v] != no_cell)
        throw PartitionError("vertex " + std::to_string(v) + " appears in two cells");
      owner[v] = i;
    }
  }
  return owner;
}

inline auto sorted(std::vector<Vertex> v) -> std::vector<Vertex>
{
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace detail

/// Ordered list of nonempty, disjoint cells covering 0..n-1. Each cell is kept sorted.
class Partition
{
public:
  Partition() = default;

  Partition(std::size_t n, std::vector<std::vector<Vertex>> cells) : _n(n)
  {
    _owner = detail::index_cells(n, cells);
    for (std::size_t v = 0; v < n; ++v)
      if (_owner[v] == no_cell)
        throw PartitionError("vertex " + std::to_string(v) + " is in no cell");
    for (auto &c : cells)
      _cells.push_back(detail::sorted(std::move(c)));
  }

  static auto discrete(std::size_t n) -> Partition
  {
    std::vector<std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n; ++v)
      cells.push_back({v});
    return Partition(n, std::move(cells));
  }

  static auto single_cell(std::size_t n) -> Partition
  {
    if (n == 0)
      return Partition(0, {});
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
      all[v] = v;
    return Partition(n, {std::move(all)});
  }

  auto vertex_count() const -> std::size_t { return _n; }
  auto cell_count() const -> std::size_t { return _cells.size(); }
  auto cells() const -> const std::vector<std::vector<Vertex>> & { return _cells; }
  auto cell(std::size_t i) const -> const std::vector<Vertex> & { return _cells[i]; }
  auto cell_of(Vertex v) const -> std::size_t { return _owner[v]; }

  friend auto operator==(const Partition &a, const Partition &b) -> bool
  {
    return a._n == b._n && a._cells == b._cells;
  }

private:
  std::size_t _n = 0;
  std::vector<std::vector<Vertex>> _cells;
  std::vector<std::size_t> _owner;
};

/// Cells C_1..C_t plus the GM cell D (possibly empty); together they cover 0..n-1.
class GMPartition
{
public:
  GMPartition() = default;

  GMPartition(std::size_t n, std::vector<std::vector<Vertex>> cells, std::vector<Vertex> gm_cell)
  : _n(n)
  {
    auto all = cells;
    if (! gm_cell.empty())
      all.push_back(gm_cell);
    _owner = detail::index_cells(n, all);
    for (std::size_t v = 0; v < n; ++v)
      if (_owner[v] == no_cell)
        throw PartitionError("vertex " + std::to_string(v) + " is in no cell");
    for (auto v : gm_cell)
      _owner[v] = no_cell;
    for (auto &c : cells)
      _cells.push_back(detail::sorted(std::move(c)));
    _gm_cell = detail::sorted(std::move(gm_cell));
  }

  auto vertex_count() const -> std::size_t { return _n; }
  auto cell_count() const -> std::size_t { return _cells.size(); }
  auto cells() const -> const std::vector<std::vector<Vertex>> & { return _cells; }
  auto cell(std::size_t i) const -> const std::vector<Vertex> & { return _cells[i]; }
  auto gm_cell() const -> const std::vector<Vertex> & { return _gm_cell; }

  /// Index of v's cell, or no_cell when v lies in D.
  auto cell_of(Vertex v) const -> std::size_t { return _owner[v]; }
  auto in_gm_cell(Vertex v) const -> bool { return _owner[v] == no_cell; }

  /// Vertices of C_1 u ... u C_t in increasing order.
  auto non_gm_vertices() const -> std::vector<Vertex>
  {
    std::vector<Vertex> result;
    for (Vertex v = 0; v < _n; ++v)
      if (_owner[v] != no_cell)
        result.push_back(v);
    return result;
  }

  friend auto operator==(const GMPartition &a, const GMPartition &b) -> bool
  {
    return a._n == b._n && a._cells == b._cells && a._gm_cell == b._gm_cell;
  }

private:
  std::size_t _n = 0;
  std::vector<std::vector<Vertex>> _cells;
  std::vector<Vertex> _gm_cell;
  std::vector<std::size_t> _owner;
};

/// S[x][i] = 1 iff x is in C_i.
inline auto characteristic_matrix(const Partition &p, std::size_t n) -> IntMatrix
{
  if (p.vertex_count() != n)
    throw PartitionError("partition covers " + std::to_string(p.vertex_count()) +
                         " vertices, expected " + std::to_string(n));
  IntMatrix s(n, p.cell_count());
  for (std::size_t i = 0; i < p.cell_count(); ++i)
    for (auto v : p.cell(i))
      s(v, i) = 1;
  return s;
}

/// Characteristic matrix of {C_1..C_t}, rows indexed by non_gm_vertices().
inline auto characteristic_matrix(const GMPartition &p) -> IntMatrix
{
  auto rows = p.non_gm_vertices();
  IntMatrix s(rows.size(), p.cell_count());
  for (std::size_t r = 0; r < rows.size(); ++r)
    s(r, p.cell_of(rows[r])) = 1;
  return s;
}

/// M[i][j] = |C_j|.
inline auto cell_size_matrix(const std::vector<std::vector<Vertex>> &cells) -> IntMatrix
{
  IntMatrix m(cells.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      m(i, j) = static_cast<std::int64_t>(cells[j].size());
  return m;
}

namespace detail
{

using Mask = std::vector<std::uint64_t>;

inline auto cell_mask(const Graph &g, const std::vector<Vertex> &cell) -> Mask
{
  Mask m(g.words_per_row(), 0);
  for (auto v : cell)
    m[v / bits_per_word] |= std::uint64_t{1} << (v % bits_per_word);
  return m;
}

inline auto count_in(const Graph &g, Vertex v, const Mask &m) -> std::size_t
{
  std::size_t c = 0;
  auto r = g.row(v);
  for (std::size_t k = 0; k < r.size(); ++k)
    c += static_cast<std::size_t>(std::popcount(r[k] & m[k]));
  return c;
}

/// counts[v][j] = |N(v) n cells[j]| for every vertex v.
inline auto neighbour_counts(const Graph &g, const std::vector<std::vector<Vertex>> &cells)
    -> std::vector<std::vector<std::size_t>>
{
  std::vector<Mask> masks;
  for (auto &c : cells)
    masks.push_back(cell_mask(g, c));
  std::vector<std::vector<std::size_t>> counts(g.size(), std::vector<std::size_t>(cells.size()));
  for (Vertex v = 0; v < g.size(); ++v)
    for (std::size_t j = 0; j < cells.size(); ++j)
      counts[v][j] = count_in(g, v, masks[j]);
  return counts;
}

inline constexpr std::size_t matrix_crosscheck_limit = 1024;

} // namespace detail

/// Two vertices of one cell that see different numbers of neighbours in another.
struct EquitableWitness
{
  std::size_t cell = 0, target_cell = 0;
  Vertex first = 0, second = 0;
  std::size_t first_count = 0, second_count = 0;
};

inline auto describe(const EquitableWitness &w) -> std::string
{
  std::ostringstream out;
  out << "vertices " << w.first << " and " << w.second << " of cell " << w.cell << " have "
      << w.first_count << " and " << w.second_count << " neighbours in cell " << w.target_cell;
  return out.str();
}

struct EquitableResult
{
  std::optional<IntMatrix> quotient;
  std::optional<EquitableWitness> witness;

  explicit operator bool() const { return quotient.has_value(); }
};

namespace detail
{

inline auto equitable_quotient(const std::vector<std::vector<Vertex>> &cells,
                               const std::vector<std::vector<std::size_t>> &counts) -> EquitableResult
{
  const auto t = cells.size();
  IntMatrix r(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    auto lead = cells[i].front();
    for (std::size_t j = 0; j < t; ++j) {
      r(i, j) = static_cast<std::int64_t>(counts[lead][j]);
      for (auto v : cells[i])
        if (counts[v][j] != counts[lead][j])
          return {std::nullopt, EquitableWitness{i, j, lead, v, counts[lead][j], counts[v][j]}};
    }
  }
  return {r, std::nullopt};
}

} // namespace detail

/// Returns the quotient matrix R (with A S = S R checked) or a witness of failure.
inline auto is_equitable(const Graph &g, const Partition &p) -> EquitableResult
{
  if (p.vertex_count() != g.size())
    throw PartitionError("partition does not cover the graph's vertex set");
  auto result = detail::equitable_quotient(p.cells(), detail::neighbour_counts(g, p.cells()));
  if (result && g.size() <= detail::matrix_crosscheck_limit) {
    auto s = characteristic_matrix(p, g.size());
    if (adjacency_matrix(g) * s != s * *result.quotient)
      throw std::logic_error("is_equitable: A S = S R fails although neighbour counts are constant");
  }
  return result;
}

/**
 * Colour refinement to the stable colouring below the given one.
 *
 * colours must be dense in 0..k-1. New colours are ordered by (old colour,
 * sorted multiset of neighbour colours), so the result depends only on the
 * isomorphism class of (graph, colouring), not on vertex names.
 */
inline auto refine_colouring(const Graph &g, std::vector<std::uint32_t> colours)
    -> std::vector<std::uint32_t>
{
  const auto n = g.size();
  if (colours.size() != n)
    throw InvalidArgument("colouring length does not match graph order");
  std::size_t classes = 0;
  for (auto c : colours)
    classes = std::max<std::size_t>(classes, c + 1);

  std::vector<std::vector<std::uint32_t>> signature(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto &sig = signature[v];
      sig.clear();
      for (auto w : g.neighbours(v))
        sig.push_back(colours[w]);
      std::sort(sig.begin(), sig.end());
    }
    for (Vertex v = 0; v < n; ++v)
      order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      if (colours[a] != colours[b])
        return colours[a] < colours[b];
      return signature[a] < signature[b];
    });

    std::vector<std::uint32_t> next(n);
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) {
        auto a = order[k - 1], b = order[k];
        if (colours[a] != colours[b] || signature[a] != signature[b])
          ++c;
      }
      next[order[k]] = c;
    }
    std::size_t next_classes = n == 0 ? 0 : c + 1;
    colours = std::move(next);
    if (next_classes == classes)
      return colours;
    classes = next_classes;
  }
}

inline auto colouring_to_partition(const std::vector<std::uint32_t> &colours) -> Partition
{
  std::size_t classes = 0;
  for (auto c : colours)
    classes = std::max<std::size_t>(classes, c + 1);
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex v = 0; v < colours.size(); ++v)
    cells[colours[v]].push_back(v);
  return Partition(colours.size(), std::move(cells));
}

/// Coarsest equitable partition refining seed.
inline auto coarsest_equitable_partition(const Graph &g, const Partition &seed) -> Partition
{
  if (seed.vertex_count() != g.size())
    throw PartitionError("seed partition does not cover the graph's vertex set");
  std::vector<std::uint32_t> colours(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    colours[v] = static_cast<std::uint32_t>(seed.cell_of(v));
  return colouring_to_partition(refine_colouring(g, std::move(colours)));
}

/// First reason a GM partition is rejected.
struct GMWitness
{
  enum class Kind
  {
    not_equitable,   ///< condition (i): see `equitable`
    bad_half_count,  ///< condition (ii): vertex in D with a forbidden count
  };

  Kind kind = Kind::not_equitable;
  EquitableWitness equitable;
  Vertex vertex = 0;
  std::size_t cell = 0, count = 0, cell_size = 0;
};

inline auto describe(const GMWitness &w) -> std::string
{
  if (w.kind == GMWitness::Kind::not_equitable)
    return "condition (i) fails: " + describe(w.equitable);
  std::ostringstream out;
  out << "condition (ii) fails: vertex " << w.vertex << " of the GM cell has " << w.count
      << " neighbours in cell " << w.cell << " of size " << w.cell_size;
  return out.str();
}

struct GMReport
{
  bool equitable = false;              ///< condition (i)
  bool half_counts = false;            ///< condition (ii)
  std::optional<IntMatrix> quotient;   ///< R with A_C S = S R, when (i) holds
  IntMatrix gm_counts;                 ///< A_D S, rows in gm_cell() order
  std::vector<std::pair<Vertex, std::size_t>> flips; ///< (x, i) with exactly |C_i|/2 neighbours
  std::optional<GMWitness> witness;
  bool matrix_checked = false;         ///< the matrix formulation was also evaluated

  auto valid() const -> bool { return equitable && half_counts; }
};

/**
 * Checks both GM conditions combinatorially and, for graphs up to 1024
 * vertices, through the matrix identities A_C S = S R and the entries of
 * A_D S. A disagreement between the two is an internal error.
 */
inline auto check_gm(const Graph &g, const GMPartition &p) -> GMReport
{
  if (p.vertex_count() != g.size())
    throw PartitionError("partition covers " + std::to_string(p.vertex_count()) +
                         " vertices but the graph has " + std::to_string(g.size()));
  GMReport report;
  auto counts = detail::neighbour_counts(g, p.cells());

  auto eq = detail::equitable_quotient(p.cells(), counts);
  report.equitable = eq.quotient.has_value();
  report.quotient = eq.quotient;
  if (eq.witness)
    report.witness = GMWitness{GMWitness::Kind::not_equitable, *eq.witness, 0, 0, 0, 0};

  const auto &gm = p.gm_cell();
  report.gm_counts = IntMatrix(gm.size(), p.cell_count());
  report.half_counts = true;
  for (std::size_t r = 0; r < gm.size(); ++r) {
    auto x = gm[r];
    for (std::size_t i = 0; i < p.cell_count(); ++i) {
      auto twice = 2 * counts[x][i];
      auto size = p.cell(i).size();
      report.gm_counts(r, i) = static_cast<std::int64_t>(counts[x][i]);
      if (twice == size)
        report.flips.emplace_back(x, i);
      else if (twice != 0 && twice != 2 * size && report.half_counts) {
        report.half_counts = false;
        if (! report.witness)
          report.witness = GMWitness{GMWitness::Kind::bad_half_count, {}, x, i, counts[x][i], size};
      }
    }
  }

  if (g.size() <= detail::matrix_crosscheck_limit) {
    report.matrix_checked = true;
    auto a = adjacency_matrix(g);
    auto c_rows = p.non_gm_vertices();
    auto s = characteristic_matrix(p);
    auto a_cs = a.submatrix(c_rows, c_rows) * s;
    auto a_ds = a.submatrix(gm, c_rows) * s;
    bool matrix_equitable = true;
    if (report.quotient)
      matrix_equitable = a_cs == s * *report.quotient;
    else {
      // An R with A_C S = S R exists iff A_C S is constant on the rows of each cell.
      std::vector<std::size_t> lead_row(p.cell_count(), no_cell);
      for (std::size_t r = 0; r < c_rows.size(); ++r) {
        auto i = p.cell_of(c_rows[r]);
        if (lead_row[i] == no_cell)
          lead_row[i] = r;
        for (std::size_t j = 0; j < p.cell_count(); ++j)
          if (a_cs(r, j) != a_cs(lead_row[i], j))
            matrix_equitable = false;
      }
    }
    bool matrix_half = true;
    for (std::size_t r = 0; r < gm.size(); ++r)
      for (std::size_t i = 0; i < p.cell_count(); ++i) {
        auto twice = 2 * a_ds(r, i);
        auto size = static_cast<std::int64_t>(p.cell(i).size());
        if (twice != 0 && twice != size && twice != 2 * size)
          matrix_half = false;
      }
    if (matrix_equitable != report.equitable || matrix_half != report.half_counts ||
        a_ds != report.gm_counts)
      throw std::logic_error("check_gm: combinatorial and matrix formulations disagree");
  }
  return report;
}

/// Raised when switching is requested on a partition that fails a GM condition.
class GMViolation : public Error
{
public:
  explicit GMViolation(GMWitness w) : Error("not a Godsil-McKay partition: " + describe(w)), _witness(w) {}

  auto witness() const -> const GMWitness & { return _witness; }

private:
  GMWitness _witness;
};

/// Godsil-McKay switching; refuses partitions that fail either condition.
inline auto gm_switch(const Graph &g, const GMPartition &p) -> Graph
{
  auto report = check_gm(g, p);
  if (! report.valid())
    throw GMViolation(*report.witness);
  GraphBuilder b(g);
  for (auto [x, i] : report.flips)
    for (auto y : p.cell(i))
      b.toggle_edge(x, y);
  return std::move(b).build();
}

inline constexpr std::size_t switching_matrix_limit = 256;

/// Exact rational switching matrix Q; only materialised up to 256 vertices.
inline auto switching_matrix(const GMPartition &p, std::size_t n) -> RationalMatrix
{
  if (p.vertex_count() != n)
    throw PartitionError("partition does not cover 0.." + std::to_string(n) + "-1");
  if (n > switching_matrix_limit)
    throw SizeLimitError("switching matrix is only materialised up to " +
                         std::to_string(switching_matrix_limit) + " vertices");
  RationalMatrix q(n, n);
  for (const auto &c : p.cells()) {
    Rational share(2, static_cast<long>(c.size()));
    for (auto x : c)
      for (auto y : c)
        q(x, y) = x == y ? share - 1 : share;
  }
  for (auto x : p.gm_cell())
    q(x, x) = 1;
  return q;
}

namespace detail
{

inline auto lift_cells(const std::vector<std::vector<Vertex>> &cells, std::size_t factor_size)
    -> std::vector<std::vector<Vertex>>
{
  std::vector<std::vector<Vertex>> lifted;
  for (const auto &c : cells)
    for (Vertex w = 0; w < factor_size; ++w) {
      std::vector<Vertex> cell;
      for (auto x : c)
        cell.push_back(static_cast<Vertex>(x * factor_size + w));
      lifted.push_back(std::move(cell));
    }
  return lifted;
}

inline auto checked_product_order(std::size_t n, std::size_t factor_size) -> std::size_t
{
  if (factor_size != 0 && n > max_vertices / factor_size)
    throw SizeLimitError("lifted partition exceeds the vertex cap");
  return n * factor_size;
}

} // namespace detail

/// Cells C_i x {w}, ordered by i then w, so the characteristic matrix is S (x) I.
inline auto lift_equitable(const Partition &p, std::size_t factor_size) -> Partition
{
  auto n = detail::checked_product_order(p.vertex_count(), factor_size);
  return Partition(n, detail::lift_cells(p.cells(), factor_size));
}

inline auto lift_equitable(const Partition &p, const Graph &factor) -> Partition
{
  return lift_equitable(p, factor.size());
}

/// {C_i x {w}} with GM cell D x V(factor).
inline auto lift_gm(const GMPartition &p, std::size_t factor_size) -> GMPartition
{
  auto n = detail::checked_product_order(p.vertex_count(), factor_size);
  std::vector<Vertex> gm;
  for (auto x : p.gm_cell())
    for (Vertex w = 0; w < factor_size; ++w)
      gm.push_back(static_cast<Vertex>(x * factor_size + w));
  return GMPartition(n, detail::lift_cells(p.cells(), factor_size), std::move(gm));
}

inline auto lift_gm(const GMPartition &p, const Graph &factor) -> GMPartition
{
  return lift_gm(p, factor.size());
}

namespace detail
{

inline auto image_of(const std::vector<Vertex> &cell, const Permutation &perm) -> std::vector<Vertex>
{
  std::vector<Vertex> out;
  for (auto v : cell)
    out.push_back(perm(v));
  return out;
}

} // namespace detail

inline auto transport(const Partition &p, const Permutation &perm) -> Partition
{
  if (perm.size() != p.vertex_count())
    throw InvalidArgument("permutation length does not match partition");
  std::vector<std::vector<Vertex>> cells;
  for (const auto &c : p.cells())
    cells.push_back(detail::image_of(c, perm));
  return Partition(p.vertex_count(), std::move(cells));
}

/// Image of p under perm; switching commutes with relabelling along it.
inline auto transport_gm(const GMPartition &p, const Permutation &perm) -> GMPartition
{
  if (perm.size() != p.vertex_count())
    throw InvalidArgument("permutation length does not match partition");
  std::vector<std::vector<Vertex>> cells;
  for (const auto &c : p.cells())
    cells.push_back(detail::image_of(c, perm));
  return GMPartition(p.vertex_count(), std::move(cells), detail::image_of(p.gm_cell(), perm));
}

// Partition text format:
//   cell <v1> <v2> ...      one line per cell, in cell order
//   gm_cell <v1> ...        optional, at most once, after the cells

inline auto write_partition(std::ostream &out, const GMPartition &p) -> void
{
  for (const auto &c : p.cells()) {
    out << "cell";
    for (auto v : c)
      out << ' ' << v;
    out << '\n';
  }
  if (! p.gm_cell().empty()) {
    out << "gm_cell";
    for (auto v : p.gm_cell())
      out << ' ' << v;
    out << '\n';
  }
}

inline auto write_partition(std::ostream &out, const Partition &p) -> void
{
  write_partition(out, GMPartition(p.vertex_count(), p.cells(), {}));
}

/// Reads a partition of 0..n-1; overlaps, gaps and empty cells are reported with a line number.
inline auto read_partition(std::istream &in, std::size_t n) -> GMPartition
{
  std::vector<std::vector<Vertex>> cells;
  std::optional<std::vector<Vertex>> gm;
  std::vector<std::size_t> seen_on(n, 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line))
      continue;
    auto words = detail::split_words(line);
    bool is_gm = words[0] == "gm_cell";
    if (! is_gm && words[0] != "cell")
      throw FormatError(line_no, "expected 'cell' or 'gm_cell'");
    if (is_gm && gm)
      throw FormatError(line_no, "repeated gm_cell line");
    if (! is_gm && gm)
      throw FormatError(line_no, "cell line after gm_cell");
    if (! is_gm && words.size() == 1)
      throw FormatError(line_no, "empty cell");
    std::vector<Vertex> members;
    for (std::size_t k = 1; k < words.size(); ++k) {
      auto v = detail::parse_unsigned(words[k]);
      if (! v)
        throw FormatError(line_no, "malformed vertex '" + words[k] + "'");
      if (*v >= n)
        throw FormatError(line_no, "vertex " + words[k] + " out of range");
      if (seen_on[*v])
        throw FormatError(line_no, "vertex " + words[k] + " already listed on line " +
                                       std::to_string(seen_on[*v]));
      seen_on[*v] = line_no;
      members.push_back(static_cast<Vertex>(*v));
    }
    if (is_gm)
      gm = std::move(members);
    else
      cells.push_back(std::move(members));
  }
  for (Vertex v = 0; v < n; ++v)
    if (! seen_on[v])
      throw FormatError(line_no, "vertex " + std::to_string(v) + " is in no cell");
  return GMPartition(n, std::move(cells), gm.value_or(std::vector<Vertex>{}));
}

inline auto load_partition(const std::string &path, std::size_t n) -> GMPartition
{
  auto in = detail::open_for_reading(path);
  return read_partition(in, n);
}

inline auto save_partition(const std::string &path, const GMPartition &p) -> void
{
  auto out = detail::open_for_writing(path);
  write_partition(out, p);
}

} // namespace gmprod

#endif // GMPROD_PARTITION_HPP_
