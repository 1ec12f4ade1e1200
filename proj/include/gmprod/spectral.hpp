#ifndef GMPROD_SPECTRAL_HPP_
#define GMPROD_SPECTRAL_HPP_

/**
 * Exact spectral certificates and distance-regularity.
 *
 * Cospectrality is decided through the characteristic polynomial reduced
 * modulo several primes above 2^30 (Hessenberg reduction over F_p, then the
 * standard Hessenberg determinant recurrence). An independent exact integer
 * route (Berkowitz, division free) is available for small graphs.
 */

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <future>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gmprod
{

using Prime = std::uint64_t;

/// The five smallest primes above 2^30.
inline const std::vector<Prime> &default_primes()
{
  static const std::vector<Prime> primes{1073741827, 1073741831, 1073741833, 1073741839, 1073741843};
  return primes;
}

inline constexpr Prime min_fingerprint_prime = Prime{1} << 30;
inline constexpr Prime max_fingerprint_prime = Prime{1} << 32;
inline constexpr std::size_t min_fingerprint_primes = 5;

namespace detail
{

inline auto is_prime(Prime p) -> bool
{
  if (p < 2)
    return false;
  for (Prime d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

inline auto pow_mod(Prime base, Prime e, Prime p) -> Prime
{
  Prime result = 1;
  base %= p;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline auto inv_mod(Prime a, Prime p) -> Prime { return pow_mod(a, p - 2, p); }

/// Characteristic polynomial det(xI - A) over F_p, low degree first.
inline auto char_poly_mod(const Graph &g, Prime p) -> std::vector<Prime>
{
  const std::size_t n = g.size();
  std::vector<Prime> h(n * n, 0);
  auto at = [&](std::size_t r, std::size_t c) -> Prime & { return h[r * n + c]; };
  for (auto [u, v] : g.edges()) {
    at(u, v) = 1;
    at(v, u) = 1;
  }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && at(pivot, j) == 0)
      ++pivot;
    if (pivot == n)
      continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(at(pivot, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r)
        std::swap(at(r, pivot), at(r, j + 1));
    }
    auto inv = inv_mod(at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0)
        continue;
      auto u = at(i, j) * inv % p;
      // row_i -= u * row_{j+1}
      for (std::size_t c = 0; c < n; ++c)
        if (at(j + 1, c))
          at(i, c) = (at(i, c) + (p - at(j + 1, c)) * u) % p;
      // col_{j+1} += u * col_i
      for (std::size_t r = 0; r < n; ++r)
        if (at(r, i))
          at(r, j + 1) = (at(r, j + 1) + at(r, i) * u) % p;
    }
  }

  // polys[k] = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Prime>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto &cur = polys[k];
    cur.assign(k + 1, 0);
    const auto &prev = polys[k - 1];
    auto diag = at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + (p - diag) * prev[d]) % p;
    }
    Prime sub = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub = sub * at(i + 1, i) % p;
      if (sub == 0)
        break;
      auto coef = sub * at(i, k - 1) % p;
      if (coef == 0)
        continue;
      const auto &earlier = polys[i];
      for (std::size_t d = 0; d < earlier.size(); ++d)
        cur[d] = (cur[d] + (p - coef) * earlier[d]) % p;
    }
  }
  return polys[n];
}

} // namespace detail

struct CharPolyFingerprint
{
  std::vector<Prime> primes;
  std::vector<std::vector<Prime>> residues; ///< per prime, coefficients low degree first

  auto degree() const -> std::size_t { return residues.empty() ? 0 : residues.front().size() - 1; }

  friend auto operator==(const CharPolyFingerprint &, const CharPolyFingerprint &) -> bool = default;
};

inline auto validate_primes(const std::vector<Prime> &primes) -> void
{
  if (primes.size() < min_fingerprint_primes)
    throw InvalidArgument("a fingerprint needs at least " + std::to_string(min_fingerprint_primes) +
                          " primes");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < min_fingerprint_prime)
      throw InvalidArgument("prime " + std::to_string(primes[i]) + " is below 2^30");
    if (primes[i] >= max_fingerprint_prime)
      throw InvalidArgument("prime " + std::to_string(primes[i]) + " is not below 2^32");
    if (! detail::is_prime(primes[i]))
      throw InvalidArgument(std::to_string(primes[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[j] == primes[i])
        throw InvalidArgument("prime " + std::to_string(primes[i]) + " listed twice");
  }
}

/// Per-prime characteristic polynomial residues; primes are processed concurrently.
inline auto char_poly_fingerprint(const Graph &g, const std::vector<Prime> &primes = default_primes())
    -> CharPolyFingerprint
{
  validate_primes(primes);
  std::vector<std::future<std::vector<Prime>>> jobs;
  for (auto p : primes)
    jobs.push_back(std::async(std::launch::async, [&g, p] { return detail::char_poly_mod(g, p); }));
  CharPolyFingerprint f;
  f.primes = primes;
  for (auto &j : jobs)
    f.residues.push_back(j.get());
  return f;
}

inline auto cospectral(const Graph &g, const Graph &h, const std::vector<Prime> &primes = default_primes())
    -> bool
{
  return g.size() == h.size() && char_poly_fingerprint(g, primes) == char_poly_fingerprint(h, primes);
}

// Text form: for each prime a line "p <prime>" followed by a line of residues, low degree first.
inline auto write_fingerprint(std::ostream &out, const CharPolyFingerprint &f) -> void
{
  for (std::size_t k = 0; k < f.primes.size(); ++k) {
    out << "p " << f.primes[k] << '\n';
    for (std::size_t d = 0; d < f.residues[k].size(); ++d)
      out << (d ? " " : "") << f.residues[k][d];
    out << '\n';
  }
}

inline auto read_fingerprint(std::istream &in) -> CharPolyFingerprint
{
  CharPolyFingerprint f;
  std::string line;
  std::size_t line_no = 0;
  bool want_residues = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line))
      continue;
    auto words = detail::split_words(line);
    if (! want_residues) {
      if (words.size() != 2 || words[0] != "p")
        throw FormatError(line_no, "expected 'p <prime>'");
      auto p = detail::parse_unsigned(words[1]);
      if (! p)
        throw FormatError(line_no, "malformed prime");
      f.primes.push_back(*p);
      want_residues = true;
    }
    else {
      std::vector<Prime> r;
      for (auto &w : words) {
        auto v = detail::parse_unsigned(w);
        if (! v || *v >= f.primes.back())
          throw FormatError(line_no, "malformed residue '" + w + "'");
        r.push_back(*v);
      }
      if (! f.residues.empty() && r.size() != f.residues.front().size())
        throw FormatError(line_no, "residue vectors differ in length");
      f.residues.push_back(std::move(r));
      want_residues = false;
    }
  }
  if (want_residues)
    throw FormatError(line_no, "missing residue line");
  return f;
}

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t exact_char_poly_limit = 32;

/// Exact integer det(xI - A), low degree first (Berkowitz; no division).
inline auto exact_char_poly_small(const Graph &g) -> std::vector<BigInt>
{
  const std::size_t n = g.size();
  if (n > exact_char_poly_limit)
    throw SizeLimitError("exact characteristic polynomial is limited to " +
                         std::to_string(exact_char_poly_limit) + " vertices");
  auto a = [&](std::size_t r, std::size_t c) -> BigInt { return g.adjacent(r, c) ? 1 : 0; };

  // Berkowitz: builds the polynomial of the leading (k+1)x(k+1) block from that of the k x k block,
  // with coefficients stored high degree first.
  std::vector<BigInt> poly{BigInt(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C with R = row k, C = column k
    // restricted to the leading k indices.
    std::vector<BigInt> col(k + 2);
    col[0] = 1;
    col[1] = -a(k, k);
    std::vector<BigInt> vec(k);
    for (std::size_t i = 0; i < k; ++i)
      vec[i] = a(i, k);
    for (std::size_t step = 0; step < k; ++step) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < k; ++i)
        dot += a(k, i) * vec[i];
      col[step + 2] = -dot;
      std::vector<BigInt> next(k, BigInt(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (g.adjacent(i, j))
            next[i] += vec[j];
      vec = std::move(next);
    }
    std::vector<BigInt> next_poly(k + 2, BigInt(0));
    for (std::size_t r = 0; r < k + 2; ++r)
      for (std::size_t c = 0; c <= r && c < poly.size(); ++c)
        next_poly[r] += col[r - c] * poly[c];
    poly = std::move(next_poly);
  }
  return {poly.rbegin(), poly.rend()};
}

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// All-pairs BFS distances; unreachable pairs hold the sentinel.
inline auto distance_matrix(const Graph &g) -> std::vector<std::vector<std::uint32_t>>
{
  const auto n = g.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    adj[v] = g.neighbours(v);
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, unreachable));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto &d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      for (auto w : adj[v])
        if (d[w] == unreachable) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

inline auto diameter(const Graph &g) -> std::uint32_t
{
  std::uint32_t d = 0;
  for (auto &row : distance_matrix(g))
    for (auto x : row)
      d = std::max(d, x);
  return d;
}

struct IntersectionArray
{
  std::size_t diameter = 0;
  std::vector<std::size_t> b; ///< b_0 .. b_{d-1}
  std::vector<std::size_t> c; ///< c_1 .. c_d

  friend auto operator==(const IntersectionArray &, const IntersectionArray &) -> bool = default;
};

inline auto to_string(const IntersectionArray &a) -> std::string
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < a.b.size(); ++i)
    out << (i ? "," : "") << a.b[i];
  out << ';';
  for (std::size_t i = 0; i < a.c.size(); ++i)
    out << (i ? "," : "") << a.c[i];
  out << '}';
  return out.str();
}

/// Why a graph was refused: disconnected, irregular, or two pairs at equal distance with different counts.
struct DistanceRegularityWitness
{
  enum class Kind
  {
    empty,
    disconnected,
    irregular,
    inconsistent,
  };

  Kind kind = Kind::empty;
  Vertex u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  std::size_t distance = 0;
  char which = 'c'; ///< 'c', 'a' or 'b'
  std::size_t count1 = 0, count2 = 0;
};

inline auto describe(const DistanceRegularityWitness &w) -> std::string
{
  std::ostringstream out;
  switch (w.kind) {
  case DistanceRegularityWitness::Kind::empty:
    return "graph has no vertices";
  case DistanceRegularityWitness::Kind::disconnected:
    out << "graph is disconnected: no path from " << w.u1 << " to " << w.v1;
    return out.str();
  case DistanceRegularityWitness::Kind::irregular:
    out << "graph is not regular: vertices " << w.u1 << " and " << w.u2 << " have degrees " << w.count1
        << " and " << w.count2;
    return out.str();
  case DistanceRegularityWitness::Kind::inconsistent:
    out << "pairs (" << w.u1 << "," << w.v1 << ") and (" << w.u2 << "," << w.v2 << ") at distance "
        << w.distance << " have " << w.which << "_" << w.distance << " = " << w.count1 << " and "
        << w.count2;
    return out.str();
  }
  return {};
}

struct IntersectionResult
{
  std::optional<IntersectionArray> array;
  std::optional<DistanceRegularityWitness> witness;

  explicit operator bool() const { return array.has_value(); }
};

/**
 * Intersection array of a distance-regular graph, found by checking that for
 * every pair (u, v) at distance i the numbers of neighbours of v at distance
 * i-1, i and i+1 from u are the same.
 */
inline auto intersection_array(const Graph &g) -> IntersectionResult
{
  using Kind = DistanceRegularityWitness::Kind;
  const auto n = g.size();
  if (n == 0)
    return {std::nullopt, DistanceRegularityWitness{Kind::empty}};
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != g.degree(0)) {
      DistanceRegularityWitness w{Kind::irregular};
      w.u1 = 0;
      w.u2 = v;
      w.count1 = g.degree(0);
      w.count2 = g.degree(v);
      return {std::nullopt, w};
    }
  auto dist = distance_matrix(g);
  for (Vertex v = 0; v < n; ++v)
    if (dist[0][v] == unreachable) {
      DistanceRegularityWitness w{Kind::disconnected};
      w.u1 = 0;
      w.v1 = v;
      return {std::nullopt, w};
    }

  std::size_t d = 0;
  for (auto &row : dist)
    for (auto x : row)
      d = std::max<std::size_t>(d, x);

  struct Seen
  {
    bool set = false;
    Vertex u = 0, v = 0;
    std::size_t c = 0, a = 0, b = 0;
  };
  std::vector<Seen> first(d + 1);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    adj[v] = g.neighbours(v);

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      std::size_t i = dist[u][v], c = 0, a = 0, b = 0;
      for (auto w : adj[v]) {
        auto dw = dist[u][w];
        if (dw + 1 == i)
          ++c;
        else if (dw == i)
          ++a;
        else
          ++b;
      }
      auto &s = first[i];
      if (! s.set) {
        s = {true, u, v, c, a, b};
        continue;
      }
      auto mismatch = [&](char which, std::size_t x, std::size_t y) {
        DistanceRegularityWitness w{Kind::inconsistent, s.u, s.v, u, v, i, which, x, y};
        return IntersectionResult{std::nullopt, w};
      };
      if (s.c != c)
        return mismatch('c', s.c, c);
      if (s.a != a)
        return mismatch('a', s.a, a);
      if (s.b != b)
        return mismatch('b', s.b, b);
    }

  IntersectionArray result;
  result.diameter = d;
  for (std::size_t i = 0; i < d; ++i)
    result.b.push_back(first[i].b);
  for (std::size_t i = 1; i <= d; ++i)
    result.c.push_back(first[i].c);
  return {result, std::nullopt};
}

} // namespace gmprod

#endif // GMPROD_SPECTRAL_HPP_
