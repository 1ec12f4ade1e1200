#ifndef GMPROD_CONSTRUCTIONS_HPP_
#define GMPROD_CONSTRUCTIONS_HPP_

/**
 * Hamming, Shrikhande and Doob graphs, and Doob graphs obtained from Hamming
 * graphs by repeated Godsil-McKay switching.
 *
 * All iterated products are left-associated Cartesian products under the
 * row-major encoding, so H(a+b,4) is literally H(a,4) x H(b,4) and similarly
 * for Doob graphs; no relabelling is needed for associativity.
 */

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "partition.hpp"
#include "product.hpp"
#include "spectral.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace gmprod
{

namespace detail
{

inline auto checked_power(std::size_t base, std::size_t exponent) -> std::size_t
{
  std::size_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > max_vertices / base)
      throw SizeLimitError(std::to_string(base) + "^" + std::to_string(exponent) +
                           " vertices exceeds the cap of " + std::to_string(max_vertices));
    result *= base;
  }
  return result;
}

} // namespace detail

/// H(d,q) = K_q x ... x K_q (d factors); H(0,q) = K_1.
inline auto hamming(std::size_t d, std::size_t q) -> Graph
{
  if (q == 0)
    throw InvalidArgument("Hamming graph alphabet must be nonempty");
  detail::checked_power(q, d);
  auto g = complete_graph(1);
  auto clique = complete_graph(q);
  for (std::size_t k = 0; k < d; ++k)
    g = cartesian_product(g, clique);
  return g;
}

/// {C, D} on H(2,4) with C = {(x,x)} = {0, 5, 10, 15} and D the other twelve vertices.
inline auto diagonal_gm_partition_h24() -> GMPartition
{
  std::vector<Vertex> diagonal, rest;
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 0; y < 4; ++y)
      (x == y ? diagonal : rest).push_back(x * 4 + y);
  return GMPartition(16, {diagonal}, rest);
}

inline auto shrikhande() -> Graph
{
  return gm_switch(hamming(2, 4), diagonal_gm_partition_h24());
}

/// D(m,n) = Sh x ... x Sh x K_4 x ... x K_4, Shrikhande factors first.
inline auto doob(std::size_t m, std::size_t n) -> Graph
{
  detail::checked_power(4, 2 * m + n);
  auto g = complete_graph(1);
  if (m > 0) {
    auto sh = shrikhande();
    for (std::size_t k = 0; k < m; ++k)
      g = cartesian_product(g, sh);
  }
  auto k4 = complete_graph(4);
  for (std::size_t k = 0; k < n; ++k)
    g = cartesian_product(g, k4);
  return g;
}

struct SwitchingStep
{
  GMPartition partition;
  Graph result;
};

struct SwitchingCertificate
{
  std::size_t m = 0, n = 0;
  Graph base;                     ///< H(2m+n, 4)
  std::vector<SwitchingStep> steps;
  Permutation final_perm;         ///< relabel(last result, final_perm) == target
  Graph target;                   ///< D(m, n)

  auto last() const -> const Graph & { return steps.empty() ? base : steps.back().result; }
};

/**
 * Builds the switching chain H(2m+n,4) -> ... -> (a relabelling of) D(m,n).
 *
 * m = 1: lift the diagonal partition of H(2,4) over H(n,4); switching
 * H(n+2,4) = H(2,4) x H(n,4) gives Sh x H(n,4) = D(1,n) exactly.
 *
 * m > 1: the chain for (m-1, n+2) ends in a graph G with
 * relabel(G, s) = D(m-1, n+2). Rotating the trailing H(2,4) block to the
 * front turns that into X = H(2,4) x D(m-1, n); switching X on the diagonal
 * partition lifted over D(m-1, n) gives Sh x D(m-1, n) = D(m, n). The lifted
 * partition is carried back onto G's labelling and appended as step m.
 */
inline auto doob_via_switching(std::size_t m, std::size_t n) -> SwitchingCertificate
{
  if (m == 0)
    throw InvalidArgument("doob_via_switching needs m >= 1");
  detail::checked_power(4, 2 * m + n);

  if (m == 1) {
    SwitchingCertificate cert;
    cert.m = 1;
    cert.n = n;
    cert.base = hamming(n + 2, 4);
    auto lifted = lift_gm(diagonal_gm_partition_h24(), detail::checked_power(4, n));
    auto switched = gm_switch(cert.base, lifted);
    cert.steps.push_back({std::move(lifted), std::move(switched)});
    cert.final_perm = Permutation::identity(cert.base.size());
    cert.target = doob(1, n);
    return cert;
  }

  auto cert = doob_via_switching(m - 1, n + 2);

  // Digit radices of H(2,4) x D(m-1,n); moving the first two to the end yields D(m-1,n+2).
  std::vector<std::size_t> radices{4, 4};
  radices.insert(radices.end(), m - 1, 16);
  radices.insert(radices.end(), n, 4);
  auto rotation = factor_rotation_permutation(radices, 2);

  // relabel(last, to_front) == H(2,4) x D(m-1,n)
  auto to_front = then(cert.final_perm, rotation.inverse());
  auto rest = detail::checked_power(16, m - 1) * detail::checked_power(4, n);
  auto lifted = lift_gm(diagonal_gm_partition_h24(), rest);
  auto step_partition = transport_gm(lifted, to_front.inverse());
  auto switched = gm_switch(cert.last(), step_partition);

  cert.m = m;
  cert.n = n;
  cert.steps.push_back({std::move(step_partition), std::move(switched)});
  cert.final_perm = std::move(to_front);
  cert.target = doob(m, n);
  return cert;
}

struct CertificateReport
{
  std::vector<std::string> failures;
  std::size_t steps_checked = 0;
  bool chain_cospectral = true;
  bool final_matches = false;

  auto valid() const -> bool { return failures.empty(); }
};

/**
 * Independent check of a certificate: recomputes the base and target graphs,
 * re-runs check_gm and the switch at every step, compares fingerprints along
 * the chain with the base, and relabels the last graph onto the target.
 */
inline auto validate_certificate(const SwitchingCertificate &cert) -> CertificateReport
{
  CertificateReport report;
  auto fail = [&](std::string why) { report.failures.push_back(std::move(why)); };

  if (cert.m == 0) {
    fail("certificate has m = 0");
    return report;
  }
  if (cert.steps.size() != cert.m)
    fail("expected " + std::to_string(cert.m) + " switching steps, found " + std::to_string(cert.steps.size()));
  if (cert.base != hamming(2 * cert.m + cert.n, 4))
    fail("base graph is not H(" + std::to_string(2 * cert.m + cert.n) + ",4)");
  if (cert.target != doob(cert.m, cert.n))
    fail("target graph is not D(" + std::to_string(cert.m) + "," + std::to_string(cert.n) + ")");

  auto base_print = char_poly_fingerprint(cert.base);
  const Graph *previous = &cert.base;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto &step = cert.steps[k];
    auto label = "step " + std::to_string(k + 1) + ": ";
    if (step.partition.vertex_count() != previous->size()) {
      fail(label + "partition size does not match the graph");
      return report;
    }
    auto check = check_gm(*previous, step.partition);
    if (! check.valid()) {
      fail(label + describe(*check.witness));
      return report;
    }
    if (gm_switch(*previous, step.partition) != step.result)
      fail(label + "stored graph differs from the switched graph");
    if (char_poly_fingerprint(step.result) != base_print) {
      report.chain_cospectral = false;
      fail(label + "graph is not cospectral with the base");
    }
    ++report.steps_checked;
    previous = &step.result;
  }

  if (cert.final_perm.size() != previous->size())
    fail("final permutation has the wrong length");
  else {
    report.final_matches = relabel(*previous, cert.final_perm) == cert.target;
    if (! report.final_matches)
      fail("relabelled final graph differs from the target");
  }
  return report;
}

// Certificate directory layout:
//   certificate.txt            "m <m>" and "n <n>" lines
//   base.graph, target.graph
//   step<k>.partition, step<k>.graph   for k = 1..m
//   final_perm.txt

inline auto save_certificate(const std::filesystem::path &dir, const SwitchingCertificate &cert) -> void
{
  std::filesystem::create_directories(dir);
  {
    auto out = detail::open_for_writing((dir / "certificate.txt").string());
    out << "m " << cert.m << "\nn " << cert.n << '\n';
  }
  save_graph((dir / "base.graph").string(), cert.base);
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    auto stem = "step" + std::to_string(k + 1);
    save_partition((dir / (stem + ".partition")).string(), cert.steps[k].partition);
    save_graph((dir / (stem + ".graph")).string(), cert.steps[k].result);
  }
  save_permutation((dir / "final_perm.txt").string(), cert.final_perm);
  save_graph((dir / "target.graph").string(), cert.target);
}

inline auto load_certificate(const std::filesystem::path &dir) -> SwitchingCertificate
{
  SwitchingCertificate cert;
  {
    auto in = detail::open_for_reading((dir / "certificate.txt").string());
    std::string key;
    std::size_t value = 0;
    bool have_m = false, have_n = false;
    std::size_t line_no = 0;
    while (in >> key >> value) {
      ++line_no;
      if (key == "m") {
        cert.m = value;
        have_m = true;
      }
      else if (key == "n") {
        cert.n = value;
        have_n = true;
      }
      else
        throw FormatError(line_no, "unknown certificate key '" + key + "'");
    }
    if (! have_m || ! have_n)
      throw FormatError(line_no, "certificate.txt needs 'm' and 'n'");
  }
  cert.base = load_graph((dir / "base.graph").string());
  for (std::size_t k = 1; k <= cert.m; ++k) {
    auto stem = "step" + std::to_string(k);
    auto g = load_graph((dir / (stem + ".graph")).string());
    auto p = load_partition((dir / (stem + ".partition")).string(), g.size());
    cert.steps.push_back({std::move(p), std::move(g)});
  }
  cert.final_perm = load_permutation((dir / "final_perm.txt").string());
  cert.target = load_graph((dir / "target.graph").string());
  return cert;
}

} // namespace gmprod

#endif // GMPROD_CONSTRUCTIONS_HPP_
