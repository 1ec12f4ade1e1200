#ifndef GMPROD_COMPATIBILITY_HPP_
#define GMPROD_COMPATIBILITY_HPP_

// Switching commutes with unified products: for a GM partition pi of G and
// any graph H, the lifted partition (C_i x {w}, D x V(H)) is a GM partition of
// G * H and switching it reproduces (sw G) * H exactly under the row-major
// encoding, with switching matrix Q (x) I.

#include "graph.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "product.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

namespace gmprod
{

struct CompatibilityReport
{
  bool lifted_valid = false;      ///< lifted partition passes check_gm on G * H
  bool identity_holds = false;    ///< (sw G) * H == sw(G * H) bit for bit
  bool row_values_hold = false;   ///< every A_D (S (x) I) entry matches its predicted value
  bool lifted_flips_empty = false;
  std::optional<bool> kron_switching_matrix; ///< Q_lifted == Q (x) I, when small enough to materialise
  std::string failure;

  auto ok() const -> bool
  {
    return lifted_valid && identity_holds && row_values_hold && kron_switching_matrix.value_or(true);
  }
};

/**
 * Predicted count of neighbours that (x, w) in D x V(H) has in C_l x {w'}:
 * with j the relation class of (w, w') in H and c = |N(x) n C_l|,
 * it is s_2j |C_l|, (s_1j + s_2j) |C_l| / 2 or s_1j |C_l| for c = 0, |C_l|/2, |C_l|.
 * Returned doubled to stay integral.
 */
inline auto predicted_twice_count(const ProductType &t, int j, std::size_t base_count, std::size_t cell_size)
    -> std::size_t
{
  if (base_count == 0)
    return 2 * t(2, j) * cell_size;
  if (2 * base_count == cell_size)
    return (t(1, j) + t(2, j)) * cell_size;
  return 2 * t(1, j) * cell_size;
}

inline auto check_switching_compatibility(const Graph &g, const GMPartition &pi, const Graph &h,
                                          const ProductType &t) -> CompatibilityReport
{
  CompatibilityReport report;
  auto base_check = check_gm(g, pi);
  if (! base_check.valid()) {
    report.failure = "base partition is not a GM partition: " + describe(*base_check.witness);
    return report;
  }

  auto prod = product(g, h, t);
  auto lifted = lift_gm(pi, h);
  auto lifted_check = check_gm(prod, lifted);
  report.lifted_valid = lifted_check.valid();
  if (! report.lifted_valid) {
    report.failure = "lifted partition: " + describe(*lifted_check.witness);
    return report;
  }
  report.lifted_flips_empty = lifted_check.flips.empty();

  auto switched_then_product = product(gm_switch(g, pi), h, t);
  auto product_then_switched = gm_switch(prod, lifted);
  report.identity_holds = switched_then_product == product_then_switched;
  if (! report.identity_holds)
    report.failure = "(sw G) * H differs from sw(G * H)";

  // Row values of A_D (S (x) I) against the three-case prediction.
  const auto hn = h.size();
  report.row_values_hold = true;
  const auto &gm = lifted.gm_cell();
  for (std::size_t r = 0; r < gm.size() && report.row_values_hold; ++r) {
    Vertex x = gm[r] / static_cast<Vertex>(hn), w = gm[r] % static_cast<Vertex>(hn);
    for (std::size_t l = 0; l < pi.cell_count(); ++l) {
      std::size_t base_count = 0;
      for (auto y : pi.cell(l))
        base_count += g.adjacent(x, y);
      for (Vertex w2 = 0; w2 < hn; ++w2) {
        auto cell = l * hn + w2;
        auto observed = static_cast<std::size_t>(lifted_check.gm_counts(r, cell));
        auto j = detail::relation_class(h, w, w2);
        if (2 * observed != predicted_twice_count(t, j, base_count, pi.cell(l).size())) {
          std::ostringstream out;
          out << "vertex " << gm[r] << " has " << observed << " neighbours in lifted cell " << cell
              << ", not the predicted value";
          report.failure = out.str();
          report.row_values_hold = false;
          break;
        }
      }
    }
  }

  if (prod.size() <= switching_matrix_limit)
    report.kron_switching_matrix =
        switching_matrix(lifted, prod.size()) ==
        kron(switching_matrix(pi, g.size()), RationalMatrix::identity(hn));
  return report;
}

} // namespace gmprod

#endif // GMPROD_COMPATIBILITY_HPP_
