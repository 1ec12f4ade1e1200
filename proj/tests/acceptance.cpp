// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <gmprod/gmprod.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using namespace gmprod;

struct Outcome
{
  bool pass = true;
  std::string detail;

  auto require(bool condition, const std::string &what) -> void
  {
    if (! condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

auto relation_matrices(const Graph &g) -> std::array<IntMatrix, 3>
{
  auto n = g.size();
  auto a = adjacency_matrix<std::int64_t>(g);
  auto i = IntMatrix::identity(n);
  return {i, a, IntMatrix::ones(n, n) - i - a};
}

auto is_bipartite(const Graph &g) -> bool
{
  std::vector<int> side(g.size(), -1);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (side[s] != -1)
      continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto w : g.neighbours(queue[k])) {
        if (side[w] == -1) {
          side[w] = 1 - side[queue[k]];
          queue.push_back(w);
        }
        else if (side[w] == side[queue[k]])
          return false;
      }
  }
  return true;
}

auto deltas() -> std::vector<std::pair<std::string, Graph>>
{
  return {{"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"K4", complete_graph(4)}, {"P3", path_graph(3)}};
}

// 1
auto shrikhande_reproduction() -> Outcome
{
  Outcome o;
  auto h = hamming(2, 4);
  auto sh = gm_switch(h, diagonal_gm_partition_h24());
  o.require(sh.size() == 16, "switched graph does not have 16 vertices");
  o.require(sh.is_regular() && sh.degree(0) == 6, "switched graph is not 6-regular");
  o.require(cospectral(h, sh), "H(2,4) and Sh are not cospectral");
  o.require(! is_isomorphic(h, sh), "H(2,4) and Sh are isomorphic");
  o.require(clique_number_upto(h, 6) == 4, "clique number of H(2,4) is not 4");
  o.require(clique_number_upto(sh, 6) == 3, "clique number of Sh is not 3");
  o.require(bool(is_isomorphic(sh, oracle::cayley_shrikhande())), "switched graph is not the Cayley Shrikhande graph");
  o.detail = o.pass ? "16 vertices, 6-regular, cospectral, non-isomorphic, clique numbers 4 vs 3" : o.detail;
  return o;
}

// 2
auto switching_property_suite() -> Outcome
{
  Outcome o;
  std::vector<oracle::GMInstance> instances;
  oracle::Rng rng(20240601);
  for (int k = 0; k < 60; ++k)
    instances.push_back(oracle::random_gm_instance(24, rng));
  instances.push_back({hamming(2, 4), diagonal_gm_partition_h24()});
  instances.push_back({path_graph(3), GMPartition(3, {{0, 2}}, {1})});
  for (auto &[name, d] : deltas())
    instances.push_back({cartesian_product(hamming(2, 4), d), lift_gm(diagonal_gm_partition_h24(), d)});
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 0}}) {
    auto cert = doob_via_switching(m, n);
    const Graph *previous = &cert.base;
    for (auto &step : cert.steps) {
      instances.push_back({*previous, step.partition});
      previous = &step.result;
    }
  }

  std::size_t checked = 0, nontrivial = 0;
  for (std::size_t k = 0; k < instances.size() && o.pass; ++k) {
    const auto &[g, p] = instances[k];
    auto label = "instance " + std::to_string(k) + " (" + std::to_string(g.size()) + " vertices): ";
    auto report = check_gm(g, p);
    o.require(report.valid(), label + "not a GM partition");
    if (! o.pass)
      break;
    nontrivial += ! report.flips.empty();
    auto s = gm_switch(g, p);
    o.require(gm_switch(s, p) == g, label + "switching is not an involution");
    auto q = switching_matrix(p, g.size());
    o.require(q * q == RationalMatrix::identity(g.size()), label + "Q^2 != I");
    o.require(q * adjacency_matrix<Rational>(g) * q == adjacency_matrix<Rational>(s), label + "A(sw) != QAQ");
    o.require(char_poly_fingerprint(g) == char_poly_fingerprint(s), label + "fingerprints differ");
    ++checked;
  }
  o.require(checked >= 50, "fewer than 50 instances checked");
  if (o.pass)
    o.detail = std::to_string(checked) + " instances (" + std::to_string(nontrivial) +
               " with a nonempty flip set): involution, Q^2 = I, QAQ, 5-prime fingerprints";
  return o;
}

// 3
auto lifting_property_suite() -> Outcome
{
  Outcome o;
  auto types = table_types();
  types.push_back(named_type("clique_extension_kind"));
  types.push_back(named_type("coclique_extension_kind"));
  oracle::Rng rng(31337);
  std::size_t instances = 0;
  for (int trial = 0; trial < 120 && o.pass; ++trial) {
    auto g = oracle::random_graph(oracle::uniform(1, 6, rng), 0.5, rng);
    auto h = oracle::random_graph(oracle::uniform(1, 4, rng), 0.5, rng);
    auto p = coarsest_equitable_partition(g, Partition::single_cell(g.size()));
    for (auto &t : types) {
      auto label = "trial " + std::to_string(trial) + " type " + t.code() + ": ";
      auto prod = product(g, h, t);
      auto lifted = lift_equitable(p, h);
      auto r = is_equitable(prod, lifted);
      o.require(bool(r), label + "lifted partition is not equitable");
      if (! o.pass)
        break;
      auto s = characteristic_matrix(lifted, prod.size());
      auto m = cell_size_matrix(lifted.cells());
      auto i = IntMatrix::identity(lifted.cell_count());
      o.require(relation_matrices(prod)[2] * s == s * (m - i - *r.quotient), label + "A2 S != S(M - I - R)");
      ++instances;
    }
  }
  o.require(instances >= 100, "fewer than 100 instances");
  if (o.pass)
    o.detail = std::to_string(instances) + " (graph, partition, factor, type) instances over 9 types";
  return o;
}

// 4
auto product_compatibility() -> Outcome
{
  Outcome o;
  auto base = hamming(2, 4);
  auto pi = diagonal_gm_partition_h24();
  auto sw_base = gm_switch(base, pi);
  std::size_t cases = 0;
  for (auto &[name, d] : deltas())
    for (auto &t : table_types()) {
      auto label = "delta " + name + " type " + t.code() + ": ";
      auto prod = product(base, d, t);
      auto lifted = lift_gm(pi, d);
      o.require(product(sw_base, d, t) == gm_switch(prod, lifted), label + "(sw G) * H != sw(G * H)");

      // row values by direct counting on the product graph
      for (auto v : lifted.gm_cell()) {
        Vertex x = v / static_cast<Vertex>(d.size()), w = v % static_cast<Vertex>(d.size());
        std::size_t base_count = 0;
        for (auto y : pi.cell(0))
          base_count += base.adjacent(x, y);
        for (Vertex w2 = 0; w2 < d.size(); ++w2) {
          std::size_t observed = 0;
          for (auto y : pi.cell(0))
            observed += prod.adjacent(v, static_cast<Vertex>(y * d.size() + w2));
          int j = w == w2 ? 0 : (d.adjacent(w, w2) ? 1 : 2);
          std::size_t twice_expected = base_count == 0 ? 2 * t(2, j) * 4
                                       : base_count == 2 ? (t(1, j) + t(2, j)) * 4
                                                         : 2 * t(1, j) * 4;
          o.require(base_count == 0 || base_count == 2 || base_count == 4, label + "base count off trichotomy");
          o.require(2 * observed == twice_expected, label + "row value differs from the trichotomy");
        }
      }
      auto report = check_switching_compatibility(base, pi, d, t);
      o.require(report.ok(), label + report.failure);
      ++cases;
    }
  if (o.pass)
    o.detail = std::to_string(cases) + " (delta, type) cases bit-identical; row values match direct counts";
  return o;
}

// 5
auto clique_coclique_noop() -> Outcome
{
  Outcome o;
  auto base = hamming(2, 4);
  auto pi = diagonal_gm_partition_h24();
  for (auto name : {"clique_extension_kind", "coclique_extension_kind"}) {
    auto t = named_type(name);
    for (auto &[dname, d] : deltas()) {
      auto prod = product(base, d, t);
      auto lifted = lift_gm(pi, d);
      auto report = check_gm(prod, lifted);
      o.require(report.valid(), t.code() + " over " + dname + ": lifted partition invalid");
      o.require(report.flips.empty(), t.code() + " over " + dname + ": nonempty flip set");
      o.require(gm_switch(prod, lifted) == prod, t.code() + " over " + dname + ": switching changed the graph");
    }
  }
  if (o.pass)
    o.detail = "[010;110;110] and [010;010;010] over K2, K3, K4, P3: empty flip sets, identical graphs";
  return o;
}

// 6
auto doob_certificates() -> Outcome
{
  Outcome o;
  auto root = std::filesystem::temp_directory_path() / "gmprod-acceptance";
  std::filesystem::remove_all(root);
  std::ostringstream summary;
  for (auto [m, n, size] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 0, 16}, {1, 1, 64}, {2, 0, 256}}) {
    auto label = "doob-cert " + std::to_string(m) + " " + std::to_string(n) + ": ";
    auto dir = root / ("cert-" + std::to_string(m) + "-" + std::to_string(n));
    save_certificate(dir, doob_via_switching(m, n));
    auto cert = load_certificate(dir);
    auto report = validate_certificate(cert);
    o.require(report.valid(), label + (report.failures.empty() ? "" : report.failures.front()));
    o.require(report.steps_checked == m, label + "wrong number of steps");
    o.require(report.chain_cospectral, label + "chain not cospectral");
    o.require(cert.target.size() == size, label + "target has the wrong order");
    o.require(relabel(cert.last(), cert.final_perm) == doob(m, n), label + "final graph differs from D(m,n)");
    summary << (m == 1 && n == 0 ? "" : ", ") << "(" << m << "," << n << ") on " << size;
  }
  std::filesystem::remove_all(root);
  if (o.pass)
    o.detail = "certificates " + summary.str() + " vertices validate after save/load";
  return o;
}

// 7
auto distance_regularity() -> Outcome
{
  Outcome o;
  struct Case
  {
    std::string name;
    Graph g;
    std::string expected;
  };
  std::vector<Case> cases{{"H(2,4)", hamming(2, 4), "{6,3;1,2}"},       {"Sh", shrikhande(), "{6,3;1,2}"},
                          {"H(3,4)", hamming(3, 4), "{9,6,3;1,2,3}"},   {"D(1,1)", doob(1, 1), "{9,6,3;1,2,3}"},
                          {"H(4,4)", hamming(4, 4), "{12,9,6,3;1,2,3,4}"}, {"D(2,0)", doob(2, 0), "{12,9,6,3;1,2,3,4}"}};
  for (auto &c : cases) {
    auto r = intersection_array(c.g);
    o.require(bool(r), c.name + " refused: " + (r.witness ? describe(*r.witness) : ""));
    if (! r)
      continue;
    o.require(to_string(*r.array) == c.expected, c.name + " has " + to_string(*r.array));
    auto [b, cc] = oracle::counted_intersection_array(c.g);
    o.require(r.array->b == b && r.array->c == cc, c.name + " disagrees with the Floyd-Warshall count");
  }
  if (o.pass)
    o.detail = "{6,3;1,2} x2, {9,6,3;1,2,3} x2, {12,9,6,3;1,2,3,4} x2; all match a Floyd-Warshall count";
  return o;
}

// 8
auto non_isomorphy() -> Outcome
{
  Outcome o;
  o.require(! is_isomorphic(doob(1, 1), hamming(3, 4)), "D(1,1) and H(3,4) reported isomorphic");
  auto doob_counts = k4_counts_per_vertex(doob(2, 0));
  auto hamming_counts = k4_counts_per_vertex(hamming(4, 4));
  std::sort(doob_counts.begin(), doob_counts.end());
  std::sort(hamming_counts.begin(), hamming_counts.end());
  o.require(doob_counts != hamming_counts, "4-clique counts agree for D(2,0) and H(4,4)");
  if (o.pass)
    o.detail = "D(1,1) !~ H(3,4); K4 per vertex: D(2,0) " + std::to_string(doob_counts.front()) + ", H(4,4) " +
               std::to_string(hamming_counts.front());
  return o;
}

// 9
auto extended_bipartite_double_sanity() -> Outcome
{
  Outcome o;
  auto cube = extended_bipartite_double(cycle_graph(4));
  o.require(cube.size() == 8, "ebd(C4) does not have 8 vertices");
  o.require(cube.is_regular() && cube.degree(0) == 3, "ebd(C4) is not 3-regular");
  o.require(is_bipartite(cube), "ebd(C4) is not bipartite");
  o.require(diameter(cube) == 3, "ebd(C4) does not have diameter 3");
  o.require(bool(is_isomorphic(cube, hamming(3, 2))), "ebd(C4) is not the 3-cube");

  auto h = hamming(2, 4);
  auto pi = diagonal_gm_partition_h24();
  o.require(extended_bipartite_double(gm_switch(h, pi)) ==
                gm_switch(extended_bipartite_double(h), lift_gm(pi, complete_graph(2))),
            "ebd(sw(H(2,4))) != sw(ebd(H(2,4)))");
  if (o.pass)
    o.detail = "ebd(C4) = 3-cube; ebd(sw(H(2,4))) = sw(ebd(H(2,4)), lifted partition) bit for bit";
  return o;
}

// 10
auto isomorphism_soundness() -> Outcome
{
  Outcome o;
  oracle::Rng rng(777);
  std::size_t agree = 0, positives = 0;
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    auto n = oracle::uniform(1, 7, rng);
    auto g = oracle::random_graph(n, 0.5, rng);
    Graph h;
    switch (trial % 3) {
    case 0: // relabelled copy
      h = relabel(g, oracle::random_permutation(n, rng));
      break;
    case 1: // same edge count, usually not isomorphic
      if (n > 1) {
        GraphBuilder b(relabel(g, oracle::random_permutation(n, rng)));
        auto u = static_cast<Vertex>(oracle::uniform(0, n - 1, rng));
        auto v = static_cast<Vertex>((u + 1 + oracle::uniform(0, n - 2, rng)) % n);
        auto x = static_cast<Vertex>(oracle::uniform(0, n - 1, rng));
        auto y = static_cast<Vertex>((x + 1 + oracle::uniform(0, n - 2, rng)) % n);
        if (b.adjacent(u, v) != b.adjacent(x, y)) {
          b.toggle_edge(u, v);
          b.toggle_edge(x, y);
        }
        h = std::move(b).build();
      }
      else
        h = g;
      break;
    default:
      h = oracle::random_graph(n, 0.5, rng);
    }
    bool expected = oracle::brute_force_isomorphic(g, h);
    auto r = is_isomorphic(g, h);
    o.require(bool(r) == expected, "disagreement with exhaustive search on trial " + std::to_string(trial));
    if (r)
      o.require(relabel(g, *r.witness) == h, "witness is not an isomorphism on trial " + std::to_string(trial));
    agree += bool(r) == expected;
    positives += expected;
  }
  std::size_t relabellings = 0;
  for (const auto &g : {hamming(2, 4), shrikhande(), doob(1, 1)}) {
    auto base = canonical_form(g);
    for (int k = 0; k < 100 && o.pass; ++k) {
      o.require(canonical_form(relabel(g, oracle::random_permutation(g.size(), rng))) == base,
                "canonical form changed under relabelling of a " + std::to_string(g.size()) + "-vertex graph");
      ++relabellings;
    }
  }
  if (o.pass)
    o.detail = std::to_string(agree) + "/500 pairs agree with exhaustive search (" + std::to_string(positives) +
               " isomorphic); " + std::to_string(relabellings) + " relabellings keep the canonical form";
  return o;
}

// 11
auto parser_corpus() -> Outcome
{
  Outcome o;
  const std::vector<std::string> valid{
      "K(1)",
      "K(4)",
      "H(2,4)",
      "H(0,3)",
      "Sh",
      "Doob(1,1)",
      "Doob(0,2)",
      "file(\"h24.graph\")",
      "file(\"dir/with \\\"quotes\\\".graph\")",
      "cartesian(K(4),K(4))",
      "kronecker(K(2),Sh)",
      "strong(K(3), K(2))",
      "lex(Sh, K(2))",
      "modular(K(2),K(3))",
      "weakmod(K(3),K(3))",
      "orprod(H(2,2),K(2))",
      "prod([010;100;000],K(4),K(4))",
      "prod([000;110;000], Sh, K(2))",
      "prod([010;110;110],H(2,4),K(3))",
      "prod([010;010;010],H(2,4),K(3))",
      "prod([ 011 ; 111 ; 111 ],K(2),K(2))",
      "sw(H(2,4),diag)",
      "sw(H(3,4),lift(diag,4))",
      "sw(sw(H(4,4),lift(diag,16)),lift(diag,16))",
      "sw(file(\"g.graph\"),file(\"p.partition\"))",
      "sw(H(4,4),lift(lift(file(\"p\"),4),4))",
      "complement(Sh)",
      "bd(K(3))",
      "ebd(cartesian(K(2),K(2)))",
      "complement(ebd(bd(sw(H(2,4),diag))))",
      "  cartesian(\n  Sh,\n  K(4)\n)  ",
  };
  for (auto &src : valid) {
    try {
      auto e = dsl::parse(src);
      auto printed = dsl::print(e);
      o.require(dsl::parse(printed) == e, "round trip changed the tree of " + src);
      o.require(dsl::print(dsl::parse(printed)) == printed, "printing is not stable for " + src);
    }
    catch (const std::exception &ex) {
      o.require(false, "valid expression rejected: " + src + " (" + ex.what() + ")");
    }
  }
  o.require(dsl::print(dsl::parse("lex(Sh, K(2))")) == "prod([010;111;000],Sh,K(2))",
            "named product not printed as its type code");

  struct Bad
  {
    std::string src;
    std::size_t line, column;
  };
  const std::vector<Bad> invalid{
      {"prod([100;000;000], K(2), K(2))", 1, 6}, // s00 = 1
      {"prod([110;111;000],K(2),K(2))", 1, 6},   // s00 = 1
      {"cartesian(K(4))", 1, 15},                // arity
      {"K(1,2)", 1, 4},                          // arity
      {"H(2)", 1, 4},                            // arity
      {"sw(H(2,4))", 1, 10},                     // arity
      {"ebd(K(2),K(3))", 1, 9},                  // arity
      {"Sh(1)", 1, 3},                           // arity
      {"foo(K(2))", 1, 1},
      {"K(4", 1, 4},
      {"strong(K(2),\n  Sh(1))", 2, 5},
      {"prod([01;100;000],K(2),K(2))", 1, 9},
      {"prod([010;100;002],K(2),K(2))", 1, 17},
      {"H(2,4) x", 1, 8},
      {"sw(H(2,4), nowhere)", 1, 12},
      {"file(\"x)", 1, 6},
      {"", 1, 1},
  };
  for (auto &bad : invalid) {
    try {
      dsl::parse(bad.src);
      o.require(false, "accepted invalid expression " + bad.src);
    }
    catch (const dsl::ParseError &e) {
      o.require(e.line() == bad.line && e.column() == bad.column,
                "error for " + bad.src + " reported at " + std::to_string(e.line()) + ":" +
                    std::to_string(e.column()) + ", expected " + std::to_string(bad.line) + ":" +
                    std::to_string(bad.column));
    }
  }
  if (o.pass)
    o.detail = std::to_string(valid.size()) + " expressions round-trip; " + std::to_string(invalid.size()) +
               " rejections at the expected line:column";
  return o;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Shrikhande reproduction", shrikhande_reproduction},
      {"switching property suite", switching_property_suite},
      {"equitable lifting suite", lifting_property_suite},
      {"switching commutes with products", product_compatibility},
      {"clique/coclique extension no-op", clique_coclique_noop},
      {"Doob switching certificates", doob_certificates},
      {"distance-regularity", distance_regularity},
      {"Doob/Hamming non-isomorphy", non_isomorphy},
      {"extended bipartite double", extended_bipartite_double_sanity},
      {"isomorphism engine soundness", isomorphism_soundness},
      {"expression parser corpus", parser_corpus},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    }
    catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += ! o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1 < 10 ? " " : "") << k + 1 << ". "
              << criteria[k].first << ": " << o.detail << " [" << ms << " ms]" << std::endl;
  }
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : "all criteria passed") << '\n';
  return failures ? 1 : 0;
}
