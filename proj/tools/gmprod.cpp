// gmprod: command-line front end for graph products, Godsil-McKay switching
// and the Hamming-to-Doob switching certificates.
//
// Exit codes: 0 success / property holds, 1 property fails (witness on
// stdout), 2 usage or I/O error.

#include <gmprod/gmprod.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace
{

using namespace gmprod;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct Options
{
  std::vector<Prime> primes;
  std::string expr, expr2, graph_file, partition_file, output;
  std::size_t m = 0, n = 0;
  std::string cert_dir;
  std::string delta = "all";
  std::string type = "all";
};

auto primes_of(const Options &o) -> std::vector<Prime>
{
  return o.primes.empty() ? default_primes() : o.primes;
}

auto emit_graph(const Graph &g, const std::string &output) -> void
{
  if (output.empty() || output == "-")
    write_graph(std::cout, g);
  else
    save_graph(output, g);
}

auto cmd_eval(const Options &o) -> int
{
  emit_graph(dsl::eval(o.expr), o.output);
  return exit_holds;
}

auto cmd_spectrum(const Options &o) -> int
{
  auto g = dsl::eval(o.expr);
  std::cout << "# characteristic polynomial residues, low degree first; n = " << g.size() << '\n';
  write_fingerprint(std::cout, char_poly_fingerprint(g, primes_of(o)));
  return exit_holds;
}

auto cmd_cospectral(const Options &o) -> int
{
  auto g = dsl::eval(o.expr), h = dsl::eval(o.expr2);
  auto primes = primes_of(o);
  if (g.size() != h.size()) {
    std::cout << "not cospectral: orders " << g.size() << " and " << h.size() << '\n';
    return exit_fails;
  }
  auto fg = char_poly_fingerprint(g, primes), fh = char_poly_fingerprint(h, primes);
  for (std::size_t k = 0; k < primes.size(); ++k)
    for (std::size_t d = 0; d < fg.residues[k].size(); ++d)
      if (fg.residues[k][d] != fh.residues[k][d]) {
        std::cout << "not cospectral: coefficient of x^" << d << " differs mod " << primes[k] << " ("
                  << fg.residues[k][d] << " vs " << fh.residues[k][d] << ")\n";
        return exit_fails;
      }
  std::cout << "cospectral (" << primes.size() << " primes)\n";
  return exit_holds;
}

auto cmd_iso(const Options &o) -> int
{
  auto g = dsl::eval(o.expr), h = dsl::eval(o.expr2);
  auto result = is_isomorphic(g, h);
  if (! result) {
    std::cout << "not isomorphic";
    if (g.size() == h.size() && g.edge_count() == h.edge_count())
      std::cout << ": canonical forms differ";
    else
      std::cout << ": orders or edge counts differ";
    std::cout << '\n';
    return exit_fails;
  }
  std::cout << "isomorphic; witness permutation:\n";
  write_permutation(std::cout, *result.witness);
  return exit_holds;
}

auto cmd_dr(const Options &o) -> int
{
  auto result = intersection_array(dsl::eval(o.expr));
  if (! result) {
    std::cout << "not distance-regular: " << describe(*result.witness) << '\n';
    return exit_fails;
  }
  std::cout << to_string(*result.array) << '\n';
  return exit_holds;
}

auto cmd_check_gm(const Options &o) -> int
{
  auto g = load_graph(o.graph_file);
  auto p = load_partition(o.partition_file, g.size());
  auto report = check_gm(g, p);
  if (! report.valid()) {
    std::cout << "invalid: " << describe(*report.witness) << '\n';
    return exit_fails;
  }
  std::cout << "valid GM partition: " << p.cell_count() << " cells, GM cell of size " << p.gm_cell().size()
            << ", " << report.flips.size() << " half-neighbourhood pairs\n";
  for (auto [x, i] : report.flips)
    std::cout << "flip " << x << ' ' << i << '\n';
  return exit_holds;
}

auto cmd_switch(const Options &o) -> int
{
  auto g = load_graph(o.graph_file);
  auto p = load_partition(o.partition_file, g.size());
  emit_graph(gm_switch(g, p), o.output);
  return exit_holds;
}

auto cmd_doob_cert(const Options &o) -> int
{
  std::filesystem::path dir = o.cert_dir.empty()
                                  ? "doob-cert-" + std::to_string(o.m) + "-" + std::to_string(o.n)
                                  : o.cert_dir;
  save_certificate(dir, doob_via_switching(o.m, o.n));
  auto report = validate_certificate(load_certificate(dir));
  if (! report.valid()) {
    std::cout << "certificate INVALID\n";
    for (auto &f : report.failures)
      std::cout << "  " << f << '\n';
    return exit_fails;
  }
  std::cout << "certificate written to " << dir.string() << " and validated: H(" << 2 * o.m + o.n
            << ",4) -> D(" << o.m << "," << o.n << ") in " << report.steps_checked << " switching"
            << (report.steps_checked == 1 ? "" : "s") << '\n';
  return exit_holds;
}

auto delta_graph(const std::string &name) -> Graph
{
  if (name == "K2")
    return complete_graph(2);
  if (name == "K3")
    return complete_graph(3);
  if (name == "K4")
    return complete_graph(4);
  if (name == "P3")
    return path_graph(3);
  throw InvalidArgument("unknown --delta '" + name + "' (expected K2, K3, K4, P3 or all)");
}

auto cmd_verify_thm2(const Options &o) -> int
{
  std::vector<std::string> deltas = o.delta == "all" ? std::vector<std::string>{"K2", "K3", "K4", "P3"}
                                                     : std::vector<std::string>{o.delta};
  std::vector<ProductType> types = o.type == "all" ? table_types() : std::vector<ProductType>{parse_type_code(o.type)};

  auto base = hamming(2, 4);
  auto pi = diagonal_gm_partition_h24();
  bool all_hold = true;
  for (auto &d : deltas) {
    auto delta = delta_graph(d);
    for (auto &t : types) {
      auto r = check_switching_compatibility(base, pi, delta, t);
      std::cout << (r.ok() ? "holds " : "FAILS ") << "delta=" << d << " type=" << t.code();
      if (! r.ok())
        std::cout << ": " << r.failure;
      std::cout << '\n';
      all_hold = all_hold && r.ok();
    }
  }
  return all_hold ? exit_holds : exit_fails;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Graph products and Godsil-McKay switching"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--primes", o.primes, "Comma-separated primes (> 2^30, at least five) for spectral fingerprints")
      ->delimiter(',');

  auto *eval = app.add_subcommand("eval", "Evaluate an expression and print the graph");
  eval->add_option("expr", o.expr)->required();
  eval->add_option("-o,--output", o.output, "Write the graph here instead of stdout");

  auto *spectrum = app.add_subcommand("spectrum", "Print the characteristic-polynomial fingerprint");
  spectrum->add_option("expr", o.expr)->required();

  auto *cospec = app.add_subcommand("cospectral", "Exit 0 iff the two graphs are cospectral");
  cospec->add_option("expr1", o.expr)->required();
  cospec->add_option("expr2", o.expr2)->required();

  auto *iso = app.add_subcommand("iso", "Exit 0 iff the two graphs are isomorphic");
  iso->add_option("expr1", o.expr)->required();
  iso->add_option("expr2", o.expr2)->required();

  auto *dr = app.add_subcommand("dr", "Intersection array, or a witness against distance-regularity");
  dr->add_option("expr", o.expr)->required();

  auto *check = app.add_subcommand("check-gm", "Check the Godsil-McKay conditions");
  check->add_option("graph", o.graph_file)->required();
  check->add_option("partition", o.partition_file)->required();

  auto *sw = app.add_subcommand("switch", "Apply Godsil-McKay switching");
  sw->add_option("graph", o.graph_file)->required();
  sw->add_option("partition", o.partition_file)->required();
  sw->add_option("-o,--output", o.output, "Write the graph here instead of stdout");

  auto *cert = app.add_subcommand("doob-cert", "Write and validate a Hamming-to-Doob switching certificate");
  cert->add_option("m", o.m)->required()->check(CLI::PositiveNumber);
  cert->add_option("n", o.n)->required()->check(CLI::NonNegativeNumber);
  cert->add_option("-d,--dir", o.cert_dir, "Output directory (default doob-cert-<m>-<n>)");

  auto *thm2 = app.add_subcommand("verify-thm2", "Check that switching commutes with products on H(2,4)");
  thm2->add_option("--delta", o.delta, "K2, K3, K4, P3 or all")->check(CLI::IsMember({"K2", "K3", "K4", "P3", "all"}));
  thm2->add_option("--type", o.type, "Type code, or 'all' for the seven table products");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (! o.primes.empty())
      validate_primes(o.primes);
    if (*eval)
      return cmd_eval(o);
    if (*spectrum)
      return cmd_spectrum(o);
    if (*cospec)
      return cmd_cospectral(o);
    if (*iso)
      return cmd_iso(o);
    if (*dr)
      return cmd_dr(o);
    if (*check)
      return cmd_check_gm(o);
    if (*sw)
      return cmd_switch(o);
    if (*cert)
      return cmd_doob_cert(o);
    if (*thm2)
      return cmd_verify_thm2(o);
  }
  catch (const GMViolation &e) {
    std::cout << e.what() << '\n';
    return exit_fails;
  }
  catch (const std::exception &e) {
    std::cerr << "gmprod: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
