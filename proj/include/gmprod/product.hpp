#ifndef GMPROD_PRODUCT_HPP_
#define GMPROD_PRODUCT_HPP_

/**
 * Unified graph products.
 *
 * With A_0 = I, A_1 = A(G), A_2 = J - I - A(G) (and B_j likewise for H), the
 * product of type s has adjacency matrix  sum_{i,j} s[i][j] (A_i (x) B_j).
 * Vertex (x, w) of the product is encoded as x * |V(H)| + w, the row-major
 * convention of the Kronecker product, so matrix identities such as
 * (S (x) I) or (Q (x) I) hold on the nose.
 */

#include "errors.hpp"
#include "graph.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gmprod
{

/// Rejection of a syntactically malformed type code; offset is 0-based into the input.
class TypeCodeError : public InvalidArgument
{
public:
  TypeCodeError(std::size_t offset, const std::string &what)
  : InvalidArgument(what), _offset(offset)
  {}

  auto offset() const -> std::size_t { return _offset; }

private:
  std::size_t _offset;
};

/// A well-formed code whose s00 entry is 1 (the product would carry loops).
class NonSimpleTypeError : public TypeCodeError
{
public:
  using TypeCodeError::TypeCodeError;
};

class ProductType
{
public:
  using Table = std::array<std::array<bool, 3>, 3>;

  constexpr ProductType() = default;

  explicit ProductType(const Table &s) : _s(s)
  {
    if (_s[0][0])
      throw NonSimpleTypeError(0, "product type has s00 = 1; the product would not be simple");
  }

  constexpr auto operator()(int i, int j) const -> bool { return _s[i][j]; }
  constexpr auto table() const -> const Table & { return _s; }

  auto transposed() const -> ProductType
  {
    Table t{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t[i][j] = _s[j][i];
    return ProductType(t);
  }

  /// Canonical "[abc;def;ghi]" serialisation.
  auto code() const -> std::string
  {
    std::string out = "[";
    for (int i = 0; i < 3; ++i) {
      if (i)
        out += ';';
      for (int j = 0; j < 3; ++j)
        out += _s[i][j] ? '1' : '0';
    }
    return out + "]";
  }

  /// Index 0..255 over the eight free bits, row-major excluding s00.
  auto index() const -> unsigned
  {
    unsigned result = 0, bit = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i || j)
          result |= static_cast<unsigned>(_s[i][j]) << bit++;
    return result;
  }

  static auto from_index(unsigned index) -> ProductType
  {
    Table t{};
    unsigned bit = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i || j)
          t[i][j] = (index >> bit++) & 1U;
    return ProductType(t);
  }

  friend auto operator==(const ProductType &, const ProductType &) -> bool = default;

private:
  Table _s{};
};

/// Parses "[abc;def;ghi]" (blanks allowed between tokens).
inline auto parse_type_code(std::string_view code) -> ProductType
{
  ProductType::Table t{};
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < code.size() && (code[pos] == ' ' || code[pos] == '\t'))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_blanks();
    if (pos >= code.size() || code[pos] != c)
      throw TypeCodeError(pos, std::string("type code: expected '") + c + "'");
    ++pos;
  };

  expect('[');
  for (int i = 0; i < 3; ++i) {
    if (i)
      expect(';');
    skip_blanks();
    for (int j = 0; j < 3; ++j) {
      if (pos >= code.size() || (code[pos] != '0' && code[pos] != '1'))
        throw TypeCodeError(pos, "type code: expected a 0/1 digit");
      t[i][j] = code[pos++] == '1';
    }
  }
  expect(']');
  skip_blanks();
  if (pos != code.size())
    throw TypeCodeError(pos, "type code: trailing characters");
  if (t[0][0])
    throw NonSimpleTypeError(1, "type code: s00 = 1 gives a non-simple product");
  return ProductType(t);
}

struct NamedProduct
{
  std::string_view name;
  std::string_view code;
};

inline constexpr std::array<NamedProduct, 10> named_products{{
    {"cartesian", "[010;100;000]"},
    {"kronecker", "[000;010;000]"},
    {"strong", "[010;110;000]"},
    {"lexicographic", "[010;111;000]"},
    {"modular", "[010;110;001]"},
    {"weak_modular", "[000;010;001]"},
    {"or_product", "[010;111;010]"},
    {"extended_bipartite_double_kind", "[000;110;000]"},
    {"clique_extension_kind", "[010;110;110]"},
    {"coclique_extension_kind", "[010;010;010]"},
}};

/// The seven products of the classical table (the first seven entries above).
inline constexpr std::size_t table_product_count = 7;

inline auto named_type(std::string_view name) -> ProductType
{
  for (const auto &p : named_products)
    if (p.name == name)
      return parse_type_code(p.code);
  throw InvalidArgument("unknown product name '" + std::string(name) + "'");
}

inline auto table_types() -> std::vector<ProductType>
{
  std::vector<ProductType> result;
  for (std::size_t k = 0; k < table_product_count; ++k)
    result.push_back(parse_type_code(named_products[k].code));
  return result;
}

namespace detail
{

/// 0: equal, 1: adjacent, 2: distinct and non-adjacent.
inline auto relation_class(const Graph &g, Vertex a, Vertex b) -> int
{
  if (a == b)
    return 0;
  return g.adjacent(a, b) ? 1 : 2;
}

} // namespace detail

inline auto product(const Graph &g, const Graph &h, const ProductType &t) -> Graph
{
  const std::size_t gn = g.size(), hn = h.size();
  if (hn != 0 && gn > max_vertices / hn)
    throw SizeLimitError("product of " + std::to_string(gn) + " and " + std::to_string(hn) +
                         " vertices exceeds the cap of " + std::to_string(max_vertices));

  // For each class i of the first coordinate, the second coordinates w ~ z allowed.
  std::array<std::vector<std::vector<Vertex>>, 3> allowed;
  for (int i = 0; i < 3; ++i) {
    allowed[i].resize(hn);
    for (Vertex w = 0; w < hn; ++w)
      for (Vertex z = 0; z < hn; ++z)
        if (t(i, detail::relation_class(h, w, z)))
          allowed[i][w].push_back(z);
  }

  GraphBuilder b(gn * hn);
  for (Vertex x = 0; x < gn; ++x)
    for (Vertex y = x; y < gn; ++y) {
      const auto &pattern = allowed[detail::relation_class(g, x, y)];
      for (Vertex w = 0; w < hn; ++w)
        for (auto z : pattern[w])
          b.add_edge(static_cast<Vertex>(x * hn + w), static_cast<Vertex>(y * hn + z));
    }
  return std::move(b).build();
}

inline auto cartesian_product(const Graph &g, const Graph &h) -> Graph
{
  return product(g, h, named_type("cartesian"));
}

inline auto bipartite_double(const Graph &g) -> Graph
{
  return product(g, complete_graph(2), named_type("kronecker"));
}

/**
 * (x,a) ~ (y,b) iff a != b and (x = y or x ~ y), i.e. (I + A) (x) A(K_2).
 *
 * This is K_2 * G for the type [000;110;000]; with G kept as the major
 * coordinate that becomes G * K_2 for the transposed type [010;010;000].
 */
inline auto extended_bipartite_double(const Graph &g) -> Graph
{
  return product(g, complete_graph(2), named_type("extended_bipartite_double_kind").transposed());
}

/**
 * Relabelling that moves the first k factors of a row-major mixed-radix
 * encoding to the end: digits (d_1..d_m) over radices sizes become
 * (d_{k+1}..d_m, d_1..d_k) over the rotated radices.
 */
inline auto factor_rotation_permutation(const std::vector<std::size_t> &sizes, std::size_t k)
    -> Permutation
{
  if (k > sizes.size())
    throw InvalidArgument("rotation amount exceeds the number of factors");
  std::size_t total = 1;
  for (auto s : sizes) {
    if (s == 0)
      throw InvalidArgument("factor sizes must be positive");
    if (total > max_vertices / s)
      throw SizeLimitError("factor sizes exceed the vertex cap");
    total *= s;
  }

  const std::size_t m = sizes.size();
  std::vector<std::size_t> rotated(m);
  for (std::size_t p = 0; p < m; ++p)
    rotated[p] = sizes[(p + k) % m];

  std::vector<Vertex> map(total);
  std::vector<std::size_t> digits(m);
  for (std::size_t index = 0; index < total; ++index) {
    auto rest = index;
    for (std::size_t p = m; p-- > 0;) {
      digits[p] = rest % sizes[p];
      rest /= sizes[p];
    }
    std::size_t image = 0;
    for (std::size_t p = 0; p < m; ++p)
      image = image * rotated[p] + digits[(p + k) % m];
    map[index] = static_cast<Vertex>(image);
  }
  return Permutation(std::move(map));
}

/// Maps the encoding of G * H onto that of H * G.
inline auto factor_swap_permutation(std::size_t first_size, std::size_t second_size) -> Permutation
{
  return factor_rotation_permutation({first_size, second_size}, 1);
}

} // namespace gmprod

#endif // GMPROD_PRODUCT_HPP_
