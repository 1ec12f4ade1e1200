#ifndef GMPROD_DSL_HPP_
#define GMPROD_DSL_HPP_

/**
 * A small expression language for building graphs.
 *
 *   expr    := NAME | NAME '(' arg { ',' arg } ')'
 *   arg     := expr | INTEGER | STRING | TYPECODE
 *
 *   K(q)  H(d,q)  Doob(m,n)  Sh  file("path")
 *   prod([abc;def;ghi], g, h)
 *   cartesian kronecker strong lex modular weakmod orprod   (g, h)
 *   sw(g, source)   source := diag | lift(source, w) | file("path")
 *   complement(g)  bd(g)  ebd(g)
 *
 * Named products are resolved to their type codes while parsing, so the
 * printed form of an expression always uses prod([...], ., .).
 */

#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "partition.hpp"
#include "product.hpp"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmprod::dsl
{

class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::size_t column, const std::string &what)
  : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), _line(line), _column(column)
  {}

  auto line() const -> std::size_t { return _line; }
  auto column() const -> std::size_t { return _column; }

private:
  std::size_t _line, _column;
};

class EvalError : public Error
{
public:
  using Error::Error;
};

/// Where the partition for a sw(...) node comes from.
struct PartitionSource
{
  enum class Kind
  {
    diagonal,
    file,
  };

  Kind kind = Kind::diagonal;
  std::string path;
  std::vector<std::size_t> lifts; ///< right-factor orders, innermost lift first

  friend auto operator==(const PartitionSource &, const PartitionSource &) -> bool = default;
};

struct Expr
{
  enum class Kind
  {
    complete,   ///< K(q)
    hamming,    ///< H(d,q)
    shrikhande, ///< Sh
    doob,       ///< Doob(m,n)
    file,       ///< file("path")
    product,    ///< prod(type, left, right)
    switching,  ///< sw(child, source)
    complement,
    bipartite_double,
    extended_bipartite_double,
  };

  Kind kind = Kind::shrikhande;
  std::vector<std::size_t> numbers;
  std::string path;
  ProductType type;
  PartitionSource source;
  std::vector<Expr> children;

  friend auto operator==(const Expr &, const Expr &) -> bool = default;
};

namespace detail
{

struct Token
{
  enum class Kind
  {
    name,
    integer,
    string,
    type_code,
    open,
    close,
    comma,
    end,
  };

  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1, column = 1;
};

class Lexer
{
public:
  explicit Lexer(std::string_view src) : _src(src) {}

  auto next() -> Token
  {
    skip_blanks();
    Token t;
    t.line = _line;
    t.column = _column;
    if (_pos >= _src.size())
      return t;

    char c = _src[_pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::name;
      while (_pos < _src.size() && (std::isalnum(static_cast<unsigned char>(_src[_pos])) || _src[_pos] == '_'))
        t.text += advance();
    }
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::integer;
      while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
        t.text += advance();
    }
    else if (c == '"') {
      t.kind = Token::Kind::string;
      advance();
      while (true) {
        if (_pos >= _src.size() || _src[_pos] == '\n')
          throw ParseError(t.line, t.column, "unterminated string literal");
        char d = advance();
        if (d == '"')
          break;
        if (d == '\\') {
          if (_pos >= _src.size())
            throw ParseError(t.line, t.column, "unterminated string literal");
          d = advance();
        }
        t.text += d;
      }
    }
    else if (c == '[') {
      t.kind = Token::Kind::type_code;
      while (_pos < _src.size() && _src[_pos] != ']' && _src[_pos] != '\n')
        t.text += advance();
      if (_pos >= _src.size() || _src[_pos] != ']')
        throw ParseError(t.line, t.column, "unterminated type code");
      t.text += advance();
    }
    else if (c == '(' || c == ')' || c == ',') {
      t.kind = c == '(' ? Token::Kind::open : c == ')' ? Token::Kind::close : Token::Kind::comma;
      t.text = std::string(1, advance());
    }
    else
      throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
    return t;
  }

private:
  auto advance() -> char
  {
    char c = _src[_pos++];
    if (c == '\n') {
      ++_line;
      _column = 1;
    }
    else
      ++_column;
    return c;
  }

  auto skip_blanks() -> void
  {
    while (_pos < _src.size() && std::isspace(static_cast<unsigned char>(_src[_pos])))
      advance();
  }

  std::string_view _src;
  std::size_t _pos = 0, _line = 1, _column = 1;
};

class Parser
{
public:
  explicit Parser(std::string_view src) : _lexer(src) { _look = _lexer.next(); }

  auto parse_all() -> Expr
  {
    auto e = parse_expr();
    if (_look.kind != Token::Kind::end)
      fail(_look, "unexpected trailing input '" + _look.text + "'");
    return e;
  }

private:
  using K = Token::Kind;

  [[noreturn]] static auto fail(const Token &at, const std::string &what) -> void
  {
    throw ParseError(at.line, at.column, what);
  }

  auto take() -> Token
  {
    auto t = std::move(_look);
    _look = _lexer.next();
    return t;
  }

  auto expect(K kind, const char *what) -> Token
  {
    if (_look.kind != kind)
      fail(_look, std::string("expected ") + what);
    return take();
  }

  auto parse_integer() -> std::size_t
  {
    auto t = expect(K::integer, "an integer");
    auto v = gmprod::detail::parse_unsigned(t.text);
    if (! v || *v > max_vertices)
      fail(t, "integer '" + t.text + "' is out of range");
    return static_cast<std::size_t>(*v);
  }

  auto parse_string() -> std::string { return expect(K::string, "a string literal").text; }

  auto parse_type() -> ProductType
  {
    auto t = expect(K::type_code, "a type code such as [010;100;000]");
    try {
      return parse_type_code(t.text);
    }
    catch (const NonSimpleTypeError &) {
      fail(t, "type code " + t.text + " has s00 = 1; the product would not be simple");
    }
    catch (const TypeCodeError &e) {
      throw ParseError(t.line, t.column + e.offset(), std::string("invalid type code: ") + e.what());
    }
  }

  /// Parses "( arg, arg, ... )" where each argument is read by the matching callback.
  template <typename... Readers>
  auto arguments(const Token &head, std::size_t arity, Readers &&...readers) -> void
  {
    if (_look.kind != K::open)
      fail(_look, "'" + head.text + "' expects " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
    take();
    std::size_t index = 0;
    auto one = [&](auto &&reader) {
      if (index > 0) {
        if (_look.kind == K::close)
          fail(_look, "'" + head.text + "' expects " + std::to_string(arity) + " arguments, got " +
                          std::to_string(index));
        expect(K::comma, "','");
      }
      reader();
      ++index;
    };
    (one(readers), ...);
    if (_look.kind == K::comma)
      fail(_look, "'" + head.text + "' expects " + std::to_string(arity) + " argument" +
                      (arity == 1 ? "" : "s") + ", got more");
    expect(K::close, "')'");
  }

  auto parse_source() -> PartitionSource
  {
    auto head = expect(K::name, "a partition source (diag, lift(...), file(...))");
    PartitionSource s;
    if (head.text == "diag")
      return s;
    if (head.text == "file") {
      s.kind = PartitionSource::Kind::file;
      arguments(head, 1, [&] { s.path = parse_string(); });
      return s;
    }
    if (head.text == "lift") {
      std::size_t w = 0;
      arguments(head, 2, [&] { s = parse_source(); }, [&] { w = parse_integer(); });
      if (w == 0)
        fail(head, "lift factor order must be positive");
      s.lifts.push_back(w);
      return s;
    }
    fail(head, "unknown partition source '" + head.text + "'");
  }

  auto parse_expr() -> Expr
  {
    auto head = expect(K::name, "a graph expression");
    const auto &f = head.text;
    Expr e;
    auto unary = [&](Expr::Kind kind) {
      e.kind = kind;
      arguments(head, 1, [&] { e.children.push_back(parse_expr()); });
    };
    auto binary_product = [&](std::string_view name) {
      e.kind = Expr::Kind::product;
      e.type = named_type(name);
      arguments(head, 2, [&] { e.children.push_back(parse_expr()); },
                [&] { e.children.push_back(parse_expr()); });
    };

    if (f == "Sh") {
      e.kind = Expr::Kind::shrikhande;
      if (_look.kind == K::open)
        fail(_look, "'Sh' takes no arguments");
    }
    else if (f == "K") {
      e.kind = Expr::Kind::complete;
      arguments(head, 1, [&] { e.numbers.push_back(parse_integer()); });
      if (e.numbers[0] == 0)
        fail(head, "K(q) needs q >= 1");
    }
    else if (f == "H") {
      e.kind = Expr::Kind::hamming;
      arguments(head, 2, [&] { e.numbers.push_back(parse_integer()); },
                [&] { e.numbers.push_back(parse_integer()); });
      if (e.numbers[1] == 0)
        fail(head, "H(d,q) needs q >= 1");
    }
    else if (f == "Doob") {
      e.kind = Expr::Kind::doob;
      arguments(head, 2, [&] { e.numbers.push_back(parse_integer()); },
                [&] { e.numbers.push_back(parse_integer()); });
    }
    else if (f == "file") {
      e.kind = Expr::Kind::file;
      arguments(head, 1, [&] { e.path = parse_string(); });
    }
    else if (f == "prod") {
      e.kind = Expr::Kind::product;
      arguments(head, 3, [&] { e.type = parse_type(); }, [&] { e.children.push_back(parse_expr()); },
                [&] { e.children.push_back(parse_expr()); });
    }
    else if (f == "cartesian")
      binary_product("cartesian");
    else if (f == "kronecker")
      binary_product("kronecker");
    else if (f == "strong")
      binary_product("strong");
    else if (f == "lex")
      binary_product("lexicographic");
    else if (f == "modular")
      binary_product("modular");
    else if (f == "weakmod")
      binary_product("weak_modular");
    else if (f == "orprod")
      binary_product("or_product");
    else if (f == "sw") {
      e.kind = Expr::Kind::switching;
      arguments(head, 2, [&] { e.children.push_back(parse_expr()); }, [&] { e.source = parse_source(); });
    }
    else if (f == "complement")
      unary(Expr::Kind::complement);
    else if (f == "bd")
      unary(Expr::Kind::bipartite_double);
    else if (f == "ebd")
      unary(Expr::Kind::extended_bipartite_double);
    else
      fail(head, "unknown function '" + f + "'");
    return e;
  }

  Lexer _lexer;
  Token _look;
};

inline auto quote(const std::string &s) -> std::string
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

inline auto print_source(const PartitionSource &s) -> std::string
{
  std::string out = s.kind == PartitionSource::Kind::diagonal ? "diag" : "file(" + quote(s.path) + ")";
  for (auto w : s.lifts)
    out = "lift(" + out + "," + std::to_string(w) + ")";
  return out;
}

} // namespace detail

inline auto parse(std::string_view src) -> Expr
{
  return detail::Parser(src).parse_all();
}

/// Canonical text; parse(print(e)) == e.
inline auto print(const Expr &e) -> std::string
{
  using K = Expr::Kind;
  auto args = [&](std::string head, const std::vector<std::string> &parts) {
    head += '(';
    for (std::size_t k = 0; k < parts.size(); ++k)
      head += (k ? "," : "") + parts[k];
    return head + ")";
  };
  switch (e.kind) {
  case K::complete:
    return args("K", {std::to_string(e.numbers[0])});
  case K::hamming:
    return args("H", {std::to_string(e.numbers[0]), std::to_string(e.numbers[1])});
  case K::shrikhande:
    return "Sh";
  case K::doob:
    return args("Doob", {std::to_string(e.numbers[0]), std::to_string(e.numbers[1])});
  case K::file:
    return args("file", {detail::quote(e.path)});
  case K::product:
    return args("prod", {e.type.code(), print(e.children[0]), print(e.children[1])});
  case K::switching:
    return args("sw", {print(e.children[0]), detail::print_source(e.source)});
  case K::complement:
    return args("complement", {print(e.children[0])});
  case K::bipartite_double:
    return args("bd", {print(e.children[0])});
  case K::extended_bipartite_double:
    return args("ebd", {print(e.children[0])});
  }
  return {};
}

/// Resolves a partition source against a graph of the given order.
inline auto resolve_partition(const PartitionSource &s, std::size_t order,
                              const std::filesystem::path &base_dir = {}) -> GMPartition
{
  std::size_t lifted = 1;
  for (auto w : s.lifts) {
    if (lifted > order / w)
      throw EvalError("partition source " + detail::print_source(s) + " does not fit a graph on " +
                      std::to_string(order) + " vertices");
    lifted *= w;
  }
  if (order % lifted != 0)
    throw EvalError("partition source " + detail::print_source(s) + " does not fit a graph on " +
                    std::to_string(order) + " vertices");
  const auto inner_order = order / lifted;

  GMPartition p;
  if (s.kind == PartitionSource::Kind::diagonal) {
    if (inner_order != 16)
      throw EvalError("'diag' is the diagonal partition of H(2,4) and needs a 16-vertex graph (got " +
                      std::to_string(inner_order) + "); supply a partition with file(\"...\") instead");
    p = diagonal_gm_partition_h24();
  }
  else
    p = load_partition((base_dir / s.path).string(), inner_order);
  for (auto w : s.lifts)
    p = lift_gm(p, w);
  return p;
}

/// Evaluates an expression; file paths are taken relative to base_dir.
inline auto eval(const Expr &e, const std::filesystem::path &base_dir = {}) -> Graph
{
  using K = Expr::Kind;
  switch (e.kind) {
  case K::complete:
    return complete_graph(e.numbers[0]);
  case K::hamming:
    return hamming(e.numbers[0], e.numbers[1]);
  case K::shrikhande:
    return shrikhande();
  case K::doob:
    return doob(e.numbers[0], e.numbers[1]);
  case K::file:
    return load_graph((base_dir / e.path).string());
  case K::product:
    return product(eval(e.children[0], base_dir), eval(e.children[1], base_dir), e.type);
  case K::switching: {
    auto g = eval(e.children[0], base_dir);
    return gm_switch(g, resolve_partition(e.source, g.size(), base_dir));
  }
  case K::complement:
    return complement(eval(e.children[0], base_dir));
  case K::bipartite_double:
    return bipartite_double(eval(e.children[0], base_dir));
  case K::extended_bipartite_double:
    return extended_bipartite_double(eval(e.children[0], base_dir));
  }
  throw EvalError("unknown expression kind");
}

inline auto eval(std::string_view src, const std::filesystem::path &base_dir = {}) -> Graph
{
  return eval(parse(src), base_dir);
}

} // namespace gmprod::dsl

#endif // GMPROD_DSL_HPP_
