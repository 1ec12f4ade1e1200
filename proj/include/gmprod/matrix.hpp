#ifndef GMPROD_MATRIX_HPP_
#define GMPROD_MATRIX_HPP_

// Small dense matrices over exact element types (integers, rationals), used to
// state the partition and switching identities literally.

#include "errors.hpp"
#include "graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gmprod
{

template <typename T>
class Matrix
{
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols, T{}) {}

  static auto identity(std::size_t n) -> Matrix
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T{1};
    return m;
  }

  static auto ones(std::size_t rows, std::size_t cols) -> Matrix
  {
    Matrix m(rows, cols);
    for (auto &x : m._data)
      x = T{1};
    return m;
  }

  auto rows() const -> std::size_t { return _rows; }
  auto cols() const -> std::size_t { return _cols; }

  auto operator()(std::size_t r, std::size_t c) -> T & { return _data[r * _cols + c]; }
  auto operator()(std::size_t r, std::size_t c) const -> const T & { return _data[r * _cols + c]; }

  auto transposed() const -> Matrix
  {
    Matrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r)
      for (std::size_t c = 0; c < _cols; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows and columns picked from the given index lists, in that order.
  auto submatrix(const std::vector<Vertex> &row_idx, const std::vector<Vertex> &col_idx) const -> Matrix
  {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t c = 0; c < col_idx.size(); ++c)
        s(r, c) = (*this)(row_idx[r], col_idx[c]);
    return s;
  }

  friend auto operator==(const Matrix &, const Matrix &) -> bool = default;

  friend auto operator+(const Matrix &a, const Matrix &b) -> Matrix
  {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c._data.size(); ++k)
      c._data[k] += b._data[k];
    return c;
  }

  friend auto operator-(const Matrix &a, const Matrix &b) -> Matrix
  {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c._data.size(); ++k)
      c._data[k] -= b._data[k];
    return c;
  }

  friend auto operator*(const Matrix &a, const Matrix &b) -> Matrix
  {
    if (a._cols != b._rows)
      throw InvalidArgument("matrix product: inner dimensions differ");
    Matrix c(a._rows, b._cols);
    const T zero{};
    for (std::size_t i = 0; i < a._rows; ++i)
      for (std::size_t k = 0; k < a._cols; ++k) {
        const T &aik = a(i, k);
        if (aik == zero)
          continue;
        for (std::size_t j = 0; j < b._cols; ++j)
          if (b(k, j) != zero)
            c(i, j) += aik * b(k, j);
      }
    return c;
  }

private:
  static auto check_same_shape(const Matrix &a, const Matrix &b) -> void
  {
    if (a._rows != b._rows || a._cols != b._cols)
      throw InvalidArgument("matrix shapes differ");
  }

  std::size_t _rows = 0, _cols = 0;
  std::vector<T> _data;
};

/// Kronecker product; entry ((i,k),(j,l)) at row i*b.rows()+k, column j*b.cols()+l.
template <typename T>
auto kron(const Matrix<T> &a, const Matrix<T> &b) -> Matrix<T>
{
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

using IntMatrix = Matrix<std::int64_t>;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = Matrix<Rational>;

template <typename T = std::int64_t>
auto adjacency_matrix(const Graph &g) -> Matrix<T>
{
  Matrix<T> a(g.size(), g.size());
  for (auto [u, v] : g.edges()) {
    a(u, v) = T{1};
    a(v, u) = T{1};
  }
  return a;
}

/// Inverse of adjacency_matrix; the matrix must be a symmetric 0/1 table with zero diagonal.
template <typename T>
auto graph_from_matrix(const Matrix<T> &a) -> Graph
{
  if (a.rows() != a.cols())
    throw InvalidArgument("adjacency matrix must be square");
  GraphBuilder b(a.rows());
  for (std::size_t u = 0; u < a.rows(); ++u) {
    if (a(u, u) != T{0})
      throw InvalidArgument("adjacency matrix has a nonzero diagonal entry");
    for (std::size_t v = u + 1; v < a.cols(); ++v) {
      if (a(u, v) != a(v, u))
        throw InvalidArgument("adjacency matrix is not symmetric");
      if (a(u, v) == T{1})
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      else if (a(u, v) != T{0})
        throw InvalidArgument("adjacency matrix entry is not 0/1");
    }
  }
  return std::move(b).build();
}

} // namespace gmprod

#endif // GMPROD_MATRIX_HPP_
