#ifndef GMPROD_ERRORS_HPP_
#define GMPROD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmprod
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, partition, permutation or certificate text.
class FormatError : public Error
{
public:
  FormatError(std::size_t line, const std::string &what)
  : Error("line " + std::to_string(line) + ": " + what), _line(line)
  {}

  auto line() const -> std::size_t { return _line; }

private:
  std::size_t _line;
};

/// A requested object would exceed one of the hard size budgets.
class SizeLimitError : public Error
{
public:
  using Error::Error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

} // namespace gmprod

#endif // GMPROD_ERRORS_HPP_
