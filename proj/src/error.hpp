#pragma once

#include <stdexcept>
#include <string>

namespace leafscope {

enum class Errc {
  parse,
  dimension_mismatch,
  zero_vector,
  convergence,
  not_an_eigenvalue,
  not_stable,
  not_orthonormal,
  not_orthogonal,
  not_normal,
  degenerate_geodesic,
  degenerate_beta,
  parallel_eigenvectors,
  equal_eigenvalues,
  dependent_vectors,
  orthogonal_condition,
  domain,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& what)
      : Error(Errc::parse, what), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace leafscope
