#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shadow {

enum class Errc {
  dimension_mismatch,
  invalid_argument,
  point_inside_ball,
  no_intersection_with_sigma,
  no_root_in_range,
  invalid_params,
  search_failed,
  ray_misses_boundary,
  construction_failed,
  validation_failed,
  unbounded_domain,
  parse_error,
  unknown_identifier,
  evaluation_error,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax or identifier error in an implicit expression; `position` is the
/// zero-based character offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace shadow
