#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorKind {
  invalid_modulus,
  size_bound_exceeded,
  ring_mismatch,
  improper_ideal,
  not_an_ideal,
  n_too_large,
  axiom_violation,
  unsupported_ideal_shape,
  non_homogeneous_ideal,
  invalid_mult_set,
  hom_invalid,
  invalid_module,
  shape_mismatch,
  parse_error,
  unknown_theorem,
  bad_conjecture,
  bad_config,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type. `position` is set
/// for DSL errors and counts characters from 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace ringlab
