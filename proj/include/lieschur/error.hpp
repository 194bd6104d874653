#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lieschur {

enum class Errc {
  field_mismatch,
  dimension_mismatch,
  division_by_zero,
  index_out_of_range,
  jacobi_violation,
  duplicate_bracket,
  not_an_ideal,
  not_central_ideal,
  non_nilpotent,
  dimension_too_small,
  not_maximal_class,
  generator_search_failed,
  empty_word,
  word_too_short,
  tuple_space_too_large,
  char_two_field,
  abelian_input,
  unknown_name,
  syntax_error,
  field_spec_error,
  resource_limit,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code-name prefix.
  const std::string& detail() const noexcept { return detail_; }

  /// True for guards that refuse work because of its size, not its content.
  bool is_resource_error() const noexcept {
    return code_ == Errc::resource_limit || code_ == Errc::tuple_space_too_large;
  }

private:
  Errc code_;
  std::string detail_;
};

/// Jacobi failure on the basis triple (i, j, k), 0-based, with the defect rendered as text.
class JacobiViolation : public Error {
public:
  JacobiViolation(std::array<std::size_t, 3> triple, std::string defect)
      : Error(Errc::jacobi_violation, describe(triple, defect)), triple_(triple),
        defect_(std::move(defect)) {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
  const std::string& defect() const noexcept { return defect_; }

private:
  static std::string describe(const std::array<std::size_t, 3>& t, const std::string& defect) {
    return "Jacobi identity fails on (x" + std::to_string(t[0] + 1) + ", x" +
           std::to_string(t[1] + 1) + ", x" + std::to_string(t[2] + 1) + "), defect " + defect;
  }

  std::array<std::size_t, 3> triple_;
  std::string defect_;
};

/// Parse failure with 1-based line context.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, const std::string& what, Errc code = Errc::syntax_error)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace lieschur
