#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orbchi/pipeline.hpp"
#include "orbchi/rational.hpp"

namespace orbchi {

enum class OutputFormat { plain, csv, json, latex };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// 15 significant digits, for eyeballing only.
std::string decimal_string(const Rational& r);

/// LaTeX form: "0", "-3", "\frac{1}{12}", "-\frac{1}{24}".
std::string latex_rational(const Rational& r);

/// Renders the table; rationals are always exact, decimals are appended
/// (and labelled as approximations) only when with_decimal is set.
std::string render_table(const EulerTable& table, OutputFormat format, bool with_decimal = false);

} // namespace orbchi
