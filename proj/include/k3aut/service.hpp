#pragma once

#include "k3aut/aut.hpp"
#include "k3aut/record.hpp"

#include <optional>
#include <string_view>

namespace k3aut {

EntropyRecord entropy_record(const Mat2& m, int digits);

/// Full classification of ((2a, b), (b, 2c)). Throws Error on invalid input.
ClassificationRecord classify_record(const Integer& a, const Integer& b, const Integer& c, int digits);

/// Classification of the lattice spanned by a hyperplane class and a curve
/// of the given degree and genus on a quartic. Throws Error(NotRealizable).
ClassificationRecord quartic_record(const Integer& degree, const Integer& genus, int digits);

/// A record carrying only the input echo and the error.
ClassificationRecord error_record(InputEcho input, const std::string& code, const std::string& message);

/// Processes one JSONL request ({"a","b","c"} or {"deg","genus"}; integers or
/// decimal strings). Never throws for bad input: it becomes an error record.
ClassificationRecord record_from_request_line(std::string_view line, int digits);

/// Orbit representatives and fundamental solutions of u^2 - d v^2 = m,
/// optionally with every solution |v| <= all_below.
nlohmann::json pell_json(const Integer& d, const Integer& m, const std::optional<Integer>& all_below);

/// Orbit representatives of classes with D^2 = 2k, in the input basis.
nlohmann::json represent_json(const Integer& a, const Integer& b, const Integer& c, const Integer& k);

/// (x_n, y_n) = h^n (x0, y0) with ratios x_n / y_n and residuals |a r^2 + b r + c|.
nlohmann::json orbit_json(const Integer& a, const Integer& b, const Integer& c, const Integer& x0,
                          const Integer& y0, long steps, int digits);

/// Entropy of h, of the generator (and its square when anti-symplectic) and
/// of the involutions; or of one given isometry (input basis) when `matrix` is set.
nlohmann::json entropy_json(const Integer& a, const Integer& b, const Integer& c, const std::optional<Mat2>& matrix,
                            int digits);

} // namespace k3aut
