#pragma once

#include "k3aut/lattice.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3aut {

const char* version_string() noexcept;

/// What the caller asked for. `raw` holds a request line that could not be parsed.
struct InputEcho {
    std::optional<Integer> a, b, c;
    std::optional<Integer> deg, genus;
    std::optional<std::string> raw;

    bool operator==(const InputEcho&) const = default;
};

struct LatticeRecord {
    Integer a, b, c; ///< normalized coefficients (a > 0)
    Mat2 basis;      ///< columns: normalized basis in input coordinates

    bool operator==(const LatticeRecord&) const = default;
};

/// Entropy log rho(M) as a decimal plus the exact data it is computed from:
/// rho is the largest root of x^2 - trace x + determinant, whose
/// discriminant is trace^2 - 4 determinant.
struct EntropyRecord {
    std::string value;
    Integer trace;
    Integer determinant;
    Integer discriminant;

    bool operator==(const EntropyRecord&) const = default;
};

struct GeneratorRecord {
    Mat2 matrix;
    long power = 0;
    int epsilon = 0;
    EntropyRecord entropy;
    std::optional<EntropyRecord> entropy_squared; ///< entropy of g^2, emitted when epsilon = -1

    bool operator==(const GeneratorRecord&) const = default;
};

struct WitnessRecord {
    std::string kind; ///< "square-discriminant" or "minus-two-class"
    Integer x, y;     ///< input coordinates
    Integer square;

    bool operator==(const WitnessRecord&) const = default;
};

struct ErrorRecord {
    std::string code;
    std::string message;

    bool operator==(const ErrorRecord&) const = default;
};

/// One classified lattice. Matrices and classes are in the input basis.
struct ClassificationRecord {
    std::string tool = "k3aut";
    std::string version = version_string();
    InputEcho input;
    std::optional<LatticeRecord> lattice;
    std::optional<Integer> d;
    std::optional<bool> square;
    std::optional<std::array<Integer, 2>> discriminant_group;
    std::optional<std::string> variant; ///< finite | cyclic | dihedral | degenerate
    std::optional<WitnessRecord> witness;
    std::optional<Mat2> h;
    std::optional<GeneratorRecord> generator;
    std::vector<Mat2> involutions;
    std::optional<Mat2> sigma, tau;
    std::vector<std::string> caveats;
    std::optional<ErrorRecord> error;

    bool operator==(const ClassificationRecord&) const = default;
};

nlohmann::json integer_to_json(const Integer& n);
Integer integer_from_json(const nlohmann::json& j, std::string_view field);
nlohmann::json matrix_to_json(const Mat2& m);
Mat2 matrix_from_json(const nlohmann::json& j, std::string_view field);

nlohmann::json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const nlohmann::json& j);

} // namespace k3aut
