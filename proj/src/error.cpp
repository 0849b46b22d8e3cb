#include "k3aut/error.hpp"

#include "k3aut/integer.hpp"

#include <cctype>

namespace k3aut {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::SquareInput: return "square_input";
    case ErrorCode::OnlyTrivial: return "only_trivial";
    case ErrorCode::MismatchedD: return "mismatched_d";
    case ErrorCode::ZeroM: return "zero_m";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::NotIsometry: return "not_isometry";
    case ErrorCode::ZeroK: return "zero_k";
    case ErrorCode::SquareDiscriminant: return "square_discriminant";
    case ErrorCode::ZeroClass: return "zero_class";
    case ErrorCode::NotHyperbolic: return "not_hyperbolic";
    case ErrorCode::NoHyperbolicIsometry: return "no_hyperbolic_isometry";
    case ErrorCode::NotRealizable: return "not_realizable";
    case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

bool is_domain_error(ErrorCode code) noexcept
{
    return code != ErrorCode::Internal && code != ErrorCode::NoHyperbolicIsometry;
}

Integer parse_integer(std::string_view text, std::string_view field)
{
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = i < s.size();
    for (std::size_t j = i; j < s.size(); ++j) ok = ok && std::isdigit(static_cast<unsigned char>(s[j]));
    if (!ok) throw Error(ErrorCode::InvalidArgument, std::string(field) + ": not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace k3aut
