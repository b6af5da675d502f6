#include "horadam/error.hpp"

namespace horadam {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::mismatched_disc: return "mismatched-disc";
    case ErrorKind::zero_to_negative_power: return "zero-to-negative-power";
    case ErrorKind::nonreal_disc: return "nonreal-disc";
    case ErrorKind::zero_discriminant: return "zero-discriminant";
    case ErrorKind::zero_q: return "zero-q";
    case ErrorKind::precondition: return "precondition-violation";
    case ErrorKind::zero_denominator: return "zero-denominator-at";
    case ErrorKind::e_w_zero: return "e_w-zero";
    case ErrorKind::u_n_zero: return "u_n-zero";
    case ErrorKind::u_2km_zero: return "u_2km-zero";
    case ErrorKind::divergent_spec: return "divergent-spec";
    case ErrorKind::bad_parameter: return "bad-parameter";
    case ErrorKind::iteration_cap: return "iteration-cap";
    case ErrorKind::range: return "range";
    case ErrorKind::window_underflow: return "window-underflow";
    case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> index)
{
    std::string message(to_string(kind));
    if (index)
        message += "(" + std::to_string(*index) + ")";
    if (!detail.empty())
        message += ": " + detail;
    return message;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> index)
    : std::runtime_error(compose(kind, detail, index)), kind_(kind), index_(index)
{
}

} // namespace horadam
