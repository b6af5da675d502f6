#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horadam {

enum class ErrorKind {
    division_by_zero,
    mismatched_disc,
    zero_to_negative_power,
    nonreal_disc,
    zero_discriminant,
    zero_q,
    precondition,
    zero_denominator,
    e_w_zero,
    u_n_zero,
    u_2km_zero,
    divergent_spec,
    bad_parameter,
    iteration_cap,
    range,
    window_underflow,
    parse,
};

// Stable taxonomy names; these appear in CLI diagnostics and report skip counts.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::int64_t> index_;
};

} // namespace horadam
