#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skab {

enum class Errc {
    empty_input,
    non_coprime,
    overflow,
    unsupported_s,
    duplicate_residue,
    out_of_domain,
    sum_mismatch,
    duplicate_gap,
    non_integer_result,
    not_closed,
    no_witness,
    unsupported_combination,
    table_mismatch,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace skab
