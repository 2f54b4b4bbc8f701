#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ippg {

// Signed fixed-point USD amount at nano-dollar (1e-9 USD) resolution.
//
// Every per-token price in the built-in profiles (e.g. 2.5e-6 USD) is an
// exact multiple of 1e-9, so prices, per-request costs, and their sums and
// differences carry no floating-point drift. Conversion to double happens
// only at the reporting edge (percentages).
class Money {
public:
    static constexpr int64_t kNanosPerUsd = 1'000'000'000;

    constexpr Money() = default;

    static constexpr Money from_nanos(int64_t nanos) { return Money(nanos); }

    // Exact parser for plain decimal and scientific notation ("0.0000025",
    // "2.5e-6", "-1.2E-03"). Throws ErrorCode::Parse when the text is not a
    // number or is not representable at nano-USD resolution, and
    // ErrorCode::NumericOverflow when it exceeds the int64 range.
    static Money parse(std::string_view text);

    constexpr int64_t nanos() const { return nanos_; }
    double usd() const { return static_cast<double>(nanos_) / kNanosPerUsd; }
    constexpr bool is_negative() const { return nanos_ < 0; }
    constexpr bool is_zero() const { return nanos_ == 0; }

    // Checked arithmetic; throws ErrorCode::NumericOverflow.
    Money operator+(Money other) const;
    Money operator-(Money other) const;
    constexpr Money operator-() const { return Money(-nanos_); }
    Money operator*(int64_t count) const;
    Money& operator+=(Money other);

    auto operator<=>(const Money&) const = default;

    // Minimal decimal form, e.g. "0.0000025", "-1.2", "3".
    std::string to_decimal_string() const;

    // Fixed number of decimals (0..9), rounded half away from zero.
    // to_fixed_string(6) matches the cost columns of the report tables.
    std::string to_fixed_string(int decimals) const;

    // Canonical scientific form used by profile files, e.g. "2.5e-06".
    // parse(to_scientific_string()) is the identity.
    std::string to_scientific_string() const;

private:
    constexpr explicit Money(int64_t nanos) : nanos_(nanos) {}

    int64_t nanos_ = 0;
};

}  // namespace ippg
