#include "ippg/money.hpp"

#include <array>
#include <cctype>
#include <cstdlib>

#include "ippg/error.hpp"

namespace ippg {
namespace {

using int128 = __int128;

constexpr int64_t kInt64Max = INT64_MAX;

int64_t checked_narrow(int128 value, const char* what) {
    if (value > static_cast<int128>(kInt64Max) || value < -static_cast<int128>(kInt64Max)) {
        throw Error(ErrorCode::NumericOverflow, what);
    }
    return static_cast<int64_t>(value);
}

std::string group_digits(int64_t value) {
    return std::to_string(value);
}

}  // namespace

Money Money::parse(std::string_view text) {
    const auto fail = [&](const char* why) -> Money {
        throw Error(ErrorCode::Parse,
                    std::string("money value \"") + std::string(text) + "\": " + why);
    };

    size_t i = 0;
    const size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }

    int128 mantissa = 0;
    int digits = 0;
    int frac_digits = 0;
    bool seen_dot = false;
    for (; i < n; ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_dot) return fail("two decimal points");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) break;
        if (digits >= 30) return fail("too many digits");
        mantissa = mantissa * 10 + (c - '0');
        ++digits;
        if (seen_dot) ++frac_digits;
    }
    if (digits == 0) return fail("no digits");

    int64_t exponent = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        int exp_digits = 0;
        for (; i < n; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
            if (exp_digits >= 6) return fail("exponent out of range");
            exponent = exponent * 10 + (text[i] - '0');
            ++exp_digits;
        }
        if (exp_digits == 0) return fail("empty exponent");
        if (exp_negative) exponent = -exponent;
    }
    if (i != n) return fail("trailing characters");

    // value = mantissa * 10^(exponent - frac_digits); nanos = value * 10^9.
    int64_t scale10 = exponent - frac_digits + 9;
    int128 nanos = mantissa;
    while (scale10 > 0 && nanos != 0) {
        nanos *= 10;
        if (nanos > static_cast<int128>(kInt64Max) * 1000) return fail("out of range");
        --scale10;
    }
    if (scale10 > 0) scale10 = 0;  // mantissa was zero
    while (scale10 < 0) {
        if (nanos % 10 != 0) return fail("not representable at nano-USD resolution");
        nanos /= 10;
        ++scale10;
    }
    if (negative) nanos = -nanos;
    return Money(checked_narrow(nanos, "parsed money value"));
}

Money Money::operator+(Money other) const {
    int64_t out = 0;
    if (__builtin_add_overflow(nanos_, other.nanos_, &out)) {
        throw Error(ErrorCode::NumericOverflow, "money addition");
    }
    return Money(out);
}

Money Money::operator-(Money other) const {
    int64_t out = 0;
    if (__builtin_sub_overflow(nanos_, other.nanos_, &out)) {
        throw Error(ErrorCode::NumericOverflow, "money subtraction");
    }
    return Money(out);
}

Money Money::operator*(int64_t count) const {
    int64_t out = 0;
    if (__builtin_mul_overflow(nanos_, count, &out)) {
        throw Error(ErrorCode::NumericOverflow, "money multiplication");
    }
    return Money(out);
}

Money& Money::operator+=(Money other) {
    *this = *this + other;
    return *this;
}

std::string Money::to_decimal_string() const {
    const bool neg = nanos_ < 0;
    // Avoid UB on INT64_MIN; checked arithmetic never produces it.
    uint64_t abs = neg ? static_cast<uint64_t>(-(nanos_ + 1)) + 1 : static_cast<uint64_t>(nanos_);
    uint64_t whole = abs / kNanosPerUsd;
    uint64_t frac = abs % kNanosPerUsd;

    std::string out = neg ? "-" : "";
    out += group_digits(static_cast<int64_t>(whole));
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), 9 - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

std::string Money::to_fixed_string(int decimals) const {
    if (decimals < 0 || decimals > 9) {
        throw Error(ErrorCode::InvalidArgument, "decimals must be in [0, 9]");
    }
    int64_t divisor = 1;
    for (int i = 0; i < 9 - decimals; ++i) divisor *= 10;

    const bool neg = nanos_ < 0;
    uint64_t abs = neg ? static_cast<uint64_t>(-(nanos_ + 1)) + 1 : static_cast<uint64_t>(nanos_);
    // Round half away from zero at the requested precision.
    uint64_t scaled = (abs + static_cast<uint64_t>(divisor) / 2) / static_cast<uint64_t>(divisor);

    uint64_t unit = 1;
    for (int i = 0; i < decimals; ++i) unit *= 10;
    uint64_t whole = scaled / unit;
    uint64_t frac = scaled % unit;

    std::string out = (neg && scaled != 0) ? "-" : "";
    out += std::to_string(whole);
    if (decimals > 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), decimals - static_cast<int>(f.size()), '0');
        out += "." + f;
    }
    return out;
}

std::string Money::to_scientific_string() const {
    if (nanos_ == 0) return "0";
    const bool neg = nanos_ < 0;
    uint64_t abs = neg ? static_cast<uint64_t>(-(nanos_ + 1)) + 1 : static_cast<uint64_t>(nanos_);

    std::string digits = std::to_string(abs);
    // value = digits * 1e-9; exponent of the leading digit:
    int exponent = static_cast<int>(digits.size()) - 1 - 9;
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string mantissa = digits.substr(0, 1);
    mantissa += ".";
    mantissa += digits.size() > 1 ? digits.substr(1) : "0";

    std::string out = neg ? "-" : "";
    out += mantissa;
    out += "e";
    out += exponent < 0 ? "-" : "+";
    int abs_exp = exponent < 0 ? -exponent : exponent;
    if (abs_exp < 10) out += "0";
    out += std::to_string(abs_exp);
    return out;
}

}  // namespace ippg
