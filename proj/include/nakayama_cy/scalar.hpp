#pragma once

// Scalar types for the exact elimination in matrix.hpp.  Both provide
// + - * and exact_div(a, b), which divides when b is known to divide a.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nakayama {

/// 64-bit integer that throws on overflow or inexact division.
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

    constexpr std::int64_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("CheckedInt addition overflow");
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("CheckedInt subtraction overflow");
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("CheckedInt multiplication overflow");
        return r;
    }
    friend CheckedInt operator-(CheckedInt a) { return CheckedInt{0} - a; }
    CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }

    friend CheckedInt exact_div(CheckedInt a, CheckedInt b)
    {
        if (b.v_ == 0 || a.v_ % b.v_ != 0)
            throw std::domain_error("inexact division " + std::to_string(a.v_) + " / " + std::to_string(b.v_));
        return a.v_ / b.v_;
    }

    friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
    friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

private:
    std::int64_t v_ = 0;
};

/// Element of the prime field Z/P.
template <std::uint32_t P>
class ModP {
    static_assert(P > 2 && P < (1u << 31), "modulus must be an odd prime below 2^31");

public:
    static constexpr std::uint32_t modulus = P;

    constexpr ModP() = default;
    constexpr ModP(std::int64_t v) // NOLINT(google-explicit-constructor)
        : v_(static_cast<std::uint32_t>(((v % std::int64_t{P}) + P) % P))
    {
    }

    constexpr std::uint32_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr ModP operator+(ModP a, ModP b) { return from_raw((a.v_ + b.v_) % P); }
    friend constexpr ModP operator-(ModP a, ModP b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend constexpr ModP operator*(ModP a, ModP b)
    {
        return from_raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % P));
    }
    friend constexpr ModP operator-(ModP a) { return from_raw((P - a.v_) % P); }
    constexpr ModP& operator+=(ModP b) { return *this = *this + b; }

    constexpr ModP inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("inverse of zero in Z/p");
        ModP result = from_raw(1), base = *this;
        for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
            if (e & 1u)
                result = result * base;
            base = base * base;
        }
        return result;
    }

    friend constexpr ModP exact_div(ModP a, ModP b) { return a * b.inverse(); }

    friend constexpr bool operator==(ModP, ModP) = default;
    friend std::ostream& operator<<(std::ostream& os, ModP x) { return os << x.v_; }

private:
    static constexpr ModP from_raw(std::uint32_t v)
    {
        ModP r;
        r.v_ = v;
        return r;
    }

    std::uint32_t v_ = 0;
};

template <class T>
concept ExactScalar = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { exact_div(a, b) } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    T(std::int64_t{1});
};

} // namespace nakayama
