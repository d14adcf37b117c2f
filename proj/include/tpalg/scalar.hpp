#pragma once

#include "tpalg/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tpalg {

// Base field: the rationals, or a prime field GF(p) with p an odd prime.
// Characteristic two is rejected outright; every identity in this library
// divides by 2 at some point.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0; // modulus, meaningful iff kind == PrimeField

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool is_rationals() const { return kind == Kind::Rationals; }
    bool operator==(const FieldSpec&) const = default;

    // "Q" or "GF(p)"
    std::string str() const;
};

// Exact field element. Rationals are kept canonical (lowest terms, positive
// denominator); prime-field residues are kept reduced into [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long n);
    // n/d over Q; d must be nonzero.
    static Scalar rational(long n, long d);
    static Scalar residue(const FieldSpec& f, std::uint64_t r);
    // Shared textual grammar: rationals "n" or "n/d"; residues as (signed)
    // decimal integers, reduced mod p on input, emitted in [0, p).
    static Scalar parse(const FieldSpec& f, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar operator-() const;
    Scalar inv() const; // throws Error on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical textual form (round-trips through parse()).
    std::string str() const;

private:
    Scalar(FieldSpec f, mpq_class q, std::uint64_t r)
        : field_(f), rat_(std::move(q)), res_(r) {}

    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class rat_;      // value iff rationals
    std::uint64_t res_;  // value iff prime field
};

} // namespace tpalg
