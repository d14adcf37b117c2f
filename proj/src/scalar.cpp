#include "tpalg/scalar.hpp"

#include <cctype>

namespace tpalg {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

// Fermat inverse; p prime, a != 0 mod p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return result;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p == 2)
        throw FieldMismatchError("characteristic two is not supported");
    if (!is_prime(p))
        throw FieldMismatchError("GF(p) modulus must be prime, got " +
                                 std::to_string(p));
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::from_int(const FieldSpec& f, long n) {
    if (f.is_rationals()) return Scalar(f, mpq_class(n), 0);
    long r = n % static_cast<long>(f.p);
    if (r < 0) r += static_cast<long>(f.p);
    return Scalar(f, mpq_class(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(long n, long d) {
    if (d == 0) throw Error("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(q), 0);
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
    if (f.is_rationals())
        throw FieldMismatchError("residue constructor needs a prime field");
    return Scalar(f, mpq_class(0), r % f.p);
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (f.is_rationals()) {
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den =
            slash == std::string_view::npos ? "1" : body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational '" + std::string(text) + "'");
        mpz_class nz(std::string(num), 10), dz(std::string(den), 10);
        if (dz == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        mpq_class q(nz, dz);
        q.canonicalize();
        if (negative) q = -q;
        return Scalar(f, std::move(q), 0);
    }
    if (!all_digits(body))
        throw ParseError("bad residue '" + std::string(text) + "'");
    mpz_class z(std::string(body), 10);
    mpz_class r = z % mpz_class(static_cast<unsigned long>(f.p));
    std::uint64_t v = r.get_ui() % f.p;
    if (negative && v != 0) v = f.p - v;
    return Scalar(f, mpq_class(0), v);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar field mismatch: " + field_.str() +
                                 " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, rat_ + o.rat_, 0);
    std::uint64_t s = res_ + o.res_; // p < 2^63, no overflow
    if (s >= field_.p) s -= field_.p;
    return Scalar(field_, mpq_class(0), s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, rat_ * o.rat_, 0);
    return Scalar(field_, mpq_class(0), mulmod(res_, o.res_, field_.p));
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -rat_, 0);
    return Scalar(field_, mpq_class(0), res_ == 0 ? 0 : field_.p - res_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero");
    if (field_.is_rationals()) return Scalar(field_, 1 / rat_, 0);
    return Scalar(field_, mpq_class(0), invmod(res_, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (!field_.is_rationals()) return std::to_string(res_);
    return rat_.get_str();
}

} // namespace tpalg
