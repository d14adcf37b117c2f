#pragma once

#include "tpalg/identities.hpp"
#include "tpalg/scalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace tpalg::witt {

// Finitely supported rational combination Σ c_k e_k of the Z-indexed basis.
// Indices are overflow-checked on addition.
class ZElement {
public:
    ZElement() = default;

    static ZElement basis(long long k) { return with_term(k, Scalar::rational(1, 1)); }
    static ZElement with_term(long long k, const Scalar& c);

    // "k:coeff,k:coeff" with rational coefficients; "0" or "" is zero.
    static ZElement parse(const std::string& text);
    std::string str() const;

    const std::map<long long, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long k, const Scalar& c);
    ZElement operator+(const ZElement& o) const;
    ZElement operator-(const ZElement& o) const;
    ZElement scaled(const Scalar& c) const;
    bool operator==(const ZElement& o) const { return terms_ == o.terms_; }

private:
    std::map<long long, Scalar> terms_; // no zero coefficients stored
};

// Witt bracket {e_i, e_j} = (i-j) e_{i+j} and the Laurent product
// e_i∘e_j = e_{i+j} mutated by q: x ·_q y = x∘q∘y.
//
// Test hooks: bracket_shift deforms the target index to i+j+shift (this
// stays a Lie bracket for every shift — it is the Witt rule reindexed);
// bracket_weight w replaces the coefficient by i^w − j^w, which for w = 3
// genuinely breaks the Jacobi identity. w must be odd to keep the rule skew.
struct ZAlgebraSpec {
    ZElement q = ZElement::basis(0);
    long long bracket_shift = 0;
    int bracket_weight = 1;
};

ZElement z_bracket(const ZAlgebraSpec& spec, const ZElement& x,
                   const ZElement& y);
ZElement z_product(const ZAlgebraSpec& spec, const ZElement& x,
                   const ZElement& y);

// The plain (unmutated) Laurent convolution x∘y.
ZElement laurent_product(const ZElement& x, const ZElement& y);

// q⁻¹ when q is a nonzero monomial c·e_k (the units of the Laurent ring),
// nullopt otherwise; throws Error on q = 0.
std::optional<ZElement> laurent_invertible(const ZElement& q);

struct WindowReport {
    IdentityId identity;
    bool pass = true;
    std::optional<std::array<long long, 3>> counterexample;
    std::optional<ZElement> defect;
    // Window instances are exact global statements but cover finitely many
    // triples; they are evidence, not certification.
    bool evidence_only = true;
};

// Checks AssocCirc, JacobiSuper or TpLeibnizSuper on all basis triples with
// indices in [lo, hi]; products may leave the window, equality is tested in
// the full span.
WindowReport window_check(const ZAlgebraSpec& spec, IdentityId identity,
                          long long lo, long long hi);

// Element of the doubled space W ⊕ Wˢ with the Kantor product of the
// mutated Laurent-Witt algebra (ungraded source):
//   x*y = x·_q y, xˢ*y = x*yˢ = (x·_q y)ˢ, xˢ*yˢ = {x,y}.
struct ZDoubleElement {
    ZElement plain;
    ZElement starred;

    bool operator==(const ZDoubleElement& o) const = default;
};

ZDoubleElement witt_double_product(const ZAlgebraSpec& spec,
                                   const ZDoubleElement& x,
                                   const ZDoubleElement& y);

} // namespace tpalg::witt
