#include "tpalg/witt.hpp"

#include "tpalg/errors.hpp"

#include <sstream>

namespace tpalg::witt {

namespace {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error("basis index overflow");
    return out;
}

long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Error("basis index overflow");
    return out;
}

Scalar q_int(long long n) {
    static_assert(sizeof(long) == sizeof(long long));
    return Scalar::from_int(FieldSpec::rationals(), static_cast<long>(n));
}

} // namespace

ZElement ZElement::with_term(long long k, const Scalar& c) {
    ZElement e;
    e.add_term(k, c);
    return e;
}

void ZElement::add_term(long long k, const Scalar& c) {
    if (!c.field().is_rationals())
        throw FieldMismatchError("Z-indexed elements are rational");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ZElement ZElement::parse(const std::string& text) {
    ZElement out;
    if (text.empty() || text == "0") return out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected k:coeff in '" + item + "'");
        long long k;
        try {
            std::size_t pos = 0;
            k = std::stoll(item.substr(0, colon), &pos);
            if (pos != colon) throw ParseError("");
        } catch (...) {
            throw ParseError("bad index in '" + item + "'");
        }
        out.add_term(k, Scalar::parse(FieldSpec::rationals(),
                                      item.substr(colon + 1)));
    }
    return out;
}

std::string ZElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += ",";
        out += std::to_string(k) + ":" + c.str();
    }
    return out;
}

ZElement ZElement::operator+(const ZElement& o) const {
    ZElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

ZElement ZElement::operator-(const ZElement& o) const {
    ZElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

ZElement ZElement::scaled(const Scalar& c) const {
    ZElement out;
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

ZElement laurent_product(const ZElement& x, const ZElement& y) {
    ZElement out;
    for (const auto& [i, c] : x.terms())
        for (const auto& [j, d] : y.terms())
            out.add_term(checked_add(i, j), c * d);
    return out;
}

ZElement z_product(const ZAlgebraSpec& spec, const ZElement& x,
                   const ZElement& y) {
    return laurent_product(laurent_product(x, spec.q), y);
}

ZElement z_bracket(const ZAlgebraSpec& spec, const ZElement& x,
                   const ZElement& y) {
    if (spec.bracket_weight < 1 || spec.bracket_weight % 2 == 0)
        throw Error("bracket weight must be odd and positive");
    auto weight_pow = [&](long long n) {
        long long out = 1;
        for (int t = 0; t < spec.bracket_weight; ++t)
            if (__builtin_mul_overflow(out, n, &out))
                throw Error("basis index overflow");
        return out;
    };
    ZElement out;
    for (const auto& [i, c] : x.terms())
        for (const auto& [j, d] : y.terms())
            out.add_term(
                checked_add(checked_add(i, j), spec.bracket_shift),
                c * d * q_int(checked_sub(weight_pow(i), weight_pow(j))));
    return out;
}

std::optional<ZElement> laurent_invertible(const ZElement& q) {
    if (q.is_zero()) throw Error("zero element has no inverse");
    if (q.terms().size() != 1) return std::nullopt;
    const auto& [k, c] = *q.terms().begin();
    return ZElement::with_term(-k, c.inv());
}

WindowReport window_check(const ZAlgebraSpec& spec, IdentityId identity,
                          long long lo, long long hi) {
    if (lo > hi) throw DimensionError("window lower bound exceeds upper");
    if (identity != IdentityId::AssocCirc &&
        identity != IdentityId::JacobiSuper &&
        identity != IdentityId::TpLeibnizSuper)
        throw UnsupportedError("window checks cover ASSOC_CIRC, JACOBI_SUPER "
                               "and TP_LEIBNIZ_SUPER");
    Scalar two = Scalar::from_int(FieldSpec::rationals(), 2);
    auto circ = [&](const ZElement& x, const ZElement& y) {
        return z_product(spec, x, y);
    };
    auto br = [&](const ZElement& x, const ZElement& y) {
        return z_bracket(spec, x, y);
    };
    auto defect_at = [&](const ZElement& x, const ZElement& y,
                         const ZElement& z) {
        switch (identity) {
        case IdentityId::AssocCirc:
            return circ(circ(x, y), z) - circ(x, circ(y, z));
        case IdentityId::JacobiSuper:
            return br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y);
        default: // TpLeibnizSuper
            return circ(x, br(y, z)).scaled(two) - br(circ(x, y), z) -
                   br(y, circ(x, z));
        }
    };
    WindowReport report{identity, true, {}, {}, true};
    for (long long i = lo; i <= hi; ++i)
        for (long long j = lo; j <= hi; ++j)
            for (long long k = lo; k <= hi; ++k) {
                ZElement d = defect_at(ZElement::basis(i), ZElement::basis(j),
                                       ZElement::basis(k));
                if (!d.is_zero()) {
                    report.pass = false;
                    report.counterexample = {i, j, k};
                    report.defect = std::move(d);
                    return report;
                }
            }
    return report;
}

ZDoubleElement witt_double_product(const ZAlgebraSpec& spec,
                                   const ZDoubleElement& x,
                                   const ZDoubleElement& y) {
    ZDoubleElement out;
    out.plain = z_product(spec, x.plain, y.plain) +
                z_bracket(spec, x.starred, y.starred);
    out.starred = z_product(spec, x.plain, y.starred) +
                  z_product(spec, x.starred, y.plain);
    return out;
}

} // namespace tpalg::witt
