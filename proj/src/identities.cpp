#include "tpalg/identities.hpp"

#include <algorithm>

namespace tpalg {

namespace {

struct IdentityInfo {
    IdentityId id;
    const char* name;
    int arity;
    bool operator_valued;
};

constexpr IdentityInfo kIdentityInfo[] = {
    {IdentityId::AssocCirc, "ASSOC_CIRC", 3, false},
    {IdentityId::JacobiSuper, "JACOBI_SUPER", 3, false},
    {IdentityId::TpLeibnizSuper, "TP_LEIBNIZ_SUPER", 3, false},
    {IdentityId::PropEq1, "PROPEQ1", 3, false},
    {IdentityId::PropEq2, "PROPEQ2", 4, false},
    {IdentityId::PropEq3, "PROPEQ3", 4, false},
    {IdentityId::PropEq4, "PROPEQ4", 4, false},
    {IdentityId::PropEq5, "PROPEQ5", 4, false},
    {IdentityId::PropEq6, "PROPEQ6", 4, false},
    {IdentityId::JordanSuper, "JORDAN_SUPER", 3, true},
    {IdentityId::RelPQ1, "REL_PQ1", 2, true},
    {IdentityId::RelPQ2, "REL_PQ2", 2, true},
    {IdentityId::RelPQ3, "REL_PQ3", 2, true},
    {IdentityId::RelPQ4, "REL_PQ4", 3, true},
    {IdentityId::Rel2_1, "REL2_1", 2, true},
    {IdentityId::Rel2_2, "REL2_2", 3, true},
    {IdentityId::Rel2_3, "REL2_3", 3, true},
    {IdentityId::Rel2_4, "REL2_4", 3, true},
    {IdentityId::Rel2_5, "REL2_5", 3, true},
    {IdentityId::Rel2_6, "REL2_6", 3, true},
};

const IdentityInfo& info(IdentityId id) {
    for (const auto& e : kIdentityInfo)
        if (e.id == id) return e;
    throw Error("unknown identity id");
}

// Evaluation context: products, left multiplications and graded operator
// brackets over one algebra.
struct Ctx {
    const SuperAlgebra& a;
    const FieldSpec& f;

    Element circ(const Element& x, const Element& y) const {
        return a.multiply(Product::Circ, x, y);
    }
    Element br(const Element& x, const Element& y) const {
        return a.multiply(Product::Bracket, x, y);
    }
    Matrix P(const Element& x) const {
        return a.left_mult_operator(Product::Circ, x);
    }
    Matrix Q(const Element& x) const {
        return a.left_mult_operator(Product::Bracket, x);
    }
    Scalar sign(int p, int q) const { return parity_sign(f, p, q); }
    // [A,B] = AB - (-1)^{|A||B|} BA
    Matrix gbracket(const Matrix& A, int pa, const Matrix& B, int pb) const {
        return A * B - (B * A).scaled(sign(pa, pb));
    }
};

} // namespace

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> out;
    for (const auto& e : kIdentityInfo) out.push_back(e.id);
    return out;
}

std::string identity_name(IdentityId id) { return info(id).name; }

IdentityId identity_from_name(const std::string& name) {
    for (const auto& e : kIdentityInfo)
        if (name == e.name) return e.id;
    throw ParseError("unknown identity '" + name + "'");
}

int identity_arity(IdentityId id) { return info(id).arity; }

bool identity_is_operator_valued(IdentityId id) {
    return info(id).operator_valued;
}

bool defect_is_zero(const Defect& d) {
    if (std::holds_alternative<Element>(d))
        return std::get<Element>(d).is_zero();
    return std::get<Matrix>(d).is_zero();
}

Defect evaluate_defect(const SuperAlgebra& a, IdentityId id,
                       std::span<const HomogeneousArg> args) {
    if (static_cast<int>(args.size()) != identity_arity(id))
        throw DimensionError("identity arity mismatch");
    Ctx c{a, a.field()};
    const FieldSpec& f = a.field();
    Scalar two = Scalar::from_int(f, 2);
    Scalar half = two.inv();

    auto S = [&](const HomogeneousArg& u, const HomogeneousArg& v) {
        return c.sign(u.parity, v.parity);
    };

    switch (id) {
    case IdentityId::AssocCirc: {
        const auto &x = args[0].value, &y = args[1].value, &z = args[2].value;
        return c.circ(c.circ(x, y), z) - c.circ(x, c.circ(y, z));
    }
    case IdentityId::JacobiSuper: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return c.br(c.br(x.value, y.value), z.value).scaled(S(x, z)) +
               c.br(c.br(y.value, z.value), x.value).scaled(S(y, x)) +
               c.br(c.br(z.value, x.value), y.value).scaled(S(z, y));
    }
    case IdentityId::TpLeibnizSuper: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return c.circ(x.value, c.br(y.value, z.value)).scaled(two) -
               c.br(c.circ(x.value, y.value), z.value) -
               c.br(y.value, c.circ(x.value, z.value)).scaled(S(x, y));
    }
    case IdentityId::PropEq1: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return c.circ(x.value, c.br(y.value, z.value)).scaled(S(x, z)) +
               c.circ(y.value, c.br(z.value, x.value)).scaled(S(y, x)) +
               c.circ(z.value, c.br(x.value, y.value)).scaled(S(z, y));
    }
    case IdentityId::PropEq2: {
        const auto &h = args[0], &x = args[1], &y = args[2], &z = args[3];
        return c.br(c.circ(h.value, c.br(x.value, y.value)), z.value)
                   .scaled(S(x, z)) +
               c.br(c.circ(h.value, c.br(y.value, z.value)), x.value)
                   .scaled(S(y, x)) +
               c.br(c.circ(h.value, c.br(z.value, x.value)), y.value)
                   .scaled(S(z, y));
    }
    case IdentityId::PropEq3: {
        const auto &h = args[0], &x = args[1], &y = args[2], &z = args[3];
        return c.br(c.circ(h.value, x.value), c.br(y.value, z.value))
                   .scaled(S(x, z)) +
               c.br(c.circ(h.value, y.value), c.br(z.value, x.value))
                   .scaled(S(y, x)) +
               c.br(c.circ(h.value, z.value), c.br(x.value, y.value))
                   .scaled(S(z, y));
    }
    case IdentityId::PropEq4: {
        const auto &h = args[0], &x = args[1], &y = args[2], &z = args[3];
        return c.circ(c.br(h.value, x.value), c.br(y.value, z.value))
                   .scaled(S(x, z)) +
               c.circ(c.br(h.value, y.value), c.br(z.value, x.value))
                   .scaled(S(y, x)) +
               c.circ(c.br(h.value, z.value), c.br(x.value, y.value))
                   .scaled(S(z, y));
    }
    case IdentityId::PropEq5: {
        // {xu, vy} + (-1)^{uv}{xv, uy} = 2(-1)^{ux+vx} uv{x,y}
        const auto &x = args[0], &u = args[1], &v = args[2], &y = args[3];
        Element lhs =
            c.br(c.circ(x.value, u.value), c.circ(v.value, y.value)) +
            c.br(c.circ(x.value, v.value), c.circ(u.value, y.value))
                .scaled(S(u, v));
        Element rhs = c.circ(c.circ(u.value, v.value), c.br(x.value, y.value))
                          .scaled(two * S(u, x) * S(v, x));
        return lhs - rhs;
    }
    case IdentityId::PropEq6: {
        // (-1)^{vx+yu} x{u,yv} + (-1)^{vu+vy} v{xy,u} + (-1)^{xu+xy} yu{v,x}
        const auto &x = args[0], &u = args[1], &y = args[2], &v = args[3];
        return c.circ(x.value, c.br(u.value, c.circ(y.value, v.value)))
                   .scaled(S(v, x) * S(y, u)) +
               c.circ(v.value, c.br(c.circ(x.value, y.value), u.value))
                   .scaled(S(v, u) * S(v, y)) +
               c.circ(c.circ(y.value, u.value), c.br(v.value, x.value))
                   .scaled(S(x, u) * S(x, y));
    }
    case IdentityId::JordanSuper: {
        // One-product reading: L is left multiplication by the circ table.
        const auto &x = args[0], &y = args[1], &z = args[2];
        auto term = [&](const HomogeneousArg& p, const HomogeneousArg& q,
                        const HomogeneousArg& r) {
            // (-1)^{pr} [L_{p∘q}, L_r], |L_{p∘q}| = |p|+|q|
            return c
                .gbracket(c.P(c.circ(p.value, q.value)), p.parity + q.parity,
                          c.P(r.value), r.parity)
                .scaled(S(p, r));
        };
        return term(x, y, z) + term(y, z, x) + term(z, x, y);
    }
    case IdentityId::RelPQ1: {
        const auto &x = args[0], &y = args[1];
        return c.gbracket(c.P(x.value), x.parity, c.P(y.value), y.parity);
    }
    case IdentityId::RelPQ2: {
        const auto &x = args[0], &y = args[1];
        return c.gbracket(c.Q(x.value), x.parity, c.Q(y.value), y.parity) -
               c.Q(c.br(x.value, y.value));
    }
    case IdentityId::RelPQ3: {
        // [P_x, Q_y] = 1/2 (Q_{xy} - (-1)^{xy} Q_y P_x)
        const auto &x = args[0], &y = args[1];
        Matrix lhs = c.gbracket(c.P(x.value), x.parity, c.Q(y.value), y.parity);
        Matrix rhs = (c.Q(c.circ(x.value, y.value)) -
                      (c.Q(y.value) * c.P(x.value)).scaled(S(x, y)))
                         .scaled(half);
        return lhs - rhs;
    }
    case IdentityId::RelPQ4: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        auto term = [&](const HomogeneousArg& p, const HomogeneousArg& q,
                        const HomogeneousArg& r) {
            return c.Q(c.circ(c.br(p.value, q.value), r.value)).scaled(S(p, r));
        };
        return term(x, y, z) + term(y, z, x) + term(z, x, y);
    }
    case IdentityId::Rel2_1: {
        const auto &x = args[0], &y = args[1];
        return c.P(x.value) * c.Q(y.value) -
               (c.P(y.value) * c.Q(x.value)).scaled(S(x, y)) +
               c.P(c.br(x.value, y.value));
    }
    case IdentityId::Rel2_2: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return (c.Q(z.value) * c.P(c.br(x.value, y.value))).scaled(S(z, y)) +
               (c.Q(x.value) * c.P(c.br(y.value, z.value))).scaled(S(x, z)) +
               (c.Q(y.value) * c.P(c.br(z.value, x.value))).scaled(S(y, x));
    }
    case IdentityId::Rel2_3: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return (c.Q(c.br(x.value, y.value)) * c.P(z.value)).scaled(S(x, z)) +
               (c.Q(c.br(y.value, z.value)) * c.P(x.value)).scaled(S(y, x)) +
               (c.Q(c.br(z.value, x.value)) * c.P(y.value)).scaled(S(z, y));
    }
    case IdentityId::Rel2_4: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return (c.P(c.br(x.value, y.value)) * c.Q(z.value)).scaled(S(x, z)) +
               (c.P(c.br(y.value, z.value)) * c.Q(x.value)).scaled(S(y, x)) +
               (c.P(c.br(z.value, x.value)) * c.Q(y.value)).scaled(S(z, y));
    }
    case IdentityId::Rel2_5: {
        // Two equations; the defect is the first one that fails to vanish.
        const auto &x = args[0], &y = args[1], &z = args[2];
        Matrix first =
            c.Q(c.circ(x.value, y.value)) * c.P(z.value) -
            (c.Q(c.circ(z.value, x.value)) * c.P(y.value))
                .scaled(S(z, x) * S(z, y)) -
            c.P(c.circ(x.value, c.br(y.value, z.value))).scaled(two);
        if (!first.is_zero()) return first;
        Matrix second =
            (c.Q(c.circ(y.value, z.value)) * c.P(x.value)).scaled(S(y, x)) +
            (c.Q(c.circ(z.value, x.value)) * c.P(y.value)).scaled(S(z, y)) -
            (c.P(c.circ(x.value, y.value)) * c.Q(z.value))
                .scaled(two * S(x, z));
        return second;
    }
    case IdentityId::Rel2_6: {
        const auto &x = args[0], &y = args[1], &z = args[2];
        return (c.P(z.value) * c.Q(c.circ(x.value, y.value)))
                   .scaled(S(z, y) * S(z, x)) -
               (c.P(y.value) * c.Q(c.circ(x.value, z.value))).scaled(S(y, x)) -
               c.P(c.circ(x.value, c.br(y.value, z.value)));
    }
    }
    throw Error("unreachable");
}

Defect defect(const SuperAlgebra& a, IdentityId id, std::span<const int> tuple) {
    if (static_cast<int>(tuple.size()) != identity_arity(id))
        throw DimensionError("tuple arity != identity arity");
    std::vector<HomogeneousArg> args;
    args.reserve(tuple.size());
    for (int i : tuple) {
        if (i < 0 || i >= a.dim())
            throw DimensionError("basis index out of range");
        args.push_back({Element::basis(a.field(), a.dim(), i), a.parity(i)});
    }
    return evaluate_defect(a, id, args);
}

IdentityReport check(const SuperAlgebra& a, IdentityId id) {
    int arity = identity_arity(id);
    int n = a.dim();
    IdentityReport report{id, true, {}, {}};
    if (n == 0) return report;
    std::vector<int> tuple(arity, 0);
    for (;;) {
        Defect d = defect(a, id, tuple);
        if (!defect_is_zero(d)) {
            report.pass = false;
            report.counterexample = tuple;
            report.defect = std::move(d);
            return report;
        }
        int pos = arity - 1;
        while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return report;
}

std::vector<IdentityReport> check_tp_axioms(const SuperAlgebra& a) {
    return {check(a, IdentityId::AssocCirc), check(a, IdentityId::JacobiSuper),
            check(a, IdentityId::TpLeibnizSuper)};
}

bool is_transposed_poisson(const SuperAlgebra& a) {
    auto reports = check_tp_axioms(a);
    return std::all_of(reports.begin(), reports.end(),
                       [](const IdentityReport& r) { return r.pass; });
}

std::vector<IdentityReport> check_operator_relations(const SuperAlgebra& a) {
    std::vector<IdentityReport> out;
    for (IdentityId id :
         {IdentityId::RelPQ1, IdentityId::RelPQ2, IdentityId::RelPQ3,
          IdentityId::RelPQ4, IdentityId::Rel2_1, IdentityId::Rel2_2,
          IdentityId::Rel2_3, IdentityId::Rel2_4, IdentityId::Rel2_5,
          IdentityId::Rel2_6})
        out.push_back(check(a, id));
    return out;
}

} // namespace tpalg
