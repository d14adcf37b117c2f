#include "tpalg/structure.hpp"

#include <random>

namespace tpalg {

namespace {

// Spin S to a fixpoint under a family of linear operators.
Subspace spin(const Subspace& start, const std::vector<Matrix>& ops) {
    Subspace current = start;
    for (;;) {
        std::vector<std::vector<Scalar>> gens;
        for (int r = 0; r < current.dim(); ++r) {
            auto v = current.basis_vector(r);
            for (const auto& m : ops) {
                auto w = m.apply(v);
                bool zero = true;
                for (const auto& c : w)
                    if (!c.is_zero()) {
                        zero = false;
                        break;
                    }
                if (!zero && !current.contains(w)) gens.push_back(std::move(w));
            }
        }
        if (gens.empty()) return current;
        Subspace next = current;
        for (int r = 0; r < current.dim(); ++r)
            gens.push_back(current.basis_vector(r));
        next = Subspace::span(current.field(), current.ambient_dim(), gens);
        if (next == current) return current;
        current = next;
    }
}

// Left and right multiplication matrices of all basis elements, zero ones
// dropped. The two-sided family generates the multiplication algebra.
std::vector<Matrix> multiplication_ops(const SuperAlgebra& a,
                                       const std::vector<Product>& products) {
    std::vector<Matrix> ops;
    for (Product which : products)
        for (int i = 0; i < a.dim(); ++i) {
            Matrix l = a.left_mult_operator(which, i);
            if (!l.is_zero()) ops.push_back(std::move(l));
            Matrix r = right_mult_operator(a, which, i);
            if (!r.is_zero()) ops.push_back(std::move(r));
        }
    return ops;
}

std::vector<Product> products_of(SimplicityProducts which) {
    switch (which) {
    case SimplicityProducts::TP:
        return {Product::Circ, Product::Bracket};
    case SimplicityProducts::Circ:
        return {Product::Circ};
    case SimplicityProducts::Bracket:
        return {Product::Bracket};
    }
    throw Error("unreachable");
}

std::vector<Product> products_of(IdealKind kind) {
    switch (kind) {
    case IdealKind::TpIdeal:
        return {Product::Circ, Product::Bracket};
    case IdealKind::CircIdeal:
        return {Product::Circ};
    case IdealKind::BracketIdeal:
        return {Product::Bracket};
    default:
        throw Error("quasi kinds have bespoke operation sets");
    }
}

// v -> ({e_i, v})∘e_j over all i, j   (quasi-ideal second condition)
std::vector<Matrix> quasi_ops(const SuperAlgebra& a) {
    std::vector<Matrix> ops;
    for (int i = 0; i < a.dim(); ++i) {
        Matrix l = a.left_mult_operator(Product::Circ, i);
        if (!l.is_zero()) ops.push_back(std::move(l));
    }
    for (int i = 0; i < a.dim(); ++i) {
        Matrix qi = a.left_mult_operator(Product::Bracket, i);
        if (qi.is_zero()) continue;
        for (int j = 0; j < a.dim(); ++j) {
            Matrix rj = right_mult_operator(a, Product::Circ, j);
            if (rj.is_zero()) continue;
            Matrix composed = rj * qi;
            if (!composed.is_zero()) ops.push_back(std::move(composed));
        }
    }
    return ops;
}

// v -> {e_i∘v, e_j} over all i, j   (transposed quasi-ideal second condition)
std::vector<Matrix> transposed_quasi_ops(const SuperAlgebra& a) {
    std::vector<Matrix> ops;
    for (int i = 0; i < a.dim(); ++i) {
        Matrix q = a.left_mult_operator(Product::Bracket, i);
        if (!q.is_zero()) ops.push_back(std::move(q));
    }
    for (int i = 0; i < a.dim(); ++i) {
        Matrix pi = a.left_mult_operator(Product::Circ, i);
        if (pi.is_zero()) continue;
        for (int j = 0; j < a.dim(); ++j) {
            Matrix rbj = right_mult_operator(a, Product::Bracket, j);
            if (rbj.is_zero()) continue;
            Matrix composed = rbj * pi;
            if (!composed.is_zero()) ops.push_back(std::move(composed));
        }
    }
    return ops;
}

std::vector<Matrix> closure_ops(const SuperAlgebra& a, IdealKind kind) {
    switch (kind) {
    case IdealKind::QuasiIdeal:
        return quasi_ops(a);
    case IdealKind::TransposedQuasiIdeal:
        return transposed_quasi_ops(a);
    default:
        return multiplication_ops(a, products_of(kind));
    }
}

bool subspace_closed_under(const Subspace& s,
                           const std::vector<Matrix>& ops) {
    for (int r = 0; r < s.dim(); ++r) {
        auto v = s.basis_vector(r);
        for (const auto& m : ops)
            if (!s.contains(m.apply(v))) return false;
    }
    return true;
}

} // namespace

Matrix right_mult_operator(const SuperAlgebra& a, Product which,
                           const Element& x) {
    if (x.dim() != a.dim())
        throw DimensionError("element dimension != algebra dimension");
    Matrix m(a.field(), a.dim(), a.dim());
    for (const auto& [ijk, c] : a.table(which)) {
        auto [i, j, k] = ijk;
        if (x.coords[j].is_zero()) continue;
        m.at(k, i) += x.coords[j] * c;
    }
    return m;
}

Matrix right_mult_operator(const SuperAlgebra& a, Product which,
                           int basis_index) {
    return right_mult_operator(a, which,
                               Element::basis(a.field(), a.dim(), basis_index));
}

Subspace product_span(const SuperAlgebra& a, Product which, const Subspace& s,
                      const Subspace& t) {
    std::vector<std::vector<Scalar>> gens;
    for (int i = 0; i < s.dim(); ++i) {
        Element x{s.basis_vector(i)};
        for (int j = 0; j < t.dim(); ++j) {
            Element y{t.basis_vector(j)};
            Element p = a.multiply(which, x, y);
            if (!p.is_zero()) gens.push_back(p.coords);
        }
    }
    return Subspace::span(a.field(), a.dim(), gens);
}

Subspace ideal_closure(const SuperAlgebra& a, const Subspace& s,
                       IdealKind kind) {
    if (s.ambient_dim() != a.dim())
        throw DimensionError("subspace ambient != algebra dimension");
    return spin(s, closure_ops(a, kind));
}

bool is_ideal(const SuperAlgebra& a, const Subspace& s, IdealKind kind) {
    if (s.ambient_dim() != a.dim())
        throw DimensionError("subspace ambient != algebra dimension");
    if (s.is_full()) return false;
    return subspace_closed_under(s, closure_ops(a, kind));
}

bool is_quasi_ideal(const SuperAlgebra& a, const Subspace& s) {
    return is_ideal(a, s, IdealKind::QuasiIdeal);
}

bool is_transposed_quasi_ideal(const SuperAlgebra& a, const Subspace& s) {
    return is_ideal(a, s, IdealKind::TransposedQuasiIdeal);
}

Subspace annihilator(const SuperAlgebra& a) {
    int n = a.dim();
    // x annihilates iff every left and right multiplication kills it.
    std::vector<Matrix> ops =
        multiplication_ops(a, {Product::Circ, Product::Bracket});
    if (ops.empty()) return Subspace::full(a.field(), n);
    Matrix stacked(a.field(), static_cast<int>(ops.size()) * n, n);
    for (std::size_t t = 0; t < ops.size(); ++t)
        stacked.place_block(static_cast<int>(t) * n, 0, ops[t]);
    return Subspace::from_canonical(kernel_basis(stacked));
}

Subspace radical(const SuperAlgebra& a) {
    if (!a.field().is_rationals())
        throw UnsupportedError(
            "Killing radical requires characteristic zero (field is " +
            a.field().str() + ")");
    int n = a.dim();
    Subspace derived = product_span(a, Product::Bracket,
                                    Subspace::full(a.field(), n),
                                    Subspace::full(a.field(), n));
    if (derived.is_zero()) return Subspace::full(a.field(), n);
    std::vector<Matrix> ad_basis;
    for (int i = 0; i < n; ++i)
        ad_basis.push_back(a.left_mult_operator(Product::Bracket, i));
    Matrix gram(a.field(), derived.dim(), n);
    for (int t = 0; t < derived.dim(); ++t) {
        Matrix ad_v = a.left_mult_operator(
            Product::Bracket, Element{derived.basis_vector(t)});
        for (int i = 0; i < n; ++i)
            gram.at(t, i) = (ad_basis[i] * ad_v).trace();
    }
    return Subspace::from_canonical(kernel_basis(gram));
}

Matrix distinguished_derivation(const SuperAlgebra& a, const Element& x,
                                const Element& y) {
    // v -> {v∘x, y} − v∘{x,y}
    Matrix rx = right_mult_operator(a, Product::Circ, x);
    Matrix rby = right_mult_operator(a, Product::Bracket, y);
    Matrix rxy = right_mult_operator(a, Product::Circ,
                                     a.multiply(Product::Bracket, x, y));
    return rby * rx - rxy;
}

StructureSummary series(const SuperAlgebra& a) {
    int n = a.dim();
    const FieldSpec& f = a.field();
    Subspace full = Subspace::full(f, n);

    auto run_series = [&](auto step) {
        std::vector<Subspace> out{full};
        for (;;) {
            Subspace next = step(out.back());
            if (next == out.back()) break;
            out.push_back(next);
            if (next.is_zero()) break;
        }
        return out;
    };
    std::vector<Subspace> derived = run_series([&](const Subspace& s) {
        return product_span(a, Product::Bracket, s, s);
    });
    std::vector<Subspace> lower_central = run_series([&](const Subspace& s) {
        return product_span(a, Product::Bracket, s, full);
    });
    std::vector<Subspace> circ_powers = run_series([&](const Subspace& s) {
        return product_span(a, Product::Circ, s, full);
    });

    auto center_of = [&](Product which) {
        std::vector<Matrix> ops;
        for (int i = 0; i < n; ++i) {
            Matrix m = right_mult_operator(a, which, i);
            if (!m.is_zero()) ops.push_back(std::move(m));
        }
        if (ops.empty()) return full;
        Matrix stacked(f, static_cast<int>(ops.size()) * n, n);
        for (std::size_t t = 0; t < ops.size(); ++t)
            stacked.place_block(static_cast<int>(t) * n, 0, ops[t]);
        return Subspace::from_canonical(kernel_basis(stacked));
    };

    // Unit: solve e∘e_i = e_i for all i at once.
    std::optional<Element> unit;
    if (n > 0) {
        Matrix system(f, n * n, n);
        std::vector<Scalar> rhs(static_cast<std::size_t>(n) * n,
                                Scalar::zero(f));
        for (int i = 0; i < n; ++i) {
            Matrix ri = right_mult_operator(a, Product::Circ, i);
            system.place_block(i * n, 0, ri);
            rhs[static_cast<std::size_t>(i) * n + i] = Scalar::one(f);
        }
        if (auto sol = solve(system, rhs)) unit = Element{*sol};
    }

    StructureSummary summary{
        center_of(Product::Circ),
        center_of(Product::Bracket),
        std::move(derived),
        std::move(lower_central),
        std::move(circ_powers),
        std::nullopt,
        std::move(unit),
        false,
        false,
    };
    summary.perfect_circ =
        product_span(a, Product::Circ, full, full) == full && n > 0;
    summary.perfect_bracket =
        product_span(a, Product::Bracket, full, full) == full && n > 0;
    if (f.is_rationals()) summary.radical = radical(a);
    return summary;
}

// --- simplicity ------------------------------------------------------------

namespace {

bool has_nonzero_product(const SuperAlgebra& a,
                         const std::vector<Product>& products) {
    for (Product which : products)
        for (const auto& [ijk, c] : a.table(which))
            if (!c.is_zero()) return true;
    return false;
}

// Span of the homogeneous components of all basis vectors of s; always a
// graded subspace, and an ideal whenever s is.
Subspace graded_hull(const SuperAlgebra& a, const Subspace& s) {
    std::vector<std::vector<Scalar>> gens;
    for (int r = 0; r < s.dim(); ++r) {
        auto v = s.basis_vector(r);
        for (int par : {0, 1}) {
            std::vector<Scalar> comp(v.size(), Scalar::zero(a.field()));
            bool nonzero = false;
            for (int i = 0; i < a.dim(); ++i)
                if (a.parity(i) == par && !v[i].is_zero()) {
                    comp[i] = v[i];
                    nonzero = true;
                }
            if (nonzero) gens.push_back(std::move(comp));
        }
    }
    return Subspace::span(a.field(), a.dim(), gens);
}

struct SeedEnumerator {
    // Enumerates nonzero coefficient vectors over GF(p) supported on the
    // given index set, odometer order (first index fastest).
    const SuperAlgebra& a;
    std::vector<int> support;
    std::vector<std::uint64_t> digits;
    bool done = false;

    SeedEnumerator(const SuperAlgebra& alg, std::vector<int> sup)
        : a(alg), support(std::move(sup)), digits(support.size(), 0) {
        if (support.empty()) done = true;
    }

    std::optional<std::vector<Scalar>> next() {
        if (done) return std::nullopt;
        std::uint64_t p = a.field().p;
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == p - 1) digits[pos++] = 0;
        if (pos == digits.size()) {
            done = true;
            return std::nullopt;
        }
        ++digits[pos];
        std::vector<Scalar> v(a.dim(), Scalar::zero(a.field()));
        for (std::size_t t = 0; t < support.size(); ++t)
            v[support[t]] =
                Scalar::residue(a.field(), digits[t]);
        return v;
    }
};

std::uint64_t pow_u64_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base + 1) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

SimplicityReport exhaustive_simplicity(const SuperAlgebra& a,
                                       SimplicityProducts which) {
    SimplicityReport report;
    report.strategy_used = "EXHAUSTIVE";
    IdealKind kind = which == SimplicityProducts::TP ? IdealKind::TpIdeal
                     : which == SimplicityProducts::Circ
                         ? IdealKind::CircIdeal
                         : IdealKind::BracketIdeal;
    std::vector<Matrix> ops = closure_ops(a, kind);
    Subspace full = Subspace::full(a.field(), a.dim());

    // Graded algebras: ideals are graded, so homogeneous seeds suffice.
    std::vector<std::vector<int>> supports;
    if (a.is_graded()) {
        std::vector<int> even, odd;
        for (int i = 0; i < a.dim(); ++i)
            (a.parity(i) == 0 ? even : odd).push_back(i);
        if (!even.empty()) supports.push_back(even);
        if (!odd.empty()) supports.push_back(odd);
    } else {
        std::vector<int> all(a.dim());
        for (int i = 0; i < a.dim(); ++i) all[i] = i;
        supports.push_back(all);
    }

    for (const auto& sup : supports) {
        SeedEnumerator seeds(a, sup);
        while (auto v = seeds.next()) {
            ++report.candidates;
            Subspace closure =
                spin(Subspace::span(a.field(), a.dim(), {*v}), ops);
            if (!(closure == full)) {
                report.verdict = Verdict::NotSimple;
                report.witness = closure;
                report.note = "closure of a seed vector is a proper ideal";
                return report;
            }
        }
    }
    report.verdict = Verdict::Simple;
    report.note = "every seed generates the whole algebra";
    return report;
}

SimplicityReport norton_simplicity(const SuperAlgebra& a,
                                   SimplicityProducts which,
                                   const SimplicityOptions& opts) {
    SimplicityReport report;
    report.strategy_used = "MEATAXE";
    const FieldSpec& f = a.field();
    int n = a.dim();
    std::vector<Matrix> gens = multiplication_ops(a, products_of(which));
    Subspace full = Subspace::full(f, n);
    std::vector<Matrix> gens_t;
    for (const auto& g : gens) gens_t.push_back(g.transpose());

    std::mt19937_64 rng(opts.seed);
    auto random_scalar = [&]() {
        if (f.is_rationals()) {
            std::uniform_int_distribution<int> d(-3, 3);
            return Scalar::from_int(f, d(rng));
        }
        std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
        return Scalar::residue(f, d(rng));
    };

    // All nonzero vectors of the row space of `ker` (finite field), or just
    // its rows over Q. `complete` reports whether that is the whole
    // projective kernel, which the Simple direction needs.
    auto kernel_vectors = [&](const Matrix& ker, bool& complete) {
        std::vector<std::vector<Scalar>> out;
        int d = ker.rows();
        if (f.is_rationals()) {
            for (int i = 0; i < d; ++i) out.push_back(ker.row(i));
            complete = d == 1;
            return out;
        }
        std::uint64_t count = pow_u64_capped(f.p, d, 4096);
        if (count > 4096) {
            for (int i = 0; i < d; ++i) out.push_back(ker.row(i));
            complete = false;
            return out;
        }
        std::vector<std::uint64_t> digits(d, 0);
        for (;;) {
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == f.p - 1)
                digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];
            std::vector<Scalar> v(n, Scalar::zero(f));
            for (int r = 0; r < d; ++r) {
                if (digits[r] == 0) continue;
                Scalar c = Scalar::residue(f, digits[r]);
                for (int j = 0; j < n; ++j) v[j] += ker.at(r, j) * c;
            }
            out.push_back(std::move(v));
        }
        complete = true;
        return out;
    };

    // A proper nonzero ideal was found; produce the graded verdict.
    auto conclude_not_simple = [&](Subspace witness) -> std::optional<SimplicityReport> {
        if (a.is_graded()) {
            Subspace hull = graded_hull(a, witness);
            if (hull.is_full()) return std::nullopt; // no graded conclusion
            witness = hull;
        }
        SimplicityReport r = report;
        r.verdict = Verdict::NotSimple;
        r.witness = std::move(witness);
        r.note = "Norton kernel vector generates a proper ideal";
        return r;
    };

    for (int attempt = 0; attempt < opts.tries; ++attempt) {
        // Random element of the multiplication algebra: a linear combination
        // of the generators, with degree-two words mixed in on alternate
        // attempts. Pure combinations are singular far more often (e.g.
        // every adjoint operator kills its own element), which is what a
        // useful theta needs.
        Matrix theta(f, n, n);
        for (const auto& g : gens) {
            Scalar c = random_scalar();
            if (!c.is_zero()) theta = theta + g.scaled(c);
        }
        if (attempt % 2 == 1)
            for (int w = 0; w < 2; ++w) {
                std::uniform_int_distribution<std::size_t> pick(
                    0, gens.size() - 1);
                Scalar c = random_scalar();
                if (!c.is_zero())
                    theta =
                        theta + (gens[pick(rng)] * gens[pick(rng)]).scaled(c);
            }
        if (theta.is_zero()) continue;
        Matrix ker = kernel_basis(theta);
        if (ker.rows() == 0 || ker.rows() == n) continue;

        bool complete = false;
        auto vectors = kernel_vectors(ker, complete);
        report.candidates += vectors.size();
        bool all_full = true;
        for (const auto& v : vectors) {
            Subspace closure = spin(Subspace::span(f, n, {v}), gens);
            if (closure == full) continue;
            all_full = false;
            if (auto concluded = conclude_not_simple(closure)) return *concluded;
        }
        if (!all_full || !complete) continue;

        // Dual side: a kernel vector of thetaᵀ that fails to generate the
        // transpose module exposes a proper submodule as its perp.
        Matrix ker_t = kernel_basis(theta.transpose());
        bool complete_t = false;
        auto vectors_t = kernel_vectors(ker_t, complete_t);
        report.candidates += vectors_t.size();
        bool all_full_t = true;
        for (const auto& w : vectors_t) {
            Subspace closure_t = spin(Subspace::span(f, n, {w}), gens_t);
            if (closure_t == full) continue;
            all_full_t = false;
            Subspace perp =
                Subspace::from_canonical(kernel_basis(closure_t.basis()));
            if (auto concluded = conclude_not_simple(perp)) return *concluded;
        }
        if (all_full && all_full_t && complete && complete_t) {
            report.verdict = Verdict::Simple;
            report.note = "Norton criterion certified irreducibility";
            return report;
        }
    }
    report.verdict = Verdict::Indeterminate;
    report.note = "Norton retry budget exhausted without a certificate";
    return report;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Simple:
        return "SIMPLE";
    case Verdict::NotSimple:
        return "NOT_SIMPLE";
    case Verdict::Indeterminate:
        return "INDETERMINATE";
    }
    throw Error("unreachable");
}

SimplicityReport is_simple(const SuperAlgebra& a, SimplicityProducts which,
                           const SimplicityOptions& opts) {
    std::vector<Product> products = products_of(which);
    if (a.dim() == 0 || !has_nonzero_product(a, products)) {
        SimplicityReport report;
        report.verdict = Verdict::NotSimple;
        report.strategy_used = "TRIVIAL";
        report.note = a.dim() == 0 ? "zero-dimensional algebra"
                                   : "selected products are identically zero";
        if (a.dim() >= 2)
            report.witness =
                Subspace::span(a.field(), a.dim(),
                               {Element::basis(a.field(), a.dim(), 0).coords});
        return report;
    }

    // Eligibility: p^dim − 1 seed vectors within the configured bound.
    if (a.dim() == 1) {
        // A line with a nonzero product has no proper nonzero subspace.
        SimplicityReport report;
        report.verdict = Verdict::Simple;
        report.strategy_used = "TRIVIAL";
        report.note = "one-dimensional with a nonzero product";
        return report;
    }

    bool enumerable =
        !a.field().is_rationals() &&
        pow_u64_capped(a.field().p, a.dim(), opts.bound + 1) <= opts.bound + 1;

    switch (opts.strategy) {
    case SimplicityStrategy::Exhaustive:
        if (a.field().is_rationals())
            throw UnsupportedError("exhaustive enumeration needs a finite field");
        if (!enumerable)
            throw BudgetError("p^dim − 1 exceeds the exhaustive bound");
        return exhaustive_simplicity(a, which);
    case SimplicityStrategy::Meataxe:
        return norton_simplicity(a, which, opts);
    case SimplicityStrategy::Auto:
        return enumerable ? exhaustive_simplicity(a, which)
                          : norton_simplicity(a, which, opts);
    }
    throw Error("unreachable");
}

} // namespace tpalg
