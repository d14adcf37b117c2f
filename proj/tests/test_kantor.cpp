#include "tpalg/kantor.hpp"

#include "tpalg/catalog.hpp"
#include "tpalg/identities.hpp"
#include "tpalg/structure.hpp"

#include <doctest.h>

using namespace tpalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Element basis_of(const SuperAlgebra& a, int i) {
    return Element::basis(a.field(), a.dim(), i);
}

Subspace span_indices(const SuperAlgebra& a, std::vector<int> indices) {
    std::vector<std::vector<Scalar>> gens;
    for (int i : indices)
        gens.push_back(Element::basis(a.field(), a.dim(), i).coords);
    return Subspace::span(a.field(), a.dim(), gens);
}

} // namespace

TEST_CASE("Kantor double of the GF(3) example reproduces the stated "
          "products") {
    SuperAlgebra dbl = kantor_double(catalog::get("tp_sl2_gf3(1,0)"));
    REQUIRE(dbl.dim() == 6);
    REQUIRE(dbl.validate().ok);
    // starred copies at indices 3,4,5 with flipped parity
    CHECK(dbl.parities() == std::vector<int>{0, 0, 0, 1, 1, 1});

    auto star = [&](int i, int j) {
        return dbl.multiply_basis(Product::Circ, i, j);
    };
    CHECK(star(3, 4) == basis_of(dbl, 2));             // e1ˢ*e2ˢ = e3
    CHECK(star(5, 4) == basis_of(dbl, 1));             // e3ˢ*e2ˢ = -2e2 = e2
    CHECK(star(5, 3) ==
          basis_of(dbl, 0).scaled(Scalar::from_int(dbl.field(), 2)));
    CHECK(star(0, 0) == basis_of(dbl, 1));             // e1*e1 = e2
    CHECK(star(0, 3) == basis_of(dbl, 4));             // e1*e1ˢ = e2ˢ
    CHECK(dbl.table(Product::Bracket).empty());
}

TEST_CASE("Kantor double degenerate cases") {
    SuperAlgebra zero_dbl = kantor_double(catalog::get("zero(2,Q)"));
    CHECK(zero_dbl.table(Product::Circ).empty());
    CHECK(zero_dbl.dim() == 4);

    // unital line: 1*1 = 1, 1*1ˢ = 1ˢ, 1ˢ*1ˢ = {1,1} = 0
    SuperAlgebra dbl = kantor_double(catalog::get("unit1_q"));
    CHECK(dbl.multiply_basis(Product::Circ, 0, 0) == basis_of(dbl, 0));
    CHECK(dbl.multiply_basis(Product::Circ, 0, 1) == basis_of(dbl, 1));
    CHECK(dbl.multiply_basis(Product::Circ, 1, 0) == basis_of(dbl, 1));
    CHECK(dbl.multiply_basis(Product::Circ, 1, 1).is_zero());
}

TEST_CASE("doubles of transposed Poisson sources are Jordan superalgebras") {
    for (const auto& a : catalog::tp_instances()) {
        SuperAlgebra dbl = kantor_double(a);
        CAPTURE(dbl.name());
        CHECK(dbl.validate().ok);
        CHECK(check(dbl, IdentityId::JordanSuper).pass);
    }
}

TEST_CASE("graded source: parity layout flips and the double validates") {
    SuperAlgebra grass = catalog::get("grassmann1_q");
    SuperAlgebra dbl = kantor_double(grass);
    CHECK(dbl.parities() == std::vector<int>{0, 1, 1, 0});
    CHECK(dbl.validate().ok);
    CHECK(check(dbl, IdentityId::JordanSuper).pass);
}

TEST_CASE("left multiplications on the double have the block forms built "
          "from P and Q") {
    for (const char* key : {"tp_sl2_gf3(1,0)", "solvable3_q", "grassmann1_q"}) {
        SuperAlgebra src = catalog::get(key);
        SuperAlgebra dbl = kantor_double(src);
        CAPTURE(key);
        int n = src.dim();
        for (int a = 0; a < n; ++a) {
            Matrix p = src.left_mult_operator(Product::Circ, a);
            Matrix q = src.left_mult_operator(Product::Bracket, a);
            Scalar sign = src.parity(a) == 1
                              ? -Scalar::one(src.field())
                              : Scalar::one(src.field());

            Matrix expected_plain(src.field(), 2 * n, 2 * n);
            expected_plain.place_block(0, 0, p);
            expected_plain.place_block(n, n, p.scaled(sign));
            CHECK(dbl.left_mult_operator(Product::Circ, basis_of(dbl, a)) ==
                  expected_plain);

            Matrix expected_star(src.field(), 2 * n, 2 * n);
            expected_star.place_block(0, n, q.scaled(sign));
            expected_star.place_block(n, 0, p);
            CHECK(dbl.left_mult_operator(Product::Circ,
                                         basis_of(dbl, n + a)) ==
                  expected_star);
        }
    }
}

TEST_CASE("Lie double: rejected for graded input, Jacobi for honest Poisson "
          "sources") {
    CHECK_THROWS_AS(lie_double(catalog::get("grassmann1_q")),
                    UnsupportedError);

    SuperAlgebra abelian_dbl = lie_double(catalog::get("zero(2,Q)"));
    CHECK(check(abelian_dbl, IdentityId::JacobiSuper).pass);

    // 2-dimensional Poisson algebra: unital circ, zero bracket
    StructureTable circ;
    circ[{0, 0, 0}] = Scalar::one(Q);
    circ[{0, 1, 1}] = Scalar::one(Q);
    circ[{1, 0, 1}] = Scalar::one(Q);
    SuperAlgebra poisson("poisson2", Q, 2, {0, 0}, circ, {});
    REQUIRE(is_transposed_poisson(poisson)); // zero bracket: both notions
    SuperAlgebra dbl = lie_double(poisson);
    CHECK(dbl.validate().ok);
    CHECK(check(dbl, IdentityId::JacobiSuper).pass);
}

TEST_CASE("Lie double of nonlie_remark_q fails Jacobi with the exact "
          "defect") {
    SuperAlgebra dbl = lie_double(catalog::get("nonlie_remark_q"));
    REQUIRE(dbl.validate().ok);
    IdentityReport r = check(dbl, IdentityId::JacobiSuper);
    CHECK_FALSE(r.pass);
    auto d = defect(dbl, IdentityId::JacobiSuper, std::array{5, 5, 5});
    Element expected = Element::zero(Q, 6);
    expected.coords[3] = Scalar::from_int(Q, -3);
    expected.coords[4] = Scalar::from_int(Q, -3);
    CHECK(std::get<Element>(d) == expected);
}

TEST_CASE("simplicity obstruction P ⊕ (P∘P)ˢ") {
    SuperAlgebra tp10 = catalog::get("tp_sl2_gf3(1,0)");
    auto obstruction = double_simplicity_obstruction(tp10);
    REQUIRE(obstruction.has_value());
    SuperAlgebra dbl = kantor_double(tp10);
    CHECK(*obstruction == span_indices(dbl, {0, 1, 2, 4}));
    CHECK(is_ideal(dbl, *obstruction, IdealKind::TpIdeal));

    // perfect circ: no obstruction
    CHECK_FALSE(double_simplicity_obstruction(catalog::get("solvable3_q"))
                    .has_value());

    // zero circ: the whole even copy
    SuperAlgebra sl2 = catalog::get("sl2(Q)");
    auto even_copy = double_simplicity_obstruction(sl2);
    REQUIRE(even_copy.has_value());
    CHECK(*even_copy == span_indices(kantor_double(sl2), {0, 1, 2}));

    CHECK_THROWS_AS(double_simplicity_obstruction(
                        catalog::get("tp_sl2_gf3(1,1)")),
                    Error);
}

TEST_CASE("refutation direction of the double simplicity criterion") {
    // P∘P ≠ P: the double is not simple, witnessed explicitly
    SuperAlgebra dbl10 = kantor_double(catalog::get("tp_sl2_gf3(1,0)"));
    SimplicityReport r = is_simple(dbl10, SimplicityProducts::TP);
    CHECK(r.verdict == Verdict::NotSimple);
    REQUIRE(r.witness.has_value());
    CHECK(is_ideal(dbl10, *r.witness, IdealKind::TpIdeal));

    // source not simple (P∘P = P though): I ⊕ Iˢ is an ideal of the double
    SuperAlgebra s3 = catalog::get("solvable3_q");
    SuperAlgebra dbl3 = kantor_double(s3);
    Subspace witness = span_indices(dbl3, {0, 1, 3, 4});
    CHECK(is_ideal(dbl3, witness, IdealKind::TpIdeal));
}
