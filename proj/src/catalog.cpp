#include "tpalg/catalog.hpp"

#include "tpalg/errors.hpp"

#include <sstream>

namespace tpalg::catalog {

namespace {

using nlohmann::json;

// key "name(a,b,...)" -> {name, {a, b, ...}}
std::pair<std::string, std::vector<std::string>> split_key(
    const std::string& key) {
    auto open = key.find('(');
    if (open == std::string::npos) return {key, {}};
    if (key.back() != ')') throw ParseError("malformed catalog key '" + key + "'");
    std::string name = key.substr(0, open);
    std::string inner = key.substr(open + 1, key.size() - open - 2);
    std::vector<std::string> args;
    std::istringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
    return {name, args};
}

FieldSpec parse_field_arg(const std::string& s) {
    if (s == "Q") return FieldSpec::rationals();
    if (s.size() > 2 && s.substr(0, 2) == "GF")
        return FieldSpec::prime_field(std::stoull(s.substr(2)));
    throw ParseError("bad field argument '" + s + "' (want Q or GF<p>)");
}

long parse_int_arg(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError("bad integer argument '" + s + "'");
    }
}

void put_symmetric(StructureTable& t, const FieldSpec& f, int i, int j, int k,
                   const Scalar& c, bool skew, const std::vector<int>& parity) {
    if (c.is_zero()) return;
    t[{i, j, k}] = c;
    if (i == j) return;
    Scalar mirror = c * parity_sign(f, parity[i], parity[j]);
    if (skew) mirror = -mirror;
    t[{j, i, k}] = mirror;
}

SuperAlgebra build_sl2(const FieldSpec& f) {
    std::vector<int> parity(3, 0);
    StructureTable bracket;
    auto one = Scalar::one(f), two = Scalar::from_int(f, 2);
    put_symmetric(bracket, f, 0, 1, 2, one, true, parity);   // {e1,e2}=e3
    put_symmetric(bracket, f, 2, 1, 1, -two, true, parity);  // {e3,e2}=-2e2
    put_symmetric(bracket, f, 2, 0, 0, two, true, parity);   // {e3,e1}=2e1
    return SuperAlgebra("sl2(" + f.str() + ")", f, 3, parity, {}, bracket);
}

SuperAlgebra build_tp_sl2_gf3(long alpha, long beta) {
    FieldSpec f = FieldSpec::prime_field(3);
    SuperAlgebra lie = build_sl2(f);
    StructureTable circ;
    std::vector<int> parity(3, 0);
    put_symmetric(circ, f, 0, 0, 1, Scalar::from_int(f, alpha), false, parity);
    put_symmetric(circ, f, 1, 1, 0, Scalar::from_int(f, beta), false, parity);
    std::string name = "tp_sl2_gf3(" + std::to_string(alpha) + "," +
                       std::to_string(beta) + ")";
    return SuperAlgebra(name, f, 3, parity, circ, lie.table(Product::Bracket));
}

SuperAlgebra build_solvable3_q() {
    FieldSpec f = FieldSpec::rationals();
    std::vector<int> parity(3, 0);
    auto one = Scalar::one(f);
    StructureTable bracket, circ;
    put_symmetric(bracket, f, 0, 2, 0, one, true, parity); // {e1,e3}=e1
    put_symmetric(bracket, f, 1, 2, 1, one, true, parity); // {e2,e3}=e2
    put_symmetric(circ, f, 0, 2, 0, one, false, parity);   // e1e3=e1
    put_symmetric(circ, f, 1, 2, 1, one, false, parity);   // e2e3=e2
    put_symmetric(circ, f, 2, 2, 2, one, false, parity);   // e3e3=e3
    return SuperAlgebra("solvable3_q", f, 3, parity, circ, bracket);
}

SuperAlgebra build_nonlie_remark_q() {
    FieldSpec f = FieldSpec::rationals();
    std::vector<int> parity(3, 0);
    auto one = Scalar::one(f);
    StructureTable bracket, circ;
    put_symmetric(circ, f, 2, 2, 0, one, false, parity);   // e3∘e3=e1
    put_symmetric(bracket, f, 0, 2, 0, one, true, parity); // {e1,e3}=e1+e2
    put_symmetric(bracket, f, 0, 2, 1, one, true, parity);
    return SuperAlgebra("nonlie_remark_q", f, 3, parity, circ, bracket);
}

SuperAlgebra build_grassmann1_q() {
    FieldSpec f = FieldSpec::rationals();
    std::vector<int> parity{0, 1};
    auto one = Scalar::one(f);
    StructureTable circ;
    put_symmetric(circ, f, 0, 0, 0, one, false, parity); // 1∘1 = 1
    put_symmetric(circ, f, 0, 1, 1, one, false, parity); // 1∘ξ = ξ
    return SuperAlgebra("grassmann1_q", f, 2, parity, circ, {});
}

SuperAlgebra build_unit1_q() {
    FieldSpec f = FieldSpec::rationals();
    StructureTable circ;
    circ[{0, 0, 0}] = Scalar::one(f);
    return SuperAlgebra("unit1_q", f, 1, {0}, circ, {});
}

SuperAlgebra build_zero(long dim, const FieldSpec& f) {
    if (dim < 0) throw ParseError("zero(n,field): n must be >= 0");
    return SuperAlgebra("zero(" + std::to_string(dim) + "," + f.str() + ")", f,
                        static_cast<int>(dim), std::vector<int>(dim, 0), {}, {});
}

} // namespace

std::vector<EntryDoc> list_entries() {
    return {
        {"sl2(<field>)", "special linear Lie bracket, zero circ product"},
        {"tp_sl2_gf3(a,b)",
         "sl2 over GF(3) with e1∘e1 = a·e2, e2∘e2 = b·e1; transposed Poisson "
         "iff a·b = 0"},
        {"solvable3_q",
         "non-nilpotent solvable bracket with unital circ product (unit e3)"},
        {"nonlie_remark_q",
         "e3∘e3 = e1, {e1,e3} = e1+e2; its Lie double is not a Lie superalgebra"},
        {"grassmann1_q", "one even and one odd generator, zero bracket"},
        {"radical_demo_q", "sl2(Q) ⊕ solvable3_q"},
        {"unit1_q", "one-dimensional unital circ product, zero bracket"},
        {"zero(n,<field>)", "both products identically zero"},
    };
}

SuperAlgebra get(const std::string& key) {
    auto [name, args] = split_key(key);
    auto want_args = [&](std::size_t n) {
        if (args.size() != n)
            throw ParseError("catalog key '" + name + "' expects " +
                             std::to_string(n) + " argument(s)");
    };
    if (name == "sl2") {
        want_args(1);
        return build_sl2(parse_field_arg(args[0]));
    }
    if (name == "tp_sl2_gf3") {
        want_args(2);
        long a = parse_int_arg(args[0]), b = parse_int_arg(args[1]);
        if (a < 0 || a > 2 || b < 0 || b > 2)
            throw ParseError("tp_sl2_gf3 parameters must lie in GF(3)");
        return build_tp_sl2_gf3(a, b);
    }
    if (name == "solvable3_q") {
        want_args(0);
        return build_solvable3_q();
    }
    if (name == "nonlie_remark_q") {
        want_args(0);
        return build_nonlie_remark_q();
    }
    if (name == "grassmann1_q") {
        want_args(0);
        return build_grassmann1_q();
    }
    if (name == "radical_demo_q") {
        want_args(0);
        return direct_sum(build_sl2(FieldSpec::rationals()), build_solvable3_q())
            .with_name("radical_demo_q");
    }
    if (name == "unit1_q") {
        want_args(0);
        return build_unit1_q();
    }
    if (name == "zero") {
        want_args(2);
        return build_zero(parse_int_arg(args[0]), parse_field_arg(args[1]));
    }
    throw ParseError("unknown catalog key '" + key + "'");
}

std::vector<Claim> expected(const std::string& key) {
    auto [name, args] = split_key(key);
    std::vector<Claim> claims;
    claims.push_back({"validate_ok", json::object(), "well-formed tables"});
    if (name == "sl2") {
        FieldSpec f = parse_field_arg(args.at(0));
        claims.push_back({"is_tp", {{"value", true}}, "zero circ product"});
        claims.push_back({"simple",
                          {{"which", "BRACKET"}, {"value", "SIMPLE"}},
                          "sl2 is simple away from characteristic 2"});
        bool char3 = !f.is_rationals() && f.p == 3;
        claims.push_back(
            {"halfder_dim",
             {{"product", "BRACKET"}, {"parity", 0}, {"value", char3 ? 5 : 1}},
             char3 ? "the three-parameter family plus two weight maps; "
                     "matches enumeration of all 3^9 candidates"
                   : "only scalar multiples of the identity"});
        return claims;
    }
    if (name == "tp_sl2_gf3") {
        long a = parse_int_arg(args.at(0)), b = parse_int_arg(args.at(1));
        bool tp = (a * b) % 3 == 0;
        claims.push_back({"is_tp",
                          {{"value", tp}},
                          tp ? "product of the two parameters vanishes"
                             : "Leibniz rule fails when both parameters are "
                               "nonzero"});
        if (tp) {
            claims.push_back({"simple",
                              {{"which", "TP"}, {"value", "SIMPLE"}},
                              "built on a simple bracket"});
            claims.push_back({"simple",
                              {{"which", "BRACKET"}, {"value", "SIMPLE"}},
                              "sl2 in characteristic 3"});
            claims.push_back({"halfder_dim",
                              {{"product", "BRACKET"}, {"parity", 0},
                               {"value", 5}},
                              "same bracket as sl2 in characteristic 3"});
            claims.push_back({"kantor_double_jordan",
                              json::object(),
                              "double of a transposed Poisson algebra"});
        }
        if (a == 1 && b == 0) {
            claims.push_back({"circ_power_dims",
                              {{"value", json::array({3, 1, 0})}},
                              "e1∘e1 = e2 is the only nonzero product"});
            claims.push_back({"annihilator_of_double",
                              {{"basis_indices", json::array({1, 2})}},
                              "e3 kills the whole double, and so does e2 "
                              "since e2∘e2 = 0 here"});
        }
        return claims;
    }
    if (name == "solvable3_q") {
        claims.push_back({"is_tp", {{"value", true}}, "direct verification"});
        claims.push_back({"derived_series_dims",
                          {{"value", json::array({3, 2, 0})}},
                          "solvable bracket"});
        claims.push_back({"lower_central_stable_nonzero",
                          {{"value", true}},
                          "non-nilpotent: {e1,e3} = e1 repeats forever"});
        claims.push_back({"unit", {{"basis_index", 2}}, "e3 is the unit"});
        claims.push_back({"perfect_circ", {{"value", true}}, "unital"});
        claims.push_back({"nilpotent_circ", {{"value", false}}, "unital"});
        claims.push_back({"simple",
                          {{"which", "TP"}, {"value", "NOT_SIMPLE"}},
                          "span{e1,e2} is an ideal"});
        return claims;
    }
    if (name == "nonlie_remark_q") {
        claims.push_back({"is_tp", {{"value", true}}, "direct verification"});
        claims.push_back(
            {"lie_double_jacobi_defect",
             {{"tuple", json::array({5, 5, 5})},
              {"coords", json::array({"0", "0", "0", "-3", "-3", "0"})}},
             "the Lie double is not a Lie superalgebra"});
        return claims;
    }
    if (name == "grassmann1_q") {
        claims.push_back({"is_tp",
                          {{"value", true}},
                          "zero bracket; odd square forced to zero"});
        claims.push_back({"unit", {{"basis_index", 0}}, "even generator"});
        return claims;
    }
    if (name == "radical_demo_q") {
        claims.push_back({"is_tp", {{"value", true}}, "sum of two TP algebras"});
        claims.push_back({"radical_series_dims",
                          {{"value", json::array({3, 2, 0})}},
                          "radical is the solvable summand"});
        claims.push_back({"circ_square_inside_radical",
                          json::object(),
                          "circ products live in the solvable summand"});
        return claims;
    }
    if (name == "unit1_q") {
        claims.push_back({"is_tp", {{"value", true}}, "unital, zero bracket"});
        claims.push_back({"unit", {{"basis_index", 0}}, "one-dimensional"});
        return claims;
    }
    if (name == "zero") {
        claims.push_back({"is_tp", {{"value", true}}, "everything vanishes"});
        claims.push_back({"halfder_dim",
                          {{"product", "BRACKET"}, {"parity", 0},
                           {"value", static_cast<int>(parse_int_arg(args.at(0)) *
                                                      parse_int_arg(args.at(0)))}},
                          "every linear map qualifies"});
        return claims;
    }
    throw ParseError("unknown catalog key '" + key + "'");
}

std::vector<SuperAlgebra> tp_instances() {
    std::vector<SuperAlgebra> out;
    out.push_back(get("sl2(Q)"));
    out.push_back(get("sl2(GF3)"));
    for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}})
        out.push_back(get("tp_sl2_gf3(" + std::to_string(a) + "," +
                          std::to_string(b) + ")"));
    out.push_back(get("solvable3_q"));
    out.push_back(get("nonlie_remark_q"));
    out.push_back(get("grassmann1_q"));
    out.push_back(get("radical_demo_q"));
    out.push_back(get("unit1_q"));
    out.push_back(get("zero(2,Q)"));
    out.push_back(get("zero(3,GF3)"));
    return out;
}

} // namespace tpalg::catalog
