#include "tpalg/algebra.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tpalg {

bool Element::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    if (coords.size() != o.coords.size())
        throw DimensionError("element dimension mismatch");
    Element r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.coords[i] = coords[i] + o.coords[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    if (coords.size() != o.coords.size())
        throw DimensionError("element dimension mismatch");
    Element r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.coords[i] = coords[i] - o.coords[i];
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r = *this;
    for (auto& x : r.coords) x = x * c;
    return r;
}

SuperAlgebra::SuperAlgebra(std::string name, FieldSpec field, int dim,
                           std::vector<int> parity, StructureTable circ,
                           StructureTable bracket)
    : name_(std::move(name)), field_(field), dim_(dim),
      parity_(std::move(parity)), circ_(std::move(circ)),
      bracket_(std::move(bracket)) {
    if (dim_ < 0) throw DimensionError("negative dimension");
    if (static_cast<int>(parity_.size()) != dim_)
        throw DimensionError("parity vector length != dim");
    for (int p : parity_)
        if (p != 0 && p != 1) throw ParityError("parity entries must be 0 or 1");
    for (const auto* t : {&circ_, &bracket_})
        for (const auto& [ijk, c] : *t) {
            if (c.field() != field_)
                throw FieldMismatchError("table coefficient field mismatch");
            for (int idx : ijk)
                if (idx < 0 || idx >= dim_)
                    throw DimensionError("table index out of range");
        }
}

bool SuperAlgebra::is_graded() const {
    for (int p : parity_)
        if (p) return true;
    return false;
}

Scalar parity_sign(const FieldSpec& f, int p, int q) {
    return (p & 1) && (q & 1) ? -Scalar::one(f) : Scalar::one(f);
}

ValidationReport SuperAlgebra::validate() const {
    auto fail = [](std::array<int, 3> e, std::string why) {
        return ValidationReport{false, TableViolation{e, std::move(why)}};
    };
    for (const auto* t : {&circ_, &bracket_}) {
        bool is_circ = t == &circ_;
        for (const auto& [ijk, c] : *t) {
            if (c.is_zero()) continue;
            auto [i, j, k] = ijk;
            if ((parity_[i] + parity_[j]) % 2 != parity_[k])
                return fail(ijk, "parity violation");
            // circ: c_ij = (-1)^{|i||j|} c_ji; bracket gets an extra minus.
            Scalar expected = c * parity_sign(field_, parity_[i], parity_[j]);
            if (!is_circ) expected = -expected;
            auto mirror = t->find({j, i, k});
            Scalar have =
                mirror == t->end() ? Scalar::zero(field_) : mirror->second;
            if (have != expected)
                return fail(ijk, is_circ ? "supercommutativity violation"
                                         : "super skew-symmetry violation");
        }
    }
    return ValidationReport{};
}

Element SuperAlgebra::multiply_basis(Product which, int i, int j) const {
    Element out = Element::zero(field_, dim_);
    const StructureTable& t = table(which);
    for (auto it = t.lower_bound({i, j, 0});
         it != t.end() && it->first[0] == i && it->first[1] == j; ++it)
        out.coords[it->first[2]] += it->second;
    return out;
}

Element SuperAlgebra::multiply(Product which, const Element& x,
                               const Element& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
        throw DimensionError("element dimension != algebra dimension");
    Element out = Element::zero(field_, dim_);
    const StructureTable& t = table(which);
    for (const auto& [ijk, c] : t) {
        auto [i, j, k] = ijk;
        if (x.coords[i].is_zero() || y.coords[j].is_zero()) continue;
        out.coords[k] += x.coords[i] * y.coords[j] * c;
    }
    return out;
}

std::optional<int> SuperAlgebra::homogeneous_parity(const Element& x) const {
    std::optional<int> p;
    for (int i = 0; i < dim_; ++i) {
        if (x.coords[i].is_zero()) continue;
        if (!p)
            p = parity_[i];
        else if (*p != parity_[i])
            throw ParityError("element is not parity-homogeneous");
    }
    return p;
}

Matrix SuperAlgebra::left_mult_operator(Product which, const Element& a) const {
    if (a.dim() != dim_)
        throw DimensionError("element dimension != algebra dimension");
    if (is_graded()) homogeneous_parity(a); // throws on mixed parity
    Matrix m(field_, dim_, dim_);
    const StructureTable& t = table(which);
    for (const auto& [ijk, c] : t) {
        auto [i, j, k] = ijk;
        if (a.coords[i].is_zero()) continue;
        m.at(k, j) += a.coords[i] * c;
    }
    return m;
}

Matrix SuperAlgebra::left_mult_operator(Product which, int basis_index) const {
    return left_mult_operator(which, Element::basis(field_, dim_, basis_index));
}

SuperAlgebra SuperAlgebra::with_name(std::string name) const {
    return SuperAlgebra(std::move(name), field_, dim_, parity_, circ_, bracket_);
}

bool SuperAlgebra::operator==(const SuperAlgebra& o) const {
    return name_ == o.name_ && field_ == o.field_ && dim_ == o.dim_ &&
           parity_ == o.parity_ && circ_ == o.circ_ && bracket_ == o.bracket_;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("direct sum needs a common field");
    int n = a.dim();
    std::vector<int> parity = a.parities();
    parity.insert(parity.end(), b.parities().begin(), b.parities().end());
    StructureTable circ, bracket;
    for (auto which : {Product::Circ, Product::Bracket}) {
        StructureTable& out = which == Product::Circ ? circ : bracket;
        for (const auto& [ijk, c] : a.table(which)) out[ijk] = c;
        for (const auto& [ijk, c] : b.table(which))
            out[{ijk[0] + n, ijk[1] + n, ijk[2] + n}] = c;
    }
    return SuperAlgebra(a.name() + "+" + b.name(), a.field(), n + b.dim(),
                        std::move(parity), std::move(circ), std::move(bracket));
}

// --- file format --------------------------------------------------------

namespace {

using nlohmann::json;

json field_to_json(const FieldSpec& f) {
    if (f.is_rationals()) return json{{"kind", "Q"}};
    return json{{"kind", "GF"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "GF") return FieldSpec::prime_field(j.at("p").get<std::uint64_t>());
    throw ParseError("unknown field kind '" + kind + "'");
}

json table_to_json(const StructureTable& t) {
    json arr = json::array();
    for (const auto& [ijk, c] : t) {
        if (c.is_zero()) continue;
        arr.push_back(json::array({ijk[0], ijk[1], ijk[2], c.str()}));
    }
    return arr;
}

StructureTable table_from_json(const json& arr, const FieldSpec& f) {
    StructureTable t;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 4)
            throw ParseError("table entry must be [i,j,k,\"coeff\"]");
        std::array<int, 3> ijk{item[0].get<int>(), item[1].get<int>(),
                               item[2].get<int>()};
        Scalar c = Scalar::parse(f, item[3].get<std::string>());
        if (t.count(ijk))
            throw ParseError("duplicate table entry (" + std::to_string(ijk[0]) +
                             "," + std::to_string(ijk[1]) + "," +
                             std::to_string(ijk[2]) + ")");
        if (!c.is_zero()) t[ijk] = c;
    }
    return t;
}

} // namespace

std::string save_algebra(const SuperAlgebra& a) {
    json j;
    j["name"] = a.name();
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["parity"] = a.parities();
    j["circ"] = table_to_json(a.table(Product::Circ));
    j["bracket"] = table_to_json(a.table(Product::Bracket));
    return j.dump(2) + "\n";
}

SuperAlgebra load_algebra(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        FieldSpec f = field_from_json(j.at("field"));
        SuperAlgebra a(j.at("name").get<std::string>(), f, j.at("dim").get<int>(),
                       j.at("parity").get<std::vector<int>>(),
                       table_from_json(j.at("circ"), f),
                       table_from_json(j.at("bracket"), f));
        ValidationReport report = a.validate();
        if (!report.ok) {
            const auto& v = *report.first_violation;
            throw ParseError("invalid structure table at (" +
                             std::to_string(v.entry[0]) + "," +
                             std::to_string(v.entry[1]) + "," +
                             std::to_string(v.entry[2]) + "): " + v.reason);
        }
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad algebra file: ") + e.what());
    }
}

SuperAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_algebra(ss.str());
}

void save_algebra_file(const SuperAlgebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << save_algebra(a);
}

} // namespace tpalg
