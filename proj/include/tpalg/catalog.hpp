#pragma once

#include "tpalg/algebra.hpp"

#include <json.hpp>

namespace tpalg::catalog {

// Machine-checkable expectation about a catalog algebra. `kind` selects the
// validating operation in the regression suite; `payload` carries its
// arguments/expected values; `note` states the mathematical reason.
struct Claim {
    std::string kind;
    nlohmann::json payload;
    std::string note;
};

struct EntryDoc {
    std::string key;      // canonical key syntax, e.g. "tp_sl2_gf3(a,b)"
    std::string summary;
};

// Key grammar: bare name or name(arg,...). Field arguments are "Q" or
// "GF<p>" (e.g. "GF3").
//
//   sl2(<field>)        sl2 bracket, zero circ
//   tp_sl2_gf3(a,b)     sl2 over GF(3) with e1∘e1 = a·e2, e2∘e2 = b·e1
//   solvable3_q         {e1,e3}=e1, {e2,e3}=e2; e1e3=e1, e2e3=e2, e3e3=e3
//   nonlie_remark_q     e3∘e3=e1; {e1,e3}=e1+e2
//   grassmann1_q        one even and one odd generator, zero bracket
//   radical_demo_q      sl2(Q) ⊕ solvable3_q
//   unit1_q             one-dimensional unital circ, zero bracket
//   zero(n,<field>)     both products zero
std::vector<EntryDoc> list_entries();

SuperAlgebra get(const std::string& key);

std::vector<Claim> expected(const std::string& key);

// Every catalog instance that is a transposed Poisson (super)algebra,
// including all five admissible (a,b) pairs of the GF(3) family. This is the
// iteration set for the axiom-consequence property suites.
std::vector<SuperAlgebra> tp_instances();

} // namespace tpalg::catalog
