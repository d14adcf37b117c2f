#include "tpalg/halfderiv.hpp"

#include "tpalg/identities.hpp"

namespace tpalg {

HalfDerivationSpace half_derivations(const SuperAlgebra& a, Product which,
                                     int parity) {
    if (parity != 0 && parity != 1) throw ParityError("parity must be 0 or 1");
    const FieldSpec& f = a.field();
    int n = a.dim();
    const StructureTable& t = a.table(which);
    Scalar two = Scalar::from_int(f, 2);

    // Unknowns: D_{l,k} flattened row-major (index l·n + k). Equations, for
    // every basis pair (i,j) and output coordinate m:
    //   2 Σ_k c^k_{ij} D_{m,k} − Σ_l c^m_{lj} D_{l,i}
    //                          − (-1)^{parity·|i|} Σ_l c^m_{il} D_{l,j} = 0
    // plus one pinning equation per entry forbidden by the operator parity.
    std::vector<std::vector<Scalar>> rows;
    auto zero_row = [&]() {
        return std::vector<Scalar>(static_cast<std::size_t>(n) * n,
                                   Scalar::zero(f));
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar sign = parity_sign(f, parity, a.parity(i));
            for (int m = 0; m < n; ++m) {
                auto row = zero_row();
                bool nontrivial = false;
                for (auto it = t.lower_bound({i, j, 0});
                     it != t.end() && it->first[0] == i && it->first[1] == j;
                     ++it) {
                    int k = it->first[2];
                    row[static_cast<std::size_t>(m) * n + k] +=
                        two * it->second;
                    nontrivial = true;
                }
                for (int l = 0; l < n; ++l) {
                    auto lj = t.find({l, j, m});
                    if (lj != t.end()) {
                        row[static_cast<std::size_t>(l) * n + i] -= lj->second;
                        nontrivial = true;
                    }
                    auto il = t.find({i, l, m});
                    if (il != t.end()) {
                        row[static_cast<std::size_t>(l) * n + j] -=
                            sign * il->second;
                        nontrivial = true;
                    }
                }
                if (nontrivial) rows.push_back(std::move(row));
            }
        }
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
            if ((a.parity(k) + parity) % 2 != a.parity(l)) {
                auto row = zero_row();
                row[static_cast<std::size_t>(l) * n + k] = Scalar::one(f);
                rows.push_back(std::move(row));
            }

    Matrix system(f, static_cast<int>(rows.size()), n * n);
    for (int r = 0; r < system.rows(); ++r)
        for (int c = 0; c < n * n; ++c) system.set(r, c, rows[r][c]);
    Subspace solution = Subspace::from_canonical(kernel_basis(system));

    HalfDerivationSpace space{which, parity, solution, {}};
    for (int r = 0; r < solution.dim(); ++r)
        space.basis.push_back(
            Matrix::unflatten(f, n, n, solution.basis_vector(r)));
    return space;
}

bool scalar_half_derivations_check(const SuperAlgebra& a) {
    // One solve per parity actually occurring among basis elements.
    HalfDerivationSpace even = half_derivations(a, Product::Bracket, 0);
    std::optional<HalfDerivationSpace> odd;
    for (int i = 0; i < a.dim(); ++i) {
        const HalfDerivationSpace* space = &even;
        if (a.parity(i) == 1) {
            if (!odd) odd = half_derivations(a, Product::Bracket, 1);
            space = &*odd;
        }
        if (!space->contains_operator(a.left_mult_operator(Product::Circ, i)))
            return false;
    }
    return true;
}

std::vector<TpAssignment> brute_force_tp_family(const SuperAlgebra& bracket_part,
                                                const std::vector<TpSlot>& slots,
                                                int max_slots) {
    const FieldSpec& f = bracket_part.field();
    if (f.is_rationals())
        throw UnsupportedError("brute-force enumeration needs a finite field");
    if (static_cast<int>(slots.size()) > max_slots)
        throw BudgetError("too many unknown slots (" +
                          std::to_string(slots.size()) + " > " +
                          std::to_string(max_slots) + ")");
    int n = bracket_part.dim();
    for (const auto& s : slots)
        if (s.i < 0 || s.i >= n || s.j < 0 || s.j >= n || s.k < 0 || s.k >= n)
            throw DimensionError("slot index out of range");

    std::vector<TpAssignment> accepted;
    std::vector<std::uint64_t> digits(slots.size(), 0);
    for (;;) {
        StructureTable circ = bracket_part.table(Product::Circ);
        bool consistent = true;
        for (std::size_t s = 0; s < slots.size() && consistent; ++s) {
            Scalar c = Scalar::residue(f, digits[s]);
            if (c.is_zero()) continue;
            const auto& slot = slots[s];
            Scalar mirror = c * parity_sign(f, bracket_part.parity(slot.i),
                                            bracket_part.parity(slot.j));
            if (circ.count({slot.i, slot.j, slot.k}) ||
                (slot.i != slot.j && circ.count({slot.j, slot.i, slot.k})))
                consistent = false;
            else {
                circ[{slot.i, slot.j, slot.k}] = c;
                if (slot.i != slot.j) circ[{slot.j, slot.i, slot.k}] = mirror;
            }
        }
        if (consistent) {
            SuperAlgebra candidate(bracket_part.name(), f, n,
                                   bracket_part.parities(), circ,
                                   bracket_part.table(Product::Bracket));
            if (candidate.validate().ok && is_transposed_poisson(candidate)) {
                std::vector<Scalar> values;
                for (auto d : digits) values.push_back(Scalar::residue(f, d));
                accepted.push_back({std::move(values), std::move(candidate)});
            }
        }
        // odometer, last slot fastest
        int pos = static_cast<int>(digits.size()) - 1;
        while (pos >= 0 && digits[pos] == f.p - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return accepted;
}

} // namespace tpalg
