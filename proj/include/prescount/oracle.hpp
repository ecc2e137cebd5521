#pragma once

// Brute-force ground truth, deliberately unclever: direct enumeration of
// irreducible polynomials for I_d, and characteristic-polynomial tallies
// F_q(n, eps) over F_{q^n} for N_n.  Each kernel has a serial reference
// path and an OpenMP path (Exec); both produce identical tallies.

#include <cstdint>
#include <string>
#include <vector>

#include "prescount/class_group.hpp"
#include "prescount/counting.hpp"

namespace prescount {

// classical necklace count (1/d) sum_{k|d} mu(k) q^{d/k}
Int total_irreducibles(std::int64_t q, int d);

// I_d tallies by class linear index: enumerate monic degree-d polynomials,
// filter by is_irreducible, classify.  Throws budget_exceeded when q^d
// exceeds the candidate budget.
std::vector<Int> brute_I(const Prescription& p, const GroupStructure& gs, int d,
                         const Int& budget, Exec exec = Exec::serial);

// F_q(n, eps) tallies by class linear index: for each alpha in F_{q^n}
// (type I skips alpha = 0), form the characteristic polynomial
// Q_alpha = prod_j (x - alpha^{q^j}) by repeated Frobenius and classify.
std::vector<Int> brute_F(const Prescription& p, const GroupStructure& gs, int n,
                         const Int& budget, Exec exec = Exec::serial);

struct OracleCheck {
    char kind;  // 'N' or 'I'
    int n;
    std::size_t class_index;
    Int expected;  // brute force
    Int computed;  // pipeline
    bool pass;
};

struct OracleReport {
    std::string instance;
    bool pass = true;
    double elapsed_seconds = 0.0;
    std::vector<OracleCheck> checks;
    // first failing check, empty when pass
    std::string first_mismatch;
};

// brute_F vs Counter::n_of for n <= n_max and brute_I vs Counter::i_of for
// d <= d_max, every class covered
OracleReport verify_counts(const Prescription& p, const GroupStructure& gs, Counter& counter,
                           int n_max, int d_max, const Int& budget, Exec exec = Exec::serial);

}  // namespace prescount
