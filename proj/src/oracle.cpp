#include "prescount/oracle.hpp"

#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prescount {

Int total_irreducibles(std::int64_t q, int d) {
    if (d < 1) throw invalid_input("degree must be >= 1");
    Int acc = 0;
    for (std::int64_t k : nt::divisors(d)) {
        int mu = nt::mobius(k);
        if (mu == 0) continue;
        Int term = nt::pow_int(q, static_cast<unsigned long>(d / k));
        acc += mu > 0 ? term : -term;
    }
    return acc / d;
}

namespace {

// F_{q^n} = F_q[y]/(m), elements are FPoly over the base of degree < n
struct ExtField {
    const FieldCtx& base;
    FPoly mod;
    int n;

    ExtField(const FieldCtx& F, int degree)
        : base(F), mod(least_irreducible(F, degree)), n(degree) {}

    FPoly mul(const FPoly& a, const FPoly& b) const {
        return poly_mod(base, poly_mul(base, a, b), mod);
    }
    FPoly pow(FPoly a, std::int64_t e) const {
        FPoly res = poly_one(base);
        while (e > 0) {
            if (e & 1) res = mul(res, a);
            a = mul(a, a);
            e >>= 1;
        }
        return res;
    }
    FPoly element(std::uint64_t index) const {
        std::vector<std::int64_t> enc(n);
        for (int i = 0; i < n; ++i) {
            enc[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(base.q()));
            index /= static_cast<std::uint64_t>(base.q());
        }
        return poly_from_encodings(base, enc);
    }
};

// characteristic polynomial of alpha over F_q as a base-field polynomial
FPoly char_poly(const ExtField& E, const FPoly& alpha) {
    const FieldCtx& F = E.base;
    std::vector<FPoly> conj;
    conj.reserve(E.n);
    FPoly x = alpha;
    for (int i = 0; i < E.n; ++i) {
        conj.push_back(x);
        x = E.pow(x, F.q());
    }
    if (x != alpha) throw not_integer("Frobenius orbit did not close");
    // incremental product of (X - conj_i) with coefficients in the extension
    std::vector<FPoly> Q{poly_one(F)};
    for (const FPoly& c : conj) {
        FPoly neg_c = poly_sub(F, FPoly{}, c);
        std::vector<FPoly> next(Q.size() + 1);
        for (std::size_t i = 0; i < Q.size(); ++i) {
            next[i + 1] = poly_add(F, next[i + 1], Q[i]);
            next[i] = poly_add(F, next[i], E.mul(Q[i], neg_c));
        }
        Q = std::move(next);
    }
    std::vector<std::int64_t> enc(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) {
        if (Q[i].degree() > 0) throw not_integer("characteristic polynomial left the base field");
        enc[i] = Q[i].is_zero() ? 0 : Q[i].c[0].v;
    }
    return poly_from_encodings(E.base, enc);
}

std::uint64_t checked_count(const Int& count, const Int& budget, const char* what) {
    if (count > budget || !count.fits_ulong_p())
        throw budget_exceeded(std::string(what) + " exceeds the candidate budget");
    return static_cast<std::uint64_t>(count.get_ui());
}

template <typename PerIndex>
std::vector<Int> tally_kernel(std::uint64_t total, std::size_t classes, Exec exec,
                              PerIndex&& per_index) {
    std::vector<std::int64_t> tally(classes, 0);
    if (exec == Exec::serial) {
        for (std::uint64_t i = 0; i < total; ++i) {
            auto idx = per_index(i);
            if (idx != SIZE_MAX) ++tally[idx];
        }
    } else {
#pragma omp parallel
        {
            std::vector<std::int64_t> local(classes, 0);
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
                auto idx = per_index(static_cast<std::uint64_t>(i));
                if (idx != SIZE_MAX) ++local[idx];
            }
#pragma omp critical
            for (std::size_t c = 0; c < classes; ++c) tally[c] += local[c];
        }
    }
    std::vector<Int> out(classes);
    for (std::size_t c = 0; c < classes; ++c) out[c] = tally[c];
    return out;
}

}  // namespace

std::vector<Int> brute_I(const Prescription& p, const GroupStructure& gs, int d,
                         const Int& budget, Exec exec) {
    if (d < 1) throw invalid_input("degree must be >= 1");
    std::uint64_t total = checked_count(monic_count(p.field, d, false), budget, "q^d");
    std::size_t classes = static_cast<std::size_t>(gs.order());
    return tally_kernel(total, classes, exec, [&](std::uint64_t i) -> std::size_t {
        FPoly f = monic_by_index(p.field, d, i);
        if (!is_irreducible(p.field, f)) return SIZE_MAX;
        auto c = class_of(p, f);
        if (!c) return SIZE_MAX;  // type I: the single irreducible f = x
        return gs.index_of(*c);
    });
}

std::vector<Int> brute_F(const Prescription& p, const GroupStructure& gs, int n,
                         const Int& budget, Exec exec) {
    if (n < 1) throw invalid_input("n must be >= 1");
    std::uint64_t total = checked_count(nt::pow_int(p.field.q(), static_cast<unsigned long>(n)),
                                        budget, "q^n");
    std::size_t classes = static_cast<std::size_t>(gs.order());
    ExtField E(p.field, n);
    return tally_kernel(total, classes, exec, [&](std::uint64_t i) -> std::size_t {
        if (i == 0 && p.kind == Kind::I) return SIZE_MAX;  // alpha = 0
        FPoly alpha = E.element(i);
        auto c = class_of(p, char_poly(E, alpha));
        if (!c) return SIZE_MAX;
        return gs.index_of(*c);
    });
}

OracleReport verify_counts(const Prescription& p, const GroupStructure& gs, Counter& counter,
                           int n_max, int d_max, const Int& budget, Exec exec) {
    auto t0 = std::chrono::steady_clock::now();
    OracleReport rep;
    {
        std::ostringstream os;
        os << p.field.to_spec() << ",type=" << (p.kind == Kind::I ? "I" : "II")
           << ",ell=" << p.ell;
        if (p.kind == Kind::I) os << ",t=" << p.t;
        rep.instance = os.str();
    }
    auto record = [&](char kind, int n, std::size_t cls, Int expected, Int computed) {
        bool ok = expected == computed;
        if (!ok && rep.pass) {
            rep.pass = false;
            std::ostringstream os;
            os << kind << "_" << n << " mismatch at class index " << cls << ": brute force "
               << expected.get_str() << ", pipeline " << computed.get_str();
            rep.first_mismatch = os.str();
        }
        rep.checks.push_back({kind, n, cls, std::move(expected), std::move(computed), ok});
    };
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Int> ground = brute_F(p, gs, n, budget, exec);
        const std::vector<Int>& row = counter.n_row(n, exec);
        for (std::size_t c = 0; c < ground.size(); ++c) record('N', n, c, ground[c], row[c]);
    }
    for (int d = 1; d <= d_max; ++d) {
        std::vector<Int> ground = brute_I(p, gs, d, budget, exec);
        for (std::size_t c = 0; c < ground.size(); ++c)
            record('I', d, c, ground[c], counter.i_of(gs.exponents_at(c), d, exec));
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace prescount
