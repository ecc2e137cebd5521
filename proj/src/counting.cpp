#include "prescount/counting.hpp"

#include <algorithm>
#include <set>

namespace prescount {

std::vector<ExponentVector> spectrum_E_d(const Prescription& p, const GroupStructure& gs, int d) {
    if (d < 1 || d > p.tau()) throw invalid_input("spectrum degree must satisfy 1 <= d <= tau");
    std::set<std::size_t> hit;
    for_each_monic(p.field, d, /*nonzero_constant=*/p.kind == Kind::I, [&](const FPoly& f) {
        auto c = class_of(p, f);
        if (c) hit.insert(gs.index_of(*c));
    });
    std::vector<ExponentVector> out;
    out.reserve(hit.size());
    for (std::size_t idx : hit) out.push_back(gs.exponents_at(idx));
    return out;
}

Spectra all_spectra(const Prescription& p, const GroupStructure& gs) {
    Spectra s;
    for (int d = 1; d <= p.tau(); ++d) s.push_back(spectrum_E_d(p, gs, d));
    return s;
}

CycloNum char_coeff(const GroupStructure& gs, const std::vector<ExponentVector>& spectrum,
                    const CharIndex& j, const CycloCtx& ctx) {
    const auto& orders = gs.orders();
    std::int64_t R = ctx.R();
    CycloNum acc = ctx.zero();
    for (const auto& v : spectrum) {
        std::int64_t ang = 0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            ang = (ang + (R / orders[i]) * ((v[i] * j[i]) % orders[i])) % R;
        ctx.add_assign(acc, ctx.root_of_unity(ang));
    }
    return acc;
}

PPoly build_P(const GroupStructure& gs, const Spectra& spectra, const CharIndex& j,
              const CycloCtx& ctx) {
    PPoly P;
    P.c.reserve(spectra.size() + 1);
    P.c.push_back(ctx.one());
    for (const auto& spec : spectra) P.c.push_back(char_coeff(gs, spec, j, ctx));
    return P;
}

PPoly build_P(const Prescription& p, const GroupStructure& gs, const CharIndex& j,
              const CycloCtx& ctx) {
    return build_P(gs, all_spectra(p, gs), j, ctx);
}

std::vector<CycloNum> log_series(const PPoly& P, int n_max, const CycloCtx& ctx) {
    if (P.c.empty() || !ctx.is_rational(P.c[0]) || ctx.to_rational(P.c[0]) != 1)
        throw invalid_input("log_series requires constant coefficient 1");
    int tau = P.degree();
    std::vector<CycloNum> b(n_max + 1, ctx.zero());
    for (int n = 1; n <= n_max; ++n) {
        CycloNum acc = (n <= tau) ? ctx.scalar_mul(P.c[n], Rat(n)) : ctx.zero();
        for (int k = std::max(1, n - tau); k <= n - 1; ++k)
            acc = ctx.sub(acc, ctx.mul(b[k], P.c[n - k]));
        b[n] = std::move(acc);
    }
    return b;
}

std::vector<ExponentVector> solve_power_congruence(const std::vector<std::int64_t>& orders,
                                                   std::int64_t k, const ExponentVector& t) {
    if (k < 1) throw invalid_input("power congruence requires k >= 1");
    if (t.size() != orders.size()) throw invalid_input("exponent vector has wrong length");
    // per component: k s = t (mod r) has gcd(k, r) solutions iff gcd(k, r) | t
    std::vector<std::vector<std::int64_t>> comp(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::int64_t r = orders[i], g = std::gcd(k, r);
        if (t[i] % g != 0) return {};
        std::int64_t rg = r / g;
        std::int64_t s0 = 0;
        if (rg > 1) s0 = ((t[i] / g) % rg) * nt::mod_inverse((k / g) % rg, rg) % rg;
        for (std::int64_t a = 0; a < g; ++a) comp[i].push_back(s0 + rg * a);
    }
    std::vector<ExponentVector> out;
    ExponentVector cur(orders.size());
    std::size_t total = 1;
    for (auto& c : comp) total *= c.size();
    out.reserve(total);
    std::vector<std::size_t> pos(orders.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        for (std::size_t i = 0; i < orders.size(); ++i) cur[i] = comp[i][pos[i]];
        out.push_back(cur);
        for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
            if (++pos[i] < comp[i].size()) break;
            pos[i] = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Counter::Counter(const Prescription& p, const GroupStructure& gs)
    : presc_(p), gs_(gs), ctx_(static_cast<int>(gs.root_order())), spectra_(all_spectra(p, gs)) {
    std::size_t EN = static_cast<std::size_t>(gs_.order());
    numerators_.resize(EN);
    b_.resize(EN);
    for (std::size_t m = 1; m < EN; ++m)
        numerators_[m] = build_P(gs_, spectra_, gs_.exponents_at(m), ctx_);
}

const PPoly& Counter::numerator(std::size_t j_linear_index) const {
    if (j_linear_index < 1 || j_linear_index >= numerators_.size())
        throw invalid_input("nontrivial character index required");
    return numerators_[j_linear_index];
}

void Counter::ensure_series(int n_max, Exec exec) {
    if (n_max <= built_n_) return;
    std::int64_t EN = gs_.order();
    bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::int64_t m = 1; m < EN; ++m)
        b_[static_cast<std::size_t>(m)] =
            log_series(numerators_[static_cast<std::size_t>(m)], n_max, ctx_);
    built_n_ = n_max;
}

Int Counter::assemble_n(std::size_t class_index, int n) const {
    const auto& orders = gs_.orders();
    std::int64_t R = ctx_.R();
    ExponentVector s = gs_.exponents_at(class_index);
    CycloNum acc = ctx_.zero();
    for (std::size_t m = 1; m < b_.size(); ++m) {
        ExponentVector j = gs_.exponents_at(m);
        std::int64_t ang = 0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            ang = (ang + (R / orders[i]) * ((j[i] * s[i]) % orders[i])) % R;
        ctx_.add_assign(acc, ctx_.mul(ctx_.root_of_unity(-ang), b_[m][static_cast<std::size_t>(n)]));
    }
    Rat total = ctx_.to_rational(acc);  // throws not_rational on internal error
    total += rat(nt::pow_int(presc_.field.q(), static_cast<unsigned long>(n)));
    if (presc_.kind == Kind::I) total -= 1;
    total /= Rat(gs_.order());
    if (total.get_den() != 1 || total < 0)
        throw not_integer("count did not evaluate to a nonnegative integer");
    return total.get_num();
}

const std::vector<Int>& Counter::n_row(int n, Exec exec) {
    if (n < 1) throw invalid_input("n must be >= 1");
    auto it = rows_.find(n);
    if (it != rows_.end()) return it->second;
    ensure_series(n, exec);
    std::int64_t EN = gs_.order();
    std::vector<Int> row(static_cast<std::size_t>(EN));
    bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::int64_t c = 0; c < EN; ++c)
        row[static_cast<std::size_t>(c)] = assemble_n(static_cast<std::size_t>(c), n);
    return rows_.emplace(n, std::move(row)).first->second;
}

Int Counter::n_of(const ExponentVector& eps, int n, Exec exec) {
    return n_row(n, exec)[gs_.linear_index(eps)];
}

std::vector<std::vector<Int>> Counter::n_table(int n_max, Exec exec) {
    ensure_series(n_max, exec);
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.push_back(n_row(n, exec));
    return out;
}

Int Counter::i_of(const ExponentVector& t, int d, Exec exec) {
    if (d < 1) throw invalid_input("d must be >= 1");
    Int acc = 0;
    for (std::int64_t k : nt::divisors(d)) {
        int mu = nt::mobius(k);
        if (mu == 0) continue;
        const std::vector<Int>& row = n_row(d / static_cast<int>(k), exec);
        for (const auto& s : solve_power_congruence(gs_.orders(), k, t)) {
            if (mu > 0)
                acc += row[gs_.linear_index(s)];
            else
                acc -= row[gs_.linear_index(s)];
        }
    }
    if (acc % d != 0 || acc < 0)
        throw not_integer("Moebius inversion did not yield a nonnegative integer");
    return acc / d;
}

std::vector<std::vector<Int>> Counter::i_table(int d_max, Exec exec) {
    ensure_series(d_max, exec);
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<std::size_t>(d_max));
    for (int d = 1; d <= d_max; ++d) {
        std::vector<Int> row;
        row.reserve(static_cast<std::size_t>(gs_.order()));
        for (std::int64_t c = 0; c < gs_.order(); ++c)
            row.push_back(i_of(gs_.exponents_at(static_cast<std::size_t>(c)), d, exec));
        out.push_back(std::move(row));
    }
    return out;
}

ZetaData Counter::zeta_numerators() const {
    ZetaData z;
    std::int64_t q = presc_.field.q();
    if (presc_.kind == Kind::I) {
        z.trivial_num.c = {Int(1), Int(-1)};
        z.trivial_den.c = {Int(1), Int(-q)};
    } else {
        z.trivial_num.c = {Int(1)};
        z.trivial_den.c = {Int(1), Int(-q)};
    }
    for (std::size_t m = 1; m < numerators_.size(); ++m)
        z.numerators.emplace_back(gs_.exponents_at(m), numerators_[m]);
    return z;
}

}  // namespace prescount
