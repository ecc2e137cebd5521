#include "prescount/class_group.hpp"

#include <algorithm>
#include <numeric>

namespace prescount {

Prescription Prescription::type_one(FieldCtx field, int ell, int t) {
    if (ell < 1 || t < 1) throw invalid_input("type I requires ell >= 1 and t >= 1");
    return Prescription{std::move(field), Kind::I, ell, t};
}

Prescription Prescription::type_two(FieldCtx field, int ell) {
    if (ell < 1) throw invalid_input("type II requires ell >= 1");
    return Prescription{std::move(field), Kind::II, ell, 0};
}

Int Prescription::group_order() const {
    if (kind == Kind::I)
        return Int(field.q() - 1) * nt::pow_int(field.q(), static_cast<unsigned long>(ell + t - 1));
    return nt::pow_int(field.q(), static_cast<unsigned long>(ell));
}

namespace {

void validate_rep(const Prescription& p, const ClassRep& c) {
    if (c.rep.degree() != p.rep_degree() || !c.rep.is_monic())
        throw invalid_input("malformed class representative");
    if (p.kind == Kind::I && c.rep.constant_term().v == 0)
        throw invalid_input("type I representative has zero constant term");
}

}  // namespace

std::optional<ClassRep> class_of(const Prescription& p, const FPoly& f) {
    if (!f.is_monic()) throw invalid_input("class_of requires a monic polynomial");
    const FieldCtx& F = p.field;
    int m = f.degree();
    if (p.kind == Kind::I && f.constant_term().v == 0) return std::nullopt;
    FPoly rep;
    rep.c.assign(p.rep_degree() + 1, F.zero());
    rep.c.back() = F.one();
    for (int j = 1; j <= p.ell; ++j) rep.c[p.rep_degree() - j] = f.coeff(m - j);
    if (p.kind == Kind::I)
        for (int j = 0; j < p.t; ++j) rep.c[j] = f.coeff(j);
    return ClassRep{std::move(rep)};
}

ClassRep class_identity(const Prescription& p) {
    FPoly rep;
    rep.c.assign(p.rep_degree() + 1, p.field.zero());
    rep.c.back() = p.field.one();
    if (p.kind == Kind::I) rep.c[0] = p.field.one();
    return ClassRep{std::move(rep)};
}

ClassRep class_mul(const Prescription& p, const ClassRep& a, const ClassRep& b) {
    validate_rep(p, a);
    validate_rep(p, b);
    return class_of(p, poly_mul(p.field, a.rep, b.rep)).value();
}

ClassRep class_pow(const Prescription& p, const ClassRep& a, std::int64_t e) {
    ClassRep res = class_identity(p), base = a;
    while (e > 0) {
        if (e & 1) res = class_mul(p, res, base);
        base = class_mul(p, base, base);
        e >>= 1;
    }
    return res;
}

ClassRep class_inverse(const Prescription& p, const ClassRep& a) {
    validate_rep(p, a);
    const FieldCtx& F = p.field;
    int D = p.rep_degree();
    // work with descending-index coefficients: f_j is the coefficient of x^{D-j}
    auto fj = [&](int j) { return a.rep.coeff(D - j); };
    std::vector<Fe> g(D + 1, F.zero());
    g[0] = F.one();
    int lead = (p.kind == Kind::I) ? p.ell : D;
    for (int d = 1; d <= lead; ++d) {
        Fe s = F.zero();
        for (int j = 1; j <= d; ++j) s = F.add(s, F.mul(fj(j), g[d - j]));
        g[d] = F.neg(s);
    }
    if (p.kind == Kind::I) {
        Fe flast_inv = F.inv(fj(D));
        g[D] = flast_inv;
        for (int d = 1; d <= p.t - 1; ++d) {
            Fe s = F.zero();
            for (int j = 1; j <= d; ++j) s = F.add(s, F.mul(fj(D - j), g[D - d + j]));
            g[D - d] = F.neg(F.mul(flast_inv, s));
        }
    }
    FPoly rep;
    rep.c.assign(D + 1, F.zero());
    for (int j = 0; j <= D; ++j) rep.c[D - j] = g[j];
    return ClassRep{std::move(rep)};
}

ClassRep prescribe_to_class(const Prescription& p, const std::vector<Fe>& leading,
                            const std::optional<std::vector<Fe>>& ending) {
    const FieldCtx& F = p.field;
    if (static_cast<int>(leading.size()) != p.ell)
        throw invalid_input("expected exactly ell leading coefficients");
    if (p.kind == Kind::I) {
        if (!ending || static_cast<int>(ending->size()) != p.t)
            throw invalid_input("type I requires exactly t ending coefficients");
        if ((*ending)[0].v == 0)
            throw zero_constant("no class with zero constant term exists");
    } else if (ending) {
        throw invalid_input("type II takes no ending coefficients");
    }
    FPoly rep;
    rep.c.assign(p.rep_degree() + 1, F.zero());
    rep.c.back() = F.one();
    for (int j = 1; j <= p.ell; ++j) rep.c[p.rep_degree() - j] = leading[j - 1];
    if (p.kind == Kind::I)
        for (int j = 0; j < p.t; ++j) rep.c[j] = (*ending)[j];
    return ClassRep{std::move(rep)};
}

std::uint64_t rep_key(const Prescription& p, const ClassRep& c) {
    std::uint64_t key = 0;
    for (int i = p.rep_degree() - 1; i >= 0; --i)
        key = key * static_cast<std::uint64_t>(p.field.q()) +
              static_cast<std::uint64_t>(c.rep.coeff(i).v);
    return key;
}

// ---------------------------------------------------------------------------
// group structure

ExponentVector GroupStructure::dlog(const ClassRep& c) const {
    return exponents_at(index_of(c));
}

std::size_t GroupStructure::index_of(const ClassRep& c) const {
    if (c.rep.degree() != presc_.rep_degree() || !c.rep.is_monic())
        throw unknown_class("malformed class representative");
    auto it = idx_.find(rep_key(presc_, c));
    if (it == idx_.end()) throw unknown_class("representative is not a class of this group");
    return it->second;
}

const ClassRep& GroupStructure::class_from_exponents(const ExponentVector& v) const {
    return reps_[linear_index(v)];
}

std::size_t GroupStructure::linear_index(const ExponentVector& v) const {
    if (v.size() != orders_.size()) throw invalid_input("exponent vector has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= orders_[i]) throw invalid_input("exponent out of range");
        idx += static_cast<std::size_t>(v[i] * strides_[i]);
    }
    return idx;
}

ExponentVector GroupStructure::exponents_at(std::size_t index) const {
    ExponentVector v(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        v[i] = static_cast<std::int64_t>(index / static_cast<std::size_t>(strides_[i])) % orders_[i];
    }
    return v;
}

namespace {

std::int64_t order_of(const Prescription& p, const ClassRep& g, std::int64_t group_order,
                      const std::vector<std::pair<std::int64_t, int>>& order_factors,
                      const ClassRep& id) {
    std::int64_t e = group_order;
    for (auto [pr, mult] : order_factors) {
        for (int i = 0; i < mult; ++i) {
            if (e % pr == 0 && class_pow(p, g, e / pr) == id)
                e /= pr;
            else
                break;
        }
    }
    return e;
}

}  // namespace

GroupStructure decompose(const Prescription& p, std::int64_t max_order) {
    Int big = p.group_order();
    if (big > max_order) throw group_too_large("class group exceeds the configured cap");
    std::int64_t EN = big.get_si();

    ClassRep id = class_identity(p);
    auto order_factors = nt::factorize(EN);

    std::vector<ClassRep> gens;
    std::vector<std::int64_t> orders;
    // span: rep -> exponent vector over generators found so far
    std::vector<std::pair<ClassRep, ExponentVector>> span{{id, {}}};
    std::unordered_map<std::uint64_t, std::size_t> span_idx{{rep_key(p, id), 0}};

    auto in_span = [&](const ClassRep& c) { return span_idx.count(rep_key(p, c)) != 0; };

    auto try_add = [&](const ClassRep& g) {
        ClassRep x = g;
        std::int64_t k = 1;
        while (!in_span(x)) {
            x = class_mul(p, x, g);
            ++k;
        }
        if (!(x == id) || k == 1) return false;
        std::size_t old = span.size();
        span.reserve(old * static_cast<std::size_t>(k));
        ClassRep pw = g;
        for (std::int64_t e = 1; e < k; ++e) {
            for (std::size_t i = 0; i < old; ++i) {
                ClassRep prod = class_mul(p, span[i].first, pw);
                ExponentVector v = span[i].second;
                v.push_back(e);
                span_idx.emplace(rep_key(p, prod), span.size());
                span.emplace_back(std::move(prod), std::move(v));
            }
            if (e + 1 < k) pw = class_mul(p, pw, g);
        }
        for (std::size_t i = 0; i < old; ++i) span[i].second.push_back(0);
        gens.push_back(g);
        orders.push_back(k);
        return true;
    };

    if (p.kind == Kind::II && p.field.r() == 1) {
        // <x^j + 1> family, gcd(j, p) = 1, j <= ell, ascending
        for (int j = 1; j <= p.ell && static_cast<std::int64_t>(span.size()) < EN; ++j) {
            if (std::gcd(static_cast<std::int64_t>(j), p.field.p()) != 1) continue;
            FPoly f = poly_add(p.field, poly_xn(p.field, j), poly_one(p.field));
            try_add(class_of(p, f).value());
        }
    }
    if (static_cast<std::int64_t>(span.size()) < EN) {
        // greedy over all classes: descending order, ties by ascending key
        std::vector<std::pair<ClassRep, std::int64_t>> cand;
        cand.reserve(static_cast<std::size_t>(EN));
        std::uint64_t total = 1;
        for (int i = 0; i < p.rep_degree(); ++i) total *= static_cast<std::uint64_t>(p.field.q());
        for (std::uint64_t keyv = 0; keyv < total; ++keyv) {
            if (p.kind == Kind::I && keyv % static_cast<std::uint64_t>(p.field.q()) == 0) continue;
            FPoly rep;
            rep.c.assign(p.rep_degree() + 1, p.field.zero());
            rep.c.back() = p.field.one();
            std::uint64_t v = keyv;
            for (int i = 0; i < p.rep_degree(); ++i) {
                rep.c[i] = Fe{static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p.field.q()))};
                v /= static_cast<std::uint64_t>(p.field.q());
            }
            ClassRep c{std::move(rep)};
            cand.emplace_back(std::move(c), 0);
        }
        for (auto& [c, o] : cand) o = order_of(p, c, EN, order_factors, id);
        std::stable_sort(cand.begin(), cand.end(),
                         [&](const auto& a, const auto& b) {
                             if (a.second != b.second) return a.second > b.second;
                             return rep_key(p, a.first) < rep_key(p, b.first);
                         });
        for (const auto& [c, o] : cand) {
            if (static_cast<std::int64_t>(span.size()) >= EN) break;
            if (o <= 1 || in_span(c)) continue;
            try_add(c);
        }
    }
    if (static_cast<std::int64_t>(span.size()) != EN)
        throw not_integer("group decomposition failed to span the class group");

    // descending orders, ties by ascending representative key
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (orders[a] != orders[b]) return orders[a] > orders[b];
        return rep_key(p, gens[a]) < rep_key(p, gens[b]);
    });

    GroupStructure gs;
    gs.presc_ = p;
    gs.order_ = EN;
    for (std::size_t i : perm) {
        gs.gens_.push_back(gens[i]);
        gs.orders_.push_back(orders[i]);
    }
    gs.R_ = 1;
    for (auto r : gs.orders_) gs.R_ = nt::lcm(gs.R_, r);
    gs.strides_.assign(gs.orders_.size(), 1);
    for (int i = static_cast<int>(gs.orders_.size()) - 2; i >= 0; --i)
        gs.strides_[i] = gs.strides_[i + 1] * gs.orders_[i + 1];

    // final tables; the emplace uniqueness + the size check make the
    // dlog map a verified bijection
    gs.reps_.resize(static_cast<std::size_t>(EN));
    std::vector<bool> seen(static_cast<std::size_t>(EN), false);
    std::int64_t prod_orders = 1;
    for (auto r : gs.orders_) prod_orders *= r;
    if (prod_orders != EN) throw not_integer("cyclic factor orders do not multiply to |E|");
    for (auto& [rep, vec] : span) {
        ExponentVector v(gs.orders_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) v[i] = vec[perm[i]];
        std::size_t li = gs.linear_index(v);
        if (seen[li]) throw not_integer("dlog table is not a bijection");
        seen[li] = true;
        gs.idx_.emplace(rep_key(p, rep), li);
        gs.reps_[li] = std::move(rep);
    }
    // generator order sanity: xi^r = id, xi^{r/p'} != id
    for (std::size_t i = 0; i < gs.gens_.size(); ++i) {
        if (!(class_pow(p, gs.gens_[i], gs.orders_[i]) == id))
            throw not_integer("generator order check failed");
        for (auto [pr, e] : nt::factorize(gs.orders_[i]))
            if (class_pow(p, gs.gens_[i], gs.orders_[i] / pr) == id)
                throw not_integer("generator order is not minimal");
    }
    return gs;
}

}  // namespace prescount
