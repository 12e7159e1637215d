#include "ospchar/invariants.hpp"

#include <string>
#include <vector>

#include "ospchar/errors.hpp"
#include "ospchar/poly.hpp"

namespace ospchar {
namespace {

// One linear factor value + slope along the deformation parameter.
struct Factor {
    Rat c0, c1;
    std::string label;
};

struct Product {
    int sign = 1;
    std::vector<Factor> num, den;
};

struct AffinePoint {
    Rat c0, c1;
};

// Characteristic roots of both algebras as affine functions of the
// deformation parameter; slope zero when no direction is given.
struct AffineRoots {
    const BranchContext* ctx = nullptr;
    CharRoots alpha_slope, beta_slope;
    bool deformed = false;

    AffinePoint alpha(const Gi& g) const {
        return {ctx->alpha_at(g), deformed ? alpha_slope.at(g) : Rat(0)};
    }
    AffinePoint beta(const CIdx& q) const {
        return {ctx->beta_at(q), deformed ? beta_slope.at(parent_index(q)) : Rat(0)};
    }
};

CharRoots root_difference(const CharRoots& a, const CharRoots& b) {
    CharRoots d = a;
    for (size_t i = 0; i < d.even.size(); ++i) d.even[i] -= b.even[i];
    for (size_t i = 0; i < d.odd.size(); ++i) d.odd[i] -= b.odd[i];
    return d;
}

Weight child_direction(const BranchContext& ctx, const Weight& eta) {
    if (!(eta.sig == ctx.parent_sig))
        throw DomainError("direction must be shaped like the parent weight");
    eta.validate_shape();
    Weight d = Weight::zero(ctx.child_sig);
    for (size_t i = 0; i < d.even.size(); ++i) d.even[i] = eta.even[i];
    d.odd = eta.odd;
    return d;
}

AffineRoots affine_roots(const BranchContext& ctx, const Weight* eta) {
    AffineRoots r;
    r.ctx = &ctx;
    if (eta) {
        r.deformed = true;
        const Weight ceta = child_direction(ctx, *eta);
        r.alpha_slope = root_difference(
            characteristic_roots(weight_sum(ctx.child_weight, ceta)), ctx.alpha);
        r.beta_slope = root_difference(
            characteristic_roots(weight_sum(ctx.parent_weight, *eta)), ctx.beta);
    }
    return r;
}

Rat parity_sign(const Gi& g) { return g.is_even() ? Rat(1) : Rat(-1); }

Rat middle_term(const BranchContext& ctx, const Gi& g) {
    return ctx.middle(g) ? Rat(1) : Rat(0);
}

std::string constant_suffix(const Rat& c) {
    if (c.is_zero()) return "";
    return (c.sgn() > 0 ? "+" : "") + c.to_string();
}

Factor beta_minus_alpha(const AffineRoots& r, const CIdx& q, const Gi& a, const Rat& shift) {
    const AffinePoint b = r.beta(q), x = r.alpha(a);
    return {b.c0 - x.c0 + shift, b.c1 - x.c1,
            "beta(" + q.to_string() + ")-alpha(" + a.to_string() + ")" + constant_suffix(shift)};
}

Factor beta_minus_beta(const AffineRoots& r, const CIdx& q, const CIdx& k) {
    const AffinePoint a = r.beta(q), b = r.beta(k);
    return {a.c0 - b.c0, a.c1 - b.c1,
            "beta(" + q.to_string() + ")-beta(" + k.to_string() + ")"};
}

Factor alpha_minus_alpha(const AffineRoots& r, const Gi& p, const Gi& s, const Rat& shift) {
    const AffinePoint a = r.alpha(p), b = r.alpha(s);
    return {a.c0 - b.c0 + shift, a.c1 - b.c1,
            "alpha(" + p.to_string() + ")-alpha(" + s.to_string() + ")" + constant_suffix(shift)};
}

void require_in_itilde(const BranchContext& ctx, const CIdx& q) {
    for (const CIdx& c : ctx.Itilde)
        if (c == q) return;
    throw DomainError("index " + q.to_string() + " is not in Itilde for " + ctx.describe());
}

void require_in_i(const BranchContext& ctx, const Gi& p) {
    if (!ctx.in_I(p)) throw DomainError("index " + p.to_string() + " is not in I for " + ctx.describe());
}

int i_sign(const BranchContext& ctx) { return ctx.I.size() % 2 == 0 ? 1 : -1; }

Product build_c(const BranchContext& ctx, const AffineRoots& r, const CIdx& q) {
    Product pr;
    for (const Gi& s : ctx.I)
        pr.num.push_back(beta_minus_alpha(r, q, s, -parity_sign(s) + middle_term(ctx, s)));
    for (const CIdx& k : ctx.Itilde)
        if (!(k == q)) pr.den.push_back(beta_minus_beta(r, q, k));
    return pr;
}

Product build_gamma_p(const BranchContext& ctx, const AffineRoots& r, const Gi& p) {
    Product pr;
    pr.sign = i_sign(ctx);
    const Rat sp = parity_sign(p), mp = middle_term(ctx, p);
    for (const Gi& s : ctx.I)
        if (!(s == p))
            pr.den.push_back(
                alpha_minus_alpha(r, p, s, sp - parity_sign(s) + middle_term(ctx, s) - mp));
    for (const CIdx& q : ctx.Itilde)
        pr.num.push_back(beta_minus_alpha(r, q, p, -sp + mp));
    return pr;
}

Product build_gamma_ps(const BranchContext& ctx, const AffineRoots& r, const Gi& p,
                       const CIdx& s) {
    Product pr = build_gamma_p(ctx, r, p);
    pr.den.push_back(beta_minus_alpha(r, s, p, -parity_sign(p) + middle_term(ctx, p)));
    return pr;
}

Product build_mu(const BranchContext& ctx, const AffineRoots& r, const Gi& t) {
    Product pr;
    pr.sign = i_sign(ctx);
    const Gi tbar = ctx.bar_child(t);
    for (const Gi& s : ctx.I)
        if (!(s == t)) {
            Rat shift = -parity_sign(s) + middle_term(ctx, s);
            if (t.is_even() && s == tbar) shift -= Rat(1);
            pr.den.push_back(alpha_minus_alpha(r, t, s, shift));
        }
    for (const CIdx& q : ctx.Itilde)
        pr.num.push_back(beta_minus_alpha(r, q, t, Rat(0)));
    return pr;
}

Product build_omega(const BranchContext& ctx, const AffineRoots& r, const CIdx& s,
                    const Gi& t) {
    Product pr = build_c(ctx, r, s);
    Product mu = build_mu(ctx, r, t);
    pr.sign *= mu.sign;
    pr.num.insert(pr.num.end(), mu.num.begin(), mu.num.end());
    pr.den.insert(pr.den.end(), mu.den.begin(), mu.den.end());

    const Rat st = parity_sign(t), mt = middle_term(ctx, t);
    pr.den.push_back(beta_minus_alpha(r, s, t, Rat(0)));
    pr.den.push_back(beta_minus_alpha(r, s, t, -st + mt));
    if (t.is_even()) {
        const Gi tbar = ctx.bar_child(t);
        pr.den.push_back(beta_minus_alpha(r, s, tbar, -st + mt));
        pr.num.push_back(beta_minus_alpha(r, s, tbar, Rat(-2) * st + Rat(2) * mt));
    }
    return pr;
}

Rat eval_direct(const Product& pr) {
    for (const Factor& f : pr.den)
        if (f.c0.is_zero()) throw PoleError("vanishing denominator factor " + f.label);
    Rat v{pr.sign};
    for (const Factor& f : pr.num) v *= f.c0;
    for (const Factor& f : pr.den) v /= f.c0;
    return v;
}

Rat eval_limit(const Product& pr) {
    for (const Factor& f : pr.den)
        if (f.c0.is_zero() && f.c1.is_zero())
            throw DegenerateDirection("factor " + f.label +
                                      " vanishes identically along the direction");
    for (const Factor& f : pr.num)
        if (f.c0.is_zero() && f.c1.is_zero()) return Rat(0);
    Poly num = Poly::constant(Rat(pr.sign));
    Poly den = Poly::constant(Rat(1));
    for (const Factor& f : pr.num) num = num * Poly::linear(f.c0, f.c1);
    for (const Factor& f : pr.den) den = den * Poly::linear(f.c0, f.c1);
    const Poly g = poly_gcd(num, den);
    Poly quo, rem;
    poly_divrem(num, g, quo, rem);
    num = quo;
    poly_divrem(den, g, quo, rem);
    den = quo;
    const Rat d0 = den.eval(Rat(0));
    if (d0.is_zero()) throw PoleError("pole persists along the direction");
    return num.eval(Rat(0)) / d0;
}

} // namespace

Rat c_invariant(const BranchContext& ctx, const CIdx& q) {
    require_in_itilde(ctx, q);
    return eval_direct(build_c(ctx, affine_roots(ctx, nullptr), q));
}

Rat gamma_p(const BranchContext& ctx, const Gi& p) {
    require_in_i(ctx, p);
    return eval_direct(build_gamma_p(ctx, affine_roots(ctx, nullptr), p));
}

Rat gamma_ps(const BranchContext& ctx, const Gi& p, const CIdx& s) {
    require_in_i(ctx, p);
    require_in_itilde(ctx, s);
    return eval_direct(build_gamma_ps(ctx, affine_roots(ctx, nullptr), p, s));
}

Rat mu_t(const BranchContext& ctx, const Gi& t) {
    require_in_i(ctx, t);
    return eval_direct(build_mu(ctx, affine_roots(ctx, nullptr), t));
}

Rat omega(const BranchContext& ctx, const CIdx& s, const Gi& t) {
    require_in_itilde(ctx, s);
    require_in_i(ctx, t);
    const AffineRoots r = affine_roots(ctx, nullptr);
    if (eval_direct(build_mu(ctx, r, t)).is_zero()) return Rat(0);
    return eval_direct(build_omega(ctx, r, s, t));
}

InvariantTable invariant_table(const BranchContext& ctx) {
    InvariantTable table;
    for (const CIdx& q : ctx.Itilde) table.C[q] = c_invariant(ctx, q);
    for (const Gi& p : ctx.I) {
        table.gamma[p] = gamma_p(ctx, p);
        table.mu[p] = mu_t(ctx, p);
        for (const CIdx& s : ctx.Itilde) table.gamma_s[{p, s}] = gamma_ps(ctx, p, s);
    }
    for (const CIdx& s : ctx.Itilde)
        for (const Gi& t : ctx.I) table.omega[{s, t}] = omega(ctx, s, t);
    return table;
}

Weight canonical_direction(const Signature& parent_sig) {
    Weight eta = Weight::zero(parent_sig);
    Rat v(1);
    for (Rat& e : eta.even) {
        e = v;
        v *= Rat(2);
    }
    for (Rat& o : eta.odd) {
        o = v;
        v *= Rat(2);
    }
    return eta;
}

Rat evaluate_with_limit(const InvariantSelector& sel, const BranchContext& ctx,
                        const Weight& eta) {
    const AffineRoots r = affine_roots(ctx, &eta);
    switch (sel.kind) {
        case InvariantKind::C:
            require_in_itilde(ctx, sel.first);
            return eval_limit(build_c(ctx, r, sel.first));
        case InvariantKind::GammaP:
            if (sel.first.added) throw DomainError("gamma is indexed by child indices");
            require_in_i(ctx, sel.first.g);
            return eval_limit(build_gamma_p(ctx, r, sel.first.g));
        case InvariantKind::GammaPS:
            if (sel.first.added) throw DomainError("gamma is indexed by child indices");
            require_in_i(ctx, sel.first.g);
            require_in_itilde(ctx, sel.second);
            return eval_limit(build_gamma_ps(ctx, r, sel.first.g, sel.second));
        case InvariantKind::Mu:
            if (sel.first.added) throw DomainError("mu is indexed by child indices");
            require_in_i(ctx, sel.first.g);
            return eval_limit(build_mu(ctx, r, sel.first.g));
        case InvariantKind::Omega: {
            require_in_itilde(ctx, sel.first);
            if (sel.second.added) throw DomainError("omega's shift index is a child index");
            require_in_i(ctx, sel.second.g);
            if (eval_limit(build_mu(ctx, r, sel.second.g)).is_zero()) return Rat(0);
            return eval_limit(build_omega(ctx, r, sel.first, sel.second.g));
        }
    }
    throw DomainError("unknown invariant selector");
}

} // namespace ospchar
