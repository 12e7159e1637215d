#include "ospchar/matrix_rep.hpp"

#include "ospchar/char_roots.hpp"
#include "ospchar/errors.hpp"

namespace ospchar {

RatMat metric(const Signature& sig) {
    sig.validate();
    RatMat g = rat_zero(sig.dim(), sig.dim());
    for (int i = 0; i < sig.m; ++i) g(i, i) = Rat(1);
    for (int mu = 1; mu <= sig.n; ++mu) {
        const Gi p = Gi::odd(mu);
        g(flat(p, sig), flat(bar(p, sig), sig)) = Rat(theta(p, sig));
    }
    return g;
}

RatMat gamma_grading(const Signature& sig) {
    sig.validate();
    RatMat g = rat_zero(sig.dim(), sig.dim());
    for (int i = 0; i < sig.dim(); ++i)
        g(i, i) = parity_of(from_flat(i, sig)) == 0 ? Rat(1) : Rat(-1);
    return g;
}

RatMat basis_unit(const Gi& p, const Gi& q, const Signature& sig) {
    validate_index(p, sig);
    validate_index(q, sig);
    RatMat e = rat_zero(sig.dim(), sig.dim());
    e(flat(p, sig), flat(q, sig)) = Rat(1);
    return e;
}

RatMat lower_generator(const Gi& p, const Gi& q, const Signature& sig) {
    const RatMat g = metric(sig);
    RatMat out = rat_zero(sig.dim(), sig.dim());
    const int fp = flat(p, sig);
    const int fq = flat(q, sig);
    const int sgn = (parity_of(p) * parity_of(q)) % 2 == 0 ? 1 : -1;
    for (int r = 0; r < sig.dim(); ++r) {
        out(r, fq) += g(fp, r);
        if (sgn > 0)
            out(r, fp) -= g(fq, r);
        else
            out(r, fp) += g(fq, r);
    }
    return out;
}

RatMat racah_generator(const Gi& p, const Gi& q, const Signature& sig) {
    validate_index(p, sig);
    validate_index(q, sig);
    RatMat out = rat_zero(sig.dim(), sig.dim());
    out(flat(p, sig), flat(q, sig)) += Rat(1);
    const int exp = parity_of(p) * (parity_of(p) + parity_of(q));
    int coeff = (exp % 2 == 0) ? -1 : 1;
    coeff *= theta(p, sig) * theta(q, sig);
    out(flat(tilde(q, sig), sig), flat(tilde(p, sig), sig)) += Rat(coeff);
    return out;
}

ExtMat cw_transform(const Signature& sig) {
    sig.validate();
    ExtMat m = ext_zero(sig.dim(), sig.dim());
    for (int j = 1; j <= sig.h(); ++j) {
        const Ext invs = Ext::inv_sqrt2();                        // 1/sqrt2
        const Ext ihalf = Ext(Rat(0), Rat(0), Rat(0), Rat(1, 2)); // i/sqrt2
        m(2 * j - 2, j - 1) = invs;
        m(2 * j - 2, sig.m - j) = invs;
        m(2 * j - 1, j - 1) = -ihalf;
        m(2 * j - 1, sig.m - j) = ihalf;
    }
    if (sig.odd_m()) m(sig.m - 1, sig.h()) = Ext(1);
    for (int mu = 0; mu < sig.n; ++mu) m(sig.m + mu, sig.m + mu) = Ext(1);
    return m;
}

ExtMat cw_transform_inverse(const Signature& sig) {
    const ExtMat m = cw_transform(sig);
    ExtMat out = ext_zero(sig.dim(), sig.dim());
    for (int r = 0; r < sig.dim(); ++r)
        for (int c = 0; c < sig.dim(); ++c) out(r, c) = m(c, r).conj();
    return out;
}

ExtMat cw_generator(const Gi& p, const Gi& q, const Signature& sig) {
    const ExtMat m = cw_transform(sig);
    const ExtMat minv = cw_transform_inverse(sig);
    const int fp = flat(p, sig);
    const int fq = flat(q, sig);
    ExtMat out = ext_zero(sig.dim(), sig.dim());
    for (const Gi& r : all_indices(sig)) {
        const Ext left = minv(fp, flat(r, sig));
        if (left.is_zero()) continue;
        for (const Gi& s : all_indices(sig)) {
            const Ext right = m(flat(s, sig), fq);
            if (right.is_zero()) continue;
            out += to_ext(racah_generator(r, s, sig)) * (left * right);
        }
    }
    return out;
}

const RatMat& Realization::gen(const Gi& p, const Gi& q) const {
    auto it = gens.find({p, q});
    if (it == gens.end()) throw DomainError("realization: no generator for given index pair");
    return it->second;
}

Realization defining_realization(const Signature& sig) {
    sig.validate();
    Realization rep;
    rep.sig = sig;
    rep.dim = sig.dim();
    for (const Gi& p : all_indices(sig))
        for (const Gi& q : all_indices(sig)) rep.gens[{p, q}] = racah_generator(p, q, sig);
    return rep;
}

RatMat characteristic_matrix(const Realization& rep) {
    const int d = rep.dim;
    const int blocks = rep.sig.dim();
    RatMat big = rat_zero(blocks * d, blocks * d);
    for (const Gi& p : all_indices(rep.sig))
        for (const Gi& q : all_indices(rep.sig)) {
            const RatMat& g = rep.gen(p, q);
            const int sgn = parity_of(p) == 0 ? 1 : -1;
            const int ro = flat(p, rep.sig) * d;
            const int co = flat(q, rep.sig) * d;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    big(ro + a, co + b) = sgn > 0 ? g(a, b) : -g(a, b);
        }
    return big;
}

ExtMat cw_characteristic_matrix(const Signature& sig) {
    const int d = sig.dim();
    ExtMat big = ext_zero(d * d, d * d);
    for (const Gi& p : all_indices(sig))
        for (const Gi& q : all_indices(sig)) {
            const ExtMat g = cw_generator(p, q, sig);
            const int sgn = parity_of(p) == 0 ? 1 : -1;
            const int ro = flat(p, sig) * d;
            const int co = flat(q, sig) * d;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    big(ro + a, co + b) = sgn > 0 ? g(a, b) : -g(a, b);
        }
    return big;
}

RatMat casimir_matrix(int N, const Signature& sig) {
    if (N < 1) throw DomainError("casimir_matrix: N must be >= 1");
    const Realization rep = defining_realization(sig);
    const RatMat a = characteristic_matrix(rep);
    RatMat power = a;
    for (int i = 1; i < N; ++i) power = RatMat(power * a);
    return graded_partial_trace(power, sig, rep.dim);
}

RatMat quadratic_casimir_matrix(const Realization& rep) {
    RatMat c = rat_zero(rep.dim, rep.dim);
    for (const Gi& p : all_indices(rep.sig))
        for (const Gi& q : all_indices(rep.sig)) {
            RatMat term = rep.gen(p, q) * rep.gen(q, p);
            if (parity_of(q) == 0)
                c += term;
            else
                c -= term;
        }
    return RatMat(c * Rat(1, 2));
}

namespace {

// prod_{q != r} (A - alpha_q) / (alpha_r - alpha_q); callers guarantee the
// characteristic identity holds on the range of tail.
RatMat root_projection(const RatMat& a, const CharRoots& roots, const Gi& r, const RatMat& tail) {
    const Rat ar = roots.at(r);
    for (const Gi& q : all_indices(roots.sig))
        if (!(q == r) && roots.at(q) == ar)
            throw PoleError("projection: root at " + r.to_string() + " collides with " +
                            q.to_string());
    RatMat p = tail;
    Rat denom(1);
    for (const Gi& q : all_indices(roots.sig)) {
        if (q == r) continue;
        const Rat aq = roots.at(q);
        p = RatMat(a * p - p * aq);
        denom *= ar - aq;
    }
    return RatMat(p * denom.inv());
}

} // namespace

RatMat projection(const Realization& rep, const Weight& lambda, const Gi& r) {
    validate_index(r, rep.sig);
    const CharRoots roots = casimir_difference_roots(lambda);
    const RatMat a = characteristic_matrix(rep);
    return root_projection(a, roots, r, rat_identity(a.rows()));
}

RatMat isotypic_projector(const Realization& rep, const Weight& lambda,
                          const std::vector<Weight>& constituents) {
    const RatMat c = quadratic_casimir_matrix(rep);
    const Rat chi = casimir_eigenvalue(lambda);
    RatMat e = rat_identity(rep.dim);
    for (const Weight& w : constituents) {
        if (w == lambda) continue;
        const Rat chi_w = casimir_eigenvalue(w);
        if (chi_w == chi)
            throw PoleError("isotypic projector: equal quadratic Casimir values for " +
                            format_weight(lambda) + " and " + format_weight(w));
        e = RatMat((c * e - e * chi_w) * (chi - chi_w).inv());
    }
    return e;
}

RatMat channel_projection(const Realization& rep, const RatMat& iso, const Weight& lambda,
                          const Gi& r) {
    validate_index(r, rep.sig);
    const CharRoots roots = casimir_difference_roots(lambda);
    const RatMat a = characteristic_matrix(rep);
    const int d = rep.dim;
    RatMat big_iso = rat_zero(a.rows(), a.cols());
    for (int p = 0; p < rep.sig.dim(); ++p)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) big_iso(p * d + x, p * d + y) = iso(x, y);
    return root_projection(a, roots, r, big_iso);
}

Gi ParentEmbedding::to_parent(const Gi& g) const {
    validate_index(g, child_sig);
    return g.is_even() ? Gi::even(g.pos + 1) : g;
}

const RatMat& ParentEmbedding::psi(const Gi& r) const {
    return parent.gen(to_parent(r), Gi::even(1));
}

const RatMat& ParentEmbedding::phi(const Gi& r) const {
    return parent.gen(Gi::even(1), to_parent(r));
}

ParentEmbedding embed_parent(const Signature& child_sig) {
    child_sig.validate();
    ParentEmbedding emb;
    emb.child_sig = child_sig;
    emb.parent_sig = Signature{child_sig.m + 1, child_sig.n};
    emb.parent = defining_realization(emb.parent_sig);
    emb.child_action.sig = child_sig;
    emb.child_action.dim = emb.parent.dim;
    for (const Gi& p : all_indices(child_sig))
        for (const Gi& q : all_indices(child_sig))
            emb.child_action.gens[{p, q}] = emb.parent.gen(emb.to_parent(p), emb.to_parent(q));
    return emb;
}

RatMat psi_stack(const ParentEmbedding& emb) {
    const int d = emb.parent.dim;
    RatMat out = rat_zero(emb.child_sig.dim() * d, d);
    for (const Gi& r : all_indices(emb.child_sig)) {
        const RatMat& block = emb.psi(r);
        const int ro = flat(r, emb.child_sig) * d;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) out(ro + a, b) = block(a, b);
    }
    return out;
}

RatMat phi_row(const ParentEmbedding& emb) {
    const int d = emb.parent.dim;
    RatMat out = rat_zero(d, emb.child_sig.dim() * d);
    for (const Gi& r : all_indices(emb.child_sig)) {
        const RatMat& block = emb.phi(r);
        const int co = flat(r, emb.child_sig) * d;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) out(a, co + b) = block(a, b);
    }
    return out;
}

RatMat grading_tensor(const Signature& sig, int dim) {
    RatMat out = rat_zero(sig.dim() * dim, sig.dim() * dim);
    for (int p = 0; p < sig.dim(); ++p) {
        const Rat s = parity_of(from_flat(p, sig)) == 0 ? Rat(1) : Rat(-1);
        for (int a = 0; a < dim; ++a) out(p * dim + a, p * dim + a) = s;
    }
    return out;
}

namespace {

int pair_sign(const Gi& p, const Gi& q, const Gi& r, const Gi& s) {
    return ((parity_of(p) + parity_of(q)) * (parity_of(r) + parity_of(s))) % 2 == 0 ? 1 : -1;
}

int twist_sign(const Gi& p, const Gi& q, const Signature& sig) {
    const int exp = parity_of(p) * (parity_of(p) + parity_of(q));
    return (exp % 2 == 0 ? 1 : -1) * theta(p, sig) * theta(q, sig);
}

std::string quad_name(const Gi& p, const Gi& q, const Gi& r, const Gi& s) {
    return p.to_string() + "," + q.to_string() + "," + r.to_string() + "," + s.to_string();
}

// delta^r_q X^p_s - (-1)^{...} delta^p_s X^r_q
//   - twist { delta^r_{op(p)} X^{op(q)}_s - (-1)^{...} delta^{op(q)}_s X^r_{op(p)} }
// with op = tilde for the Racah basis and op = bar for the Cartan-Weyl basis.
template <typename Mat, typename Gen, typename Op>
bool relation_holds(const Signature& sig, Gen gen, Op op, std::string& first_failure) {
    const std::vector<Gi> idx = all_indices(sig);
    for (const Gi& p : idx)
        for (const Gi& q : idx)
            for (const Gi& r : idx)
                for (const Gi& s : idx) {
                    Mat lhs = graded_commutator(gen(p, q), generator_parity(p, q), gen(r, s),
                                                generator_parity(r, s));
                    const int sg = pair_sign(p, q, r, s);
                    const int tw = twist_sign(p, q, sig);
                    using Sc = typename Mat::Scalar;
                    if (r == q) lhs -= gen(p, s);
                    if (p == s) lhs += Mat(gen(r, q) * Sc(sg));
                    if (r == op(p)) lhs += Mat(gen(op(q), s) * Sc(tw));
                    if (op(q) == s) lhs -= Mat(gen(r, op(p)) * Sc(tw * sg));
                    if (!is_zero_matrix(lhs)) {
                        first_failure = quad_name(p, q, r, s);
                        return false;
                    }
                }
    return true;
}

} // namespace

std::vector<SuiteCheck> structure_suite(const Signature& sig) {
    sig.validate();
    std::vector<SuiteCheck> out;
    auto push = [&out](std::string name, bool pass, std::string detail) {
        out.push_back(SuiteCheck{std::move(name), pass, std::move(detail)});
    };
    const std::vector<Gi> idx = all_indices(sig);
    const int d = sig.dim();

    std::map<std::pair<Gi, Gi>, RatMat> racah;
    for (const Gi& p : idx)
        for (const Gi& q : idx) racah[{p, q}] = racah_generator(p, q, sig);
    {
        std::string where;
        const bool ok = relation_holds<RatMat>(
            sig, [&racah](const Gi& p, const Gi& q) -> const RatMat& { return racah.at({p, q}); },
            [&sig](const Gi& g) { return tilde(g, sig); }, where);
        push("racah-relations", ok,
             ok ? std::to_string(d * d * d * d) + " quadruples, zero residual"
                : "first failure at " + where);
    }

    std::map<std::pair<Gi, Gi>, ExtMat> cw;
    for (const Gi& p : idx)
        for (const Gi& q : idx) cw[{p, q}] = cw_generator(p, q, sig);
    {
        std::string where;
        const bool ok = relation_holds<ExtMat>(
            sig, [&cw](const Gi& p, const Gi& q) -> const ExtMat& { return cw.at({p, q}); },
            [&sig](const Gi& g) { return bar(g, sig); }, where);
        push("cartan-weyl-relations", ok,
             ok ? std::to_string(d * d * d * d) + " quadruples, zero residual"
                : "first failure at " + where);
    }
    {
        bool ok = true;
        std::string where;
        for (const Gi& p : idx) {
            for (const Gi& q : idx) {
                const ExtMat rhs =
                    ExtMat(cw.at({bar(q, sig), bar(p, sig)}) * Ext(Rat(-twist_sign(p, q, sig))));
                if (!is_zero_matrix(ExtMat(cw.at({p, q}) - rhs))) {
                    ok = false;
                    where = p.to_string() + "," + q.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        push("cartan-weyl-symmetry", ok, ok ? "all index pairs" : "first failure at " + where);
    }

    const RatMat g = metric(sig);
    push("metric-square", is_zero_matrix(RatMat(g * g - gamma_grading(sig))), "g^2 = gamma");
    push("metric-inverse", is_zero_matrix(RatMat(g * g.transpose() - rat_identity(d))),
         "g^T = g^{-1}");
    {
        bool ok = true;
        std::string where;
        for (const Gi& p : idx) {
            for (const Gi& q : idx) {
                const RatMat& x = racah.at({p, q});
                const RatMat res =
                    RatMat(supertranspose(x, generator_parity(p, q), sig) * g + g * x);
                if (!is_zero_matrix(res)) {
                    ok = false;
                    where = p.to_string() + "," + q.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        push("generator-anti-invariance", ok,
             ok ? "x^T g + g x = 0 for all generators" : "first failure at " + where);
    }

    const ExtMat m_ext = cw_transform(sig);
    {
        ExtMat prod = ext_zero(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Ext acc(0);
                for (int k2 = 0; k2 < d; ++k2) acc += m_ext(k2, i).conj() * m_ext(k2, j);
                prod(i, j) = acc;
            }
        push("transform-unitary", is_zero_matrix(ExtMat(prod - ext_identity(d))),
             "M^dagger M = 1");
    }
    {
        // column orthogonality without conjugation: sum_k M_{k,bar(i)} M_{k,j} = delta_{ij}
        bool ok = true;
        for (int i = 1; i <= sig.m && ok; ++i)
            for (int j = 1; j <= sig.m && ok; ++j) {
                Ext acc(0);
                for (int k2 = 0; k2 < sig.m; ++k2)
                    acc += m_ext(k2, sig.m - i) * m_ext(k2, j - 1);
                if (!(acc == Ext(i == j ? 1 : 0))) ok = false;
            }
        push("transform-column-orthogonality", ok, "even block, opposite-index pairing");
    }

    push("supertrace-casimir-one", is_zero_matrix(casimir_matrix(1, sig)), "I_1 = 0");
    {
        const Rat target = Rat(2) * Rat(sig.m - sig.n - 1);
        const RatMat res = RatMat(casimir_matrix(2, sig) - rat_identity(d) * target);
        push("supertrace-casimir-two", is_zero_matrix(res),
             "I_2 = " + target.to_string() + " id on the defining module");
    }
    {
        Weight vec = Weight::zero(sig);
        vec.odd[0] = Rat(1);
        const CharRoots roots = casimir_difference_roots(vec);
        const Realization rep = defining_realization(sig);
        const RatMat big = characteristic_matrix(rep);
        RatMat prod = rat_identity(d * d);
        for (const Gi& p : idx) prod = RatMat((big - rat_identity(d * d) * roots.at(p)) * prod);
        push("characteristic-identity", is_zero_matrix(prod),
             "prod_p (A - alpha_p) = 0 on V (x) V");
    }
    if (sig.m == 2) {
        Weight canon = Weight::zero(sig);
        canon.odd[0] = Rat(1);
        Weight dist = Weight::zero(sig);
        dist.even[0] = Rat(1);
        const Rat a = casimir_eigenvalue(canon, Convention::Canonical);
        const Rat b = casimir_eigenvalue(dist, Convention::Distinguished);
        const Rat target = Rat(1 - sig.n);
        push("convention-consistency", a == target && b == target,
             "vector-module Casimir " + a.to_string() + " / " + b.to_string() +
                 " vs " + target.to_string());
    }
    return out;
}

} // namespace ospchar
