#include "ospchar/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "ospchar/char_roots.hpp"
#include "ospchar/errors.hpp"
#include "ospchar/invariants.hpp"

namespace ospchar {

namespace {

// row sign convention used throughout the resolvent systems
Rat index_sign(const Gi& g) { return g.is_even() ? Rat(1) : Rat(-1); }

Rat resolvent_shift(const BranchContext& ctx, const Gi& s) {
    return index_sign(s) - Rat(ctx.middle(s) ? 1 : 0);
}

} // namespace

std::vector<Rat> bareiss_solve(const RatMat& a, const std::vector<Rat>& rhs) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || static_cast<Eigen::Index>(rhs.size()) != n)
        throw DomainError("bareiss_solve: non-square system");
    // clear denominators row by row; scaling a row leaves the solution fixed
    std::vector<std::vector<mpz_class>> w(static_cast<size_t>(n),
                                          std::vector<mpz_class>(static_cast<size_t>(n) + 1));
    for (Eigen::Index i = 0; i < n; ++i) {
        mpz_class scale(1);
        for (Eigen::Index j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).raw().get_den().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                rhs[static_cast<size_t>(i)].raw().get_den().get_mpz_t());
        for (Eigen::Index j = 0; j < n; ++j) {
            const mpq_class& q = a(i, j).raw();
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.get_num() * (scale / q.get_den());
        }
        const mpq_class& q = rhs[static_cast<size_t>(i)].raw();
        w[static_cast<size_t>(i)][static_cast<size_t>(n)] = q.get_num() * (scale / q.get_den());
    }
    // fraction-free elimination; every division below is exact
    mpz_class prev(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n && pivot < 0; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) pivot = i;
        if (pivot < 0) throw SingularSystem("bareiss_solve: rank-deficient matrix");
        if (pivot != k) std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(k)]);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j <= n; ++j) {
                mpz_class t = w[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                                  w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                              w[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                  w[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            w[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = w[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
    for (Eigen::Index i = n; i-- > 0;) {
        Rat acc(mpq_class(w[static_cast<size_t>(i)][static_cast<size_t>(n)]));
        for (Eigen::Index j = i + 1; j < n; ++j)
            acc = acc - Rat(mpq_class(w[static_cast<size_t>(i)][static_cast<size_t>(j)])) *
                            x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] =
            acc / Rat(mpq_class(w[static_cast<size_t>(i)][static_cast<size_t>(i)]));
    }
    return x;
}

std::map<CIdx, Rat> solve_c_system(const BranchContext& ctx) {
    const std::vector<CIdx>& unknowns = ctx.Itilde;
    const Eigen::Index n = static_cast<Eigen::Index>(unknowns.size());
    RatMat mat = rat_zero(n, n);
    std::vector<Rat> rhs(static_cast<size_t>(n), Rat(0));
    Eigen::Index row = 0;
    for (const Gi& s : ctx.I) {
        for (Eigen::Index col = 0; col < n; ++col) {
            const Rat den = ctx.beta_at(unknowns[static_cast<size_t>(col)]) - ctx.alpha_at(s) -
                            resolvent_shift(ctx, s);
            if (den.is_zero())
                throw SingularSystem("solve_c_system: vanishing resolvent at row " + s.to_string() +
                                     ", column " + unknowns[static_cast<size_t>(col)].to_string());
            mat(row, col) = den.inv();
        }
        ++row;
    }
    for (Eigen::Index col = 0; col < n; ++col) mat(row, col) = Rat(1);
    rhs[static_cast<size_t>(row)] = Rat(1);
    const std::vector<Rat> sol = bareiss_solve(mat, rhs);
    std::map<CIdx, Rat> out;
    for (Eigen::Index col = 0; col < n; ++col)
        out.emplace(unknowns[static_cast<size_t>(col)], sol[static_cast<size_t>(col)]);
    return out;
}

std::map<CIdx, Rat> solve_gamma_system(const BranchContext& ctx, const Gi& p) {
    if (!ctx.in_I(p)) throw DomainError("solve_gamma_system: p must lie in I");
    const std::map<CIdx, Rat> c = solve_c_system(ctx);
    const std::vector<CIdx>& unknowns = ctx.Itilde;
    const Eigen::Index n = static_cast<Eigen::Index>(unknowns.size());
    RatMat mat = rat_zero(n, n);
    std::vector<Rat> rhs(static_cast<size_t>(n), Rat(0));
    Eigen::Index row = 0;
    for (const Gi& r : ctx.I) {
        for (Eigen::Index col = 0; col < n; ++col) {
            const CIdx& s = unknowns[static_cast<size_t>(col)];
            const Rat den = ctx.beta_at(s) - ctx.alpha_at(r) - resolvent_shift(ctx, r);
            if (den.is_zero())
                throw SingularSystem("solve_gamma_system: vanishing resolvent at row " +
                                     r.to_string() + ", column " + s.to_string());
            mat(row, col) = den.inv() * c.at(s);
        }
        if (r == p) rhs[static_cast<size_t>(row)] = Rat(1);
        ++row;
    }
    for (Eigen::Index col = 0; col < n; ++col)
        mat(row, col) = c.at(unknowns[static_cast<size_t>(col)]);
    const std::vector<Rat> sol = bareiss_solve(mat, rhs);
    std::map<CIdx, Rat> out;
    for (Eigen::Index col = 0; col < n; ++col)
        out.emplace(unknowns[static_cast<size_t>(col)], sol[static_cast<size_t>(col)]);
    return out;
}

namespace {

std::vector<Rat> flatten(const RatMat& m) {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(m.rows() * m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    return v;
}

struct ReducedRow {
    std::vector<Rat> vec;   // leading entry normalized to 1
    size_t pivot = 0;
    std::vector<Rat> combo; // expansion in the original Krylov vectors
};

} // namespace

Poly minimal_polynomial_on(const RatMat& x, const RatMat& e) {
    const Eigen::Index d = x.rows();
    if (x.cols() != d || e.rows() != d || e.cols() != d)
        throw DomainError("minimal_polynomial_on: dimension mismatch");
    std::vector<ReducedRow> rows;
    RatMat cur = e;
    for (int k = 0;; ++k) {
        std::vector<Rat> v = flatten(cur);
        std::vector<Rat> combo(static_cast<size_t>(k) + 1, Rat(0));
        combo[static_cast<size_t>(k)] = Rat(1);
        for (const ReducedRow& r : rows) {
            const Rat lead = v[r.pivot];
            if (lead.is_zero()) continue;
            for (size_t i = 0; i < v.size(); ++i) v[i] -= r.vec[i] * lead;
            for (size_t i = 0; i < r.combo.size(); ++i) combo[i] -= r.combo[i] * lead;
        }
        size_t pivot = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == v.size()) {
            Poly p;
            p.c = std::move(combo);
            p.trim();
            // combo[k] = 1 survives the reduction (earlier rows have lower degree)
            return p;
        }
        const Rat inv = v[pivot].inv();
        for (Rat& entry : v) entry *= inv;
        for (Rat& entry : combo) entry *= inv;
        rows.push_back(ReducedRow{std::move(v), pivot, std::move(combo)});
        cur = RatMat(x * cur);
    }
}

Poly minimal_polynomial(const RatMat& x) {
    if (x.rows() != x.cols()) throw DomainError("minimal_polynomial: non-square matrix");
    return minimal_polynomial_on(x, rat_identity(x.rows()));
}

bool CheckReport::all_ok() const {
    return std::none_of(items.begin(), items.end(),
                        [](const CheckItem& it) { return it.status == CheckStatus::Mismatch; });
}

int CheckReport::count(CheckStatus s) const {
    return static_cast<int>(std::count_if(items.begin(), items.end(),
                                          [s](const CheckItem& it) { return it.status == s; }));
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << count(CheckStatus::Match) << " match / " << count(CheckStatus::Skipped) << " skipped / "
       << count(CheckStatus::Mismatch) << " mismatch";
    return os.str();
}

namespace {

bool isolated_value(const std::vector<Rat>& values, const Rat& target) {
    int hits = 0;
    for (const Rat& v : values)
        if (v == target) ++hits;
    return hits == 1;
}

std::vector<Rat> root_values(const CharRoots& roots) {
    std::vector<Rat> vals;
    for (const Gi& g : all_indices(roots.sig)) vals.push_back(roots.at(g));
    return vals;
}

// prod over the distinct values != target of (big - v) / (target - v), times tail
RatMat spectral_projector(const RatMat& big, const std::vector<Rat>& values, const Rat& target,
                          const RatMat& tail) {
    std::vector<Rat> distinct;
    for (const Rat& v : values)
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    RatMat p = tail;
    Rat den(1);
    for (const Rat& v : distinct) {
        if (v == target) continue;
        p = RatMat(big * p - p * v);
        den *= (target - v);
    }
    return RatMat(p * den.inv());
}

RatMat block_diagonal(const RatMat& e, int copies) {
    const Eigen::Index d = e.rows();
    RatMat out = rat_zero(copies * d, copies * d);
    for (int b = 0; b < copies; ++b)
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) out(b * d + i, b * d + j) = e(i, j);
    return out;
}

// x = c * y exactly for a scalar c, or nothing; y must be nonzero
std::optional<Rat> scalar_ratio(const RatMat& x, const RatMat& y) {
    for (Eigen::Index i = 0; i < y.rows(); ++i)
        for (Eigen::Index j = 0; j < y.cols(); ++j)
            if (!y(i, j).is_zero()) {
                const Rat c = x(i, j) / y(i, j);
                if (is_zero_matrix(RatMat(x - y * c))) return c;
                return std::nullopt;
            }
    return std::nullopt;
}

std::optional<Weight> shifted_child_weight(const Weight& w, const Gi& t) {
    Weight out = weight_sum(w, basis_vector_weight(t, w.sig));
    try {
        validate_dominant(out);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    return out;
}

} // namespace

CheckReport operator_invariant_check(const ParentEmbedding& emb, const BranchContext& ctx) {
    if (!(ctx.parent_sig == emb.parent_sig) || !(ctx.child_sig == emb.child_sig))
        throw DomainError("operator_invariant_check: context signatures do not match embedding");
    Weight module_weight = Weight::zero(emb.parent_sig);
    module_weight.odd[0] = Rat(1);
    if (!(ctx.parent_weight == module_weight))
        throw DomainError(
            "operator_invariant_check: realized module is the parent defining module; context "
            "parent weight must be its highest weight");
    const std::vector<Weight> children = branch_enumerate(module_weight, emb.child_sig);
    if (std::find(children.begin(), children.end(), ctx.child_weight) == children.end())
        throw DomainError("operator_invariant_check: child weight is not a branching constituent");

    // formula layer evaluated on the operator-convention roots
    BranchContext op = ctx;
    op.alpha = casimir_difference_roots(ctx.child_weight);
    op.beta = casimir_difference_roots(module_weight);

    CheckReport report;
    report.parent_weight = ctx.parent_weight;
    report.child_weight = ctx.child_weight;

    const int d = emb.parent.dim;
    const int dc = emb.child_sig.dim();
    const RatMat a_child = characteristic_matrix(emb.child_action);
    const RatMat b_parent = characteristic_matrix(emb.parent);
    const RatMat e = isotypic_projector(emb.child_action, ctx.child_weight, children);
    const RatMat big_e = block_diagonal(e, dc);
    const std::vector<Rat> parent_vals = root_values(op.beta);
    const std::vector<Rat> source_vals = root_values(op.alpha);

    auto add = [&report](std::string name, CheckStatus status, std::string note) {
        report.items.push_back(CheckItem{std::move(name), status, std::move(note)});
    };

    // parent spectral projectors, cached per extended index where regular
    std::map<CIdx, RatMat> q_proj;
    auto parent_projector = [&](const CIdx& s) -> const RatMat* {
        const Rat beta_s = op.beta_at(s);
        if (!isolated_value(parent_vals, beta_s)) return nullptr;
        auto it = q_proj.find(s);
        if (it == q_proj.end())
            it = q_proj
                     .emplace(s, spectral_projector(b_parent, parent_vals, beta_s,
                                                    rat_identity(b_parent.rows())))
                     .first;
        return &it->second;
    };

    for (const CIdx& s : ctx.Itilde) {
        const std::string name = "C[" + s.to_string() + "]";
        const RatMat* q = parent_projector(s);
        if (q == nullptr) {
            add(name, CheckStatus::Skipped,
                "parent root " + op.beta_at(s).to_string() + " not isolated");
            continue;
        }
        const RatMat sandwich = RatMat(e * q->block(0, 0, d, d) * e);
        const Rat formula = c_invariant(op, s);
        const std::optional<Rat> measured = scalar_ratio(sandwich, e);
        if (!measured) {
            add(name, CheckStatus::Mismatch, "operator value not scalar on constituent");
        } else if (*measured == formula) {
            add(name, CheckStatus::Match, "value " + formula.to_string());
        } else {
            add(name, CheckStatus::Mismatch,
                "operator " + measured->to_string() + " vs formula " + formula.to_string());
        }
    }

    for (const Gi& t : ctx.I) {
        const std::string tname = t.to_string();
        const Rat alpha_t = op.alpha_at(t);

        // the t component of the raised operator lands in the Lambda + wt(t)
        // isotypic; the branching is multiplicity free, so that component is
        // annihilated exactly when E_target psi E vanishes for every stack row
        const std::optional<Weight> target = shifted_child_weight(ctx.child_weight, t);
        const bool target_present =
            target && std::find(children.begin(), children.end(), *target) != children.end();
        bool annihilated = !target_present;
        std::optional<RatMat> e_target;
        if (target_present) {
            e_target = (*target == ctx.child_weight)
                           ? e
                           : isotypic_projector(emb.child_action, *target, children);
            bool all_zero = true;
            for (const Gi& gs : all_indices(emb.child_sig))
                if (!is_zero_matrix(RatMat((*e_target) * emb.psi(gs) * e))) {
                    all_zero = false;
                    break;
                }
            annihilated = all_zero;
        }

        // gamma: resolve the shift components at the target weight and
        // contract back down onto the constituent
        {
            const std::string name = "gamma[" + tname + "]";
            std::optional<Rat> gamma_formula;
            try {
                gamma_formula = gamma_p(op, t);
            } catch (const PoleError&) {
            }
            if (!gamma_formula) {
                add(name, CheckStatus::Skipped, "formula pole");
            } else if (!target_present || annihilated) {
                add(name, CheckStatus::Skipped, "shift channel absent on this module");
            } else {
                const CharRoots target_roots = casimir_difference_roots(*target);
                const std::vector<Rat> target_vals = root_values(target_roots);
                const Rat target_value = target_roots.at(t);
                if (!isolated_value(target_vals, target_value)) {
                    add(name, CheckStatus::Skipped,
                        "target root " + target_value.to_string() + " not isolated");
                } else {
                    const RatMat p_tgt = spectral_projector(a_child, target_vals, target_value,
                                                            block_diagonal(*e_target, dc));
                    RatMat contraction = rat_zero(d, d);
                    const std::vector<Gi> cidx = all_indices(emb.child_sig);
                    for (int r = 0; r < dc; ++r) {
                        const Rat sr = index_sign(cidx[static_cast<size_t>(r)]);
                        RatMat psi_t = rat_zero(d, d);
                        RatMat phi_t = rat_zero(d, d);
                        for (int s2 = 0; s2 < dc; ++s2) {
                            const Gi& gs = cidx[static_cast<size_t>(s2)];
                            psi_t += RatMat(p_tgt.block(r * d, s2 * d, d, d) * emb.psi(gs) *
                                            (sr * index_sign(gs)));
                            phi_t += RatMat(emb.phi(gs) * p_tgt.block(s2 * d, r * d, d, d));
                        }
                        contraction += RatMat(phi_t * psi_t * sr);
                    }
                    const RatMat sandwich = RatMat(e * contraction * e);
                    const std::optional<Rat> measured = scalar_ratio(sandwich, e);
                    if (!measured) {
                        add(name, CheckStatus::Mismatch, "contraction not scalar on constituent");
                    } else if (*measured == *gamma_formula) {
                        add(name, CheckStatus::Match, "value " + gamma_formula->to_string());
                    } else {
                        add(name, CheckStatus::Mismatch, "operator " + measured->to_string() +
                                                             " vs formula " +
                                                             gamma_formula->to_string());
                    }
                }
            }
        }

        // omega sandwiches, built from the source-side spectral projector;
        // also collected to adjudicate mu below
        std::vector<Rat> omega_row;
        bool omega_row_regular = false;
        const bool source_ok = isolated_value(source_vals, alpha_t);
        std::optional<RatMat> p_src;
        if (source_ok) {
            p_src = spectral_projector(a_child, source_vals, alpha_t, big_e);
            if (is_zero_matrix(*p_src)) p_src.reset(); // empty spectral channel
        }
        for (const CIdx& s : ctx.Itilde) {
            const std::string name = "omega[" + s.to_string() + "," + tname + "]";
            if (!source_ok) {
                add(name, CheckStatus::Skipped,
                    "child root " + alpha_t.to_string() + " not isolated");
                continue;
            }
            if (!p_src) {
                add(name, CheckStatus::Skipped, "spectral channel empty on this constituent");
                continue;
            }
            const RatMat* q = parent_projector(s);
            if (q == nullptr) {
                add(name, CheckStatus::Skipped,
                    "parent root " + op.beta_at(s).to_string() + " not isolated");
                continue;
            }
            if (op.beta_at(s) == alpha_t) {
                add(name, CheckStatus::Skipped,
                    "beta_s equals alpha_t: removable resolvent pole, sandwich not comparable");
                continue;
            }
            const RatMat sandwich =
                RatMat((*p_src) * q->block(d, d, dc * d, dc * d) * (*p_src));
            const std::optional<Rat> measured = scalar_ratio(sandwich, *p_src);
            std::optional<Rat> formula;
            try {
                formula = omega(op, s, t);
            } catch (const PoleError&) {
            }
            if (!measured) {
                add(name, CheckStatus::Mismatch, "sandwich not proportional to projector");
                continue;
            }
            if (!formula) {
                add(name, CheckStatus::Skipped,
                    "formula pole (operator value " + measured->to_string() + ")");
                continue;
            }
            omega_row_regular = true;
            omega_row.push_back(*measured);
            if (*measured == *formula) {
                add(name, CheckStatus::Match, "value " + formula->to_string());
            } else {
                add(name, CheckStatus::Mismatch,
                    "operator " + measured->to_string() + " vs formula " + formula->to_string());
            }
        }

        // mu: the zero mechanism is an annihilated shift component or
        // a vanishing resolvent row; nonzero values ride on the omega items
        {
            const std::string name = "mu[" + tname + "]";
            std::optional<Rat> mu_formula;
            try {
                mu_formula = mu_t(op, t);
            } catch (const PoleError&) {
            }
            if (!mu_formula) {
                add(name, CheckStatus::Skipped, "formula pole");
            } else if (annihilated) {
                if (mu_formula->is_zero())
                    add(name, CheckStatus::Match, "shift component annihilated, mu = 0");
                else
                    add(name, CheckStatus::Mismatch,
                        "shift component annihilated but formula gives " +
                            mu_formula->to_string());
            } else if (mu_formula->is_zero()) {
                if (!omega_row_regular) {
                    add(name, CheckStatus::Skipped,
                        "shift component present, no regular resolvent pair");
                } else if (std::all_of(omega_row.begin(), omega_row.end(),
                                       [](const Rat& v) { return v.is_zero(); })) {
                    add(name, CheckStatus::Match, "resolvent row vanishes, mu = 0");
                } else {
                    add(name, CheckStatus::Mismatch,
                        "mu = 0 but a resolvent sandwich is nonzero");
                }
            } else {
                add(name, CheckStatus::Skipped, "nonzero value adjudicated through the omega row");
            }
        }
    }
    return report;
}

std::vector<SuiteCheck> oracle_suite(const Signature& parent_sig) {
    parent_sig.validate();
    if (parent_sig.m < 1)
        throw DomainError("oracle_suite: the parent needs an even index to remove");
    const Signature child_sig{parent_sig.m - 1, parent_sig.n};
    Weight pw = Weight::zero(parent_sig);
    pw.odd[0] = Rat(1);

    std::vector<SuiteCheck> out;
    auto push = [&out](std::string name, bool pass, std::string detail) {
        out.push_back(SuiteCheck{std::move(name), pass, std::move(detail)});
    };

    {
        const RatMat big = characteristic_matrix(defining_realization(parent_sig));
        const Poly mp = minimal_polynomial(big);
        const CharRoots roots = casimir_difference_roots(pw);
        Poly full = Poly::constant(Rat(1));
        for (const Gi& g : all_indices(parent_sig))
            full = full * Poly::linear(-roots.at(g), Rat(1));
        Poly quo, rem;
        poly_divrem(full, mp, quo, rem);
        push("minimal-polynomial-divides", rem.is_zero(),
             "degree " + std::to_string(mp.degree()) + " of " +
                 std::to_string(full.degree()));
    }

    const ParentEmbedding emb = embed_parent(child_sig);
    for (const Weight& cw : branch_enumerate(pw, child_sig)) {
        const BranchContext ctx = index_sets(pw, cw);
        const std::string tag = "[" + format_weight(cw) + "]";
        {
            bool pass = true;
            std::string detail;
            try {
                const std::map<CIdx, Rat> c = solve_c_system(ctx);
                Rat c_total(0);
                for (const CIdx& q : ctx.Itilde) {
                    const Rat closed = c_invariant(ctx, q);
                    if (closed != c.at(q)) {
                        pass = false;
                        detail = "C[" + q.to_string() + "] closed " + closed.to_string() +
                                 " vs system " + c.at(q).to_string();
                        break;
                    }
                    c_total += closed;
                }
                if (pass && c_total != Rat(1)) {
                    pass = false;
                    detail = "sum C = " + c_total.to_string();
                }
                for (const Gi& p : ctx.I) {
                    if (!pass) break;
                    const std::map<CIdx, Rat> row = solve_gamma_system(ctx, p);
                    Rat weighted(0);
                    for (const CIdx& s : ctx.Itilde) {
                        const Rat closed = gamma_ps(ctx, p, s);
                        if (closed != row.at(s)) {
                            pass = false;
                            detail = "gamma[" + p.to_string() + "," + s.to_string() +
                                     "] closed " + closed.to_string() + " vs system " +
                                     row.at(s).to_string();
                            break;
                        }
                        weighted += closed * c.at(s);
                    }
                    if (pass && !weighted.is_zero()) {
                        pass = false;
                        detail = "sum gamma_ps C_s = " + weighted.to_string();
                    }
                }
                if (pass) detail = "closed forms equal system solutions";
            } catch (const PoleError& err) {
                detail = std::string("degenerate context, not comparable: ") + err.what();
            } catch (const SingularSystem& err) {
                detail = std::string("degenerate context, not comparable: ") + err.what();
            }
            push("linear-system" + tag, pass, detail);
        }
        {
            bool pass = true;
            std::string detail;
            try {
                const CheckReport report = operator_invariant_check(emb, ctx);
                pass = report.all_ok();
                detail = report.summary();
            } catch (const PoleError& err) {
                detail = std::string("isotypic separation unavailable: ") + err.what();
            }
            push("operator" + tag, pass, detail);
        }
    }
    return out;
}

} // namespace ospchar
