#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ospchar/algebra.hpp"
#include "ospchar/eigen_support.hpp"

namespace ospchar {

template <typename S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// Parity of a homogeneous matrix. Generators sigma^p_q carry (p)+(q).
enum class MatParity { Even, Odd };

inline MatParity generator_parity(const Gi& p, const Gi& q) {
    return ((parity_of(p) + parity_of(q)) % 2) == 0 ? MatParity::Even : MatParity::Odd;
}

// Invariant metric: identity even block, anti-diagonal odd block with +1 in
// the first k rows and -1 in the last k.
RatMat metric(const Signature& sig);

// diag(I_m, -I_n)
RatMat gamma_grading(const Signature& sig);

// Elementary matrix e_{pq}.
RatMat basis_unit(const Gi& p, const Gi& q, const Signature& sig);

// sigma_{pq} = g_{pr} e_{rq} - (-1)^{(p)(q)} g_{qr} e_{rp}
RatMat lower_generator(const Gi& p, const Gi& q, const Signature& sig);

// sigma^p_q = e_{pq} - (-1)^{(p)((p)+(q))} theta_p theta_q e_{tilde q, tilde p}
RatMat racah_generator(const Gi& p, const Gi& q, const Signature& sig);

// Basis rotation to diagonal Cartan form: even block pairs row 2j-1, 2j with
// columns j, m+1-j at entries 1/sqrt2 and -+i/sqrt2, lone middle entry 1 for
// odd m; odd block identity. Unitary.
ExtMat cw_transform(const Signature& sig);
ExtMat cw_transform_inverse(const Signature& sig);

// S^p_q = (M^{-1} sigma M)^p_q, realized on the defining module.
ExtMat cw_generator(const Gi& p, const Gi& q, const Signature& sig);

// (X^T)_{pq} = (-1)^{(X)(q)} X_{qp}
template <typename S>
DenseMat<S> supertranspose(const DenseMat<S>& x, MatParity par, const Signature& sig) {
    const int d = sig.dim();
    DenseMat<S> out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            S v = x(c, r);
            if (par == MatParity::Odd && parity_of(from_flat(c, sig)) == 1) v = -v;
            out(r, c) = v;
        }
    return out;
}

inline Rat scalar_conj(const Rat& x) { return x; }
inline Ext scalar_conj(const Ext& x) { return x.conj(); }

// X^dd = conj(X)^T
template <typename S>
DenseMat<S> super_adjoint(const DenseMat<S>& x, MatParity par, const Signature& sig) {
    DenseMat<S> c = x;
    for (Eigen::Index j = 0; j < c.cols(); ++j)
        for (Eigen::Index i = 0; i < c.rows(); ++i) c(i, j) = scalar_conj(c(i, j));
    return supertranspose(c, par, sig);
}

// [X, Y] = XY - (-1)^{(X)(Y)} YX
template <typename S>
DenseMat<S> graded_commutator(const DenseMat<S>& x, MatParity px, const DenseMat<S>& y,
                              MatParity py) {
    DenseMat<S> out = x * y;
    if (px == MatParity::Odd && py == MatParity::Odd)
        out += y * x;
    else
        out -= y * x;
    return out;
}

template <typename S>
S supertrace(const DenseMat<S>& x, const Signature& sig) {
    S t{0};
    for (int i = 0; i < sig.dim(); ++i) {
        if (parity_of(from_flat(i, sig)) == 0)
            t += x(i, i);
        else
            t -= x(i, i);
    }
    return t;
}

// Exact matrices of every sigma^p_q on one module.
struct Realization {
    Signature sig;
    int dim = 0;
    std::map<std::pair<Gi, Gi>, RatMat> gens;

    const RatMat& gen(const Gi& p, const Gi& q) const;
};

Realization defining_realization(const Signature& sig);

// Operator-entried matrix on V (x) module, flat layout (p,a) = flat(p)*dim+a:
// block (p,q) is (-1)^{(p)} pi(sigma^p_q).
RatMat characteristic_matrix(const Realization& rep);

// Same contraction with Cartan-Weyl entries, on the defining module.
ExtMat cw_characteristic_matrix(const Signature& sig);

// Graded partial trace over the defining index: out_{ab} =
// sum_p (-1)^{(p)} big[(p,a),(p,b)].
template <typename S>
DenseMat<S> graded_partial_trace(const DenseMat<S>& big, const Signature& sig, int dim) {
    DenseMat<S> out(dim, dim);
    out.setZero();
    for (int p = 0; p < sig.dim(); ++p) {
        const int sgn = parity_of(from_flat(p, sig)) == 0 ? 1 : -1;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                if (sgn > 0)
                    out(a, b) += big(p * dim + a, p * dim + b);
                else
                    out(a, b) -= big(p * dim + a, p * dim + b);
            }
    }
    return out;
}

// I_N = str(sigma-hat^N) realized on the defining module; zero for N = 1.
RatMat casimir_matrix(int N, const Signature& sig);

// Realized universal Casimir: C = (1/2) sum_{p,q} pi(sigma^p_q) (-1)^{(q)}
// pi(sigma^q_p).
RatMat quadratic_casimir_matrix(const Realization& rep);

// P[r] = prod_{q != r} (A - alpha_q) / (alpha_r - alpha_q) over the Casimir
// difference roots of lambda (the eigenvalues the realized matrix actually
// takes, so the product is idempotent). Requires alpha_r isolated from the
// other roots (repeats among the others are fine); PoleError otherwise.
RatMat projection(const Realization& rep, const Weight& lambda, const Gi& r);

// Projector onto the lambda-isotypic component of the module, built from the
// realized quadratic Casimir; constituents must have pairwise distinct
// Casimir eigenvalues (PoleError otherwise).
RatMat isotypic_projector(const Realization& rep, const Weight& lambda,
                          const std::vector<Weight>& constituents);

// As projection(), but cut down to the lambda-isotypic block first (iso is
// the module-space projector from isotypic_projector); needed when the
// module is a reducible sum of constituents.
RatMat channel_projection(const Realization& rep, const RatMat& iso, const Weight& lambda,
                          const Gi& r);

// Defining realization of osp(m+1|n) with the added even index placed first;
// child index p maps to parent Even(p+1) (even) or Odd(p) (odd), and the
// vector operator pair is psi^p = sigma^{p'}_0, phi_p = sigma^0_{p'}.
struct ParentEmbedding {
    Signature child_sig;
    Signature parent_sig;
    Realization parent;       // parent defining realization
    Realization child_action; // child generators acting on the parent module

    Gi to_parent(const Gi& g) const;
    const RatMat& psi(const Gi& r) const;
    const RatMat& phi(const Gi& r) const;
};

ParentEmbedding embed_parent(const Signature& child_sig);

// Column stack (m+n)*d x d of the psi^r and row stack d x (m+n)*d of the
// phi_r, d the parent dimension, child flat layout on the stacked index.
RatMat psi_stack(const ParentEmbedding& emb);
RatMat phi_row(const ParentEmbedding& emb);

// diag over (p,a) of (-1)^{(p)}.
RatMat grading_tensor(const Signature& sig, int dim);

// Named outcome of one exact identity check.
struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Structural identity suite for one signature: graded commutation relations
// in both bases, metric and transform identities, supertrace Casimirs, the
// defining-module characteristic identity on V (x) V, and for m = 2 the
// equality of the vector-module Casimir eigenvalue across label conventions.
// Every comparison is exact.
std::vector<SuiteCheck> structure_suite(const Signature& sig);

} // namespace ospchar
