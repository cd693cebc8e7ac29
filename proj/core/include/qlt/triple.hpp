#pragma once

#include <string>
#include <vector>

#include "qlt/matrix.hpp"
#include "qlt/params.hpp"

namespace qlt {

/// The two standard bases of the construction. In the first basis A carries
/// its eigenvalues ascending on the diagonal and the superdiagonal of B is
/// the first split sequence; in the second basis A's diagonal is reversed
/// and B's superdiagonal is the second split sequence.
enum class BasisChoice { first, second };

inline const char* to_string(BasisChoice b) { return b == BasisChoice::first ? "first" : "second"; }

/// A fully materialized triple: the three operators, their primitive
/// idempotent families, the intertwiners W, W', W'' with inverses and
/// squares, the bar elements, and P = W' W. Immutable once built.
template <ExactField F>
struct TripleRealization {
    QRacahParams<F> params;
    EigenData<F> eig;
    BasisChoice basis = BasisChoice::first;

    Matrix<F> A, B, C;
    std::vector<Matrix<F>> E_a, E_b, E_c; // idempotents of A, B, C in eigenvalue order

    Matrix<F> W, Wp, Wpp;                // W' = Wp, W'' = Wpp
    Matrix<F> W_inv, Wp_inv, Wpp_inv;
    Matrix<F> W_sq, Wp_sq, Wpp_sq;
    Matrix<F> W_sq_inv, Wp_sq_inv, Wpp_sq_inv;

    Matrix<F> A_bar, B_bar, C_bar;
    Matrix<F> P;
};

/// Primitive idempotents of a multiplicity-free X with the given spectrum,
/// in eigenvalue order: E_i = prod_{j != i} (X - eigs[j] I) / (eigs[i] - eigs[j]).
/// The factors are shared through prefix/suffix products, so the whole family
/// costs O(n) matrix products. Verifies prod_j (X - eigs[j] I) = 0.
template <ExactField F>
std::vector<Matrix<F>> lagrange_idempotents(const Matrix<F>& x, const std::vector<F>& eigs) {
    const int n = x.order();
    if (static_cast<int>(eigs.size()) != n) throw error("spectrum size must equal matrix order");
    for (std::size_t i = 0; i < eigs.size(); ++i)
        for (std::size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] == eigs[j]) throw error("not multiplicity-free with given spectrum");
    const F like = x(0, 0);
    const Matrix<F> id = Matrix<F>::identity(n, like);
    std::vector<Matrix<F>> prefix(static_cast<std::size_t>(n) + 1, id);
    for (int k = 1; k <= n; ++k) prefix[k] = prefix[k - 1] * (x - id.scaled(eigs[k - 1]));
    if (!prefix[n].is_zero()) throw error("not multiplicity-free with given spectrum");
    std::vector<Matrix<F>> suffix(static_cast<std::size_t>(n), id);
    for (int k = n - 2; k >= 0; --k) suffix[k] = suffix[k + 1] * (x - id.scaled(eigs[k + 1]));
    std::vector<Matrix<F>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        F den = like.make(1);
        for (int j = 0; j < n; ++j)
            if (j != i) den = den * (eigs[i] - eigs[j]);
        out.push_back((prefix[i] * suffix[i]).scaled(den.inv()));
    }
    return out;
}

namespace detail {

// sum_i weights[i] E_i
template <ExactField F>
Matrix<F> idempotent_sum(const std::vector<Matrix<F>>& es, const std::vector<F>& weights) {
    Matrix<F> acc = es[0].scaled(weights[0]);
    for (std::size_t i = 1; i < es.size(); ++i) acc = acc + es[i].scaled(weights[i]);
    return acc;
}

// the weight (-1)^i x^(-i) q^(i(d-i)) and its powers
template <ExactField F>
std::vector<F> w_weights(const F& x, const F& q, int d, int power) {
    std::vector<F> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const F sign = x.make(i % 2 == 0 || power % 2 == 0 ? 1 : -1);
        out.push_back(sign * pow(x, -static_cast<std::int64_t>(i) * power) *
                      pow(q, static_cast<std::int64_t>(i) * (d - i) * power));
    }
    return out;
}

} // namespace detail

/// Populates the six W-family members from the idempotent families:
/// W = sum (-1)^i a^(-i) q^(i(d-i)) E_i, the primed analogues with b, c over
/// the idempotents of B, C, the closed-form inverses, and the squares.
template <ExactField F>
void build_w_elements(TripleRealization<F>& r) {
    const F &q = r.params.q;
    const int d = r.params.d;
    r.W = detail::idempotent_sum(r.E_a, detail::w_weights(r.params.a, q, d, 1));
    r.W_inv = detail::idempotent_sum(r.E_a, detail::w_weights(r.params.a, q, d, -1));
    r.W_sq = detail::idempotent_sum(r.E_a, detail::w_weights(r.params.a, q, d, 2));
    r.W_sq_inv = detail::idempotent_sum(r.E_a, detail::w_weights(r.params.a, q, d, -2));
    r.Wp = detail::idempotent_sum(r.E_b, detail::w_weights(r.params.b, q, d, 1));
    r.Wp_inv = detail::idempotent_sum(r.E_b, detail::w_weights(r.params.b, q, d, -1));
    r.Wp_sq = detail::idempotent_sum(r.E_b, detail::w_weights(r.params.b, q, d, 2));
    r.Wp_sq_inv = detail::idempotent_sum(r.E_b, detail::w_weights(r.params.b, q, d, -2));
    r.Wpp = detail::idempotent_sum(r.E_c, detail::w_weights(r.params.c, q, d, 1));
    r.Wpp_inv = detail::idempotent_sum(r.E_c, detail::w_weights(r.params.c, q, d, -1));
    r.Wpp_sq = detail::idempotent_sum(r.E_c, detail::w_weights(r.params.c, q, d, 2));
    r.Wpp_sq_inv = detail::idempotent_sum(r.E_c, detail::w_weights(r.params.c, q, d, -2));
}

/// A_bar = W^-1 B W - C and the cyclic analogues.
template <ExactField F>
void build_bars(TripleRealization<F>& r) {
    r.A_bar = r.W_inv * r.B * r.W - r.C;
    r.B_bar = r.Wp_inv * r.C * r.Wp - r.A;
    r.C_bar = r.Wpp_inv * r.A * r.Wpp - r.B;
}

/// Builds the realization for a validated tuple. A is lower bidiagonal with
/// subdiagonal 1s and eigenvalues on the diagonal (ascending in the first
/// basis, descending in the second); B is upper bidiagonal with the matching
/// split sequence on the superdiagonal; C is forced by the cyclic relation
/// C = alpha_c I - (q AB - q^-1 BA) / (q^2 - q^-2). All derived members are
/// populated.
template <ExactField F>
TripleRealization<F> build_triple(const QRacahParams<F>& p, BasisChoice basis) {
    TripleRealization<F> r;
    r.params = p;
    r.eig = eigen_data(p);
    r.basis = basis;
    const int n = p.d + 1;
    const F one = p.q.make(1);
    r.A = Matrix<F>::zero(n, one);
    r.B = Matrix<F>::zero(n, one);
    for (int i = 0; i < n; ++i) r.A(i, i) = basis == BasisChoice::first ? r.eig.eig_a[i] : r.eig.eig_a[p.d - i];
    for (int i = 1; i < n; ++i) r.A(i, i - 1) = one;
    const auto& split = basis == BasisChoice::first ? r.eig.split_first : r.eig.split_second;
    for (int i = 0; i < n; ++i) r.B(i, i) = r.eig.eig_b[i];
    for (int i = 1; i < n; ++i) r.B(i - 1, i) = split[i - 1];
    const Matrix<F> id = Matrix<F>::identity(n, one);
    const F qsq = p.q * p.q;
    const F span = qsq - qsq.inv(); // q^2 - q^-2, nonzero because q^4 != 1
    r.C = id.scaled(r.eig.alpha_c) -
          ((r.A * r.B).scaled(p.q) - (r.B * r.A).scaled(p.q.inv())).scaled(span.inv());
    r.E_a = lagrange_idempotents(r.A, r.eig.eig_a);
    r.E_b = lagrange_idempotents(r.B, r.eig.eig_b);
    // the same call doubles as a proof that C has exactly the expected spectrum
    r.E_c = lagrange_idempotents(r.C, r.eig.eig_c);
    build_w_elements(r);
    build_bars(r);
    r.P = r.Wp * r.W;
    return r;
}

/// Which element of the W family to expand in the tau basis of A.
enum class WForm { w, w_inverse, w_square, w_square_inverse };

/// Expansion of an operator in the tau basis of A: the coefficient list
/// gamma with roots the eigenvalue prefix, meaning
/// sum_i gamma[i] (A - roots[0] I)...(A - roots[i-1] I).
template <ExactField F>
struct TauExpansion {
    std::vector<F> roots;  // eigenvalues of A, first d of them
    std::vector<F> coeffs; // size d+1
};

/// Closed-form tau-basis coefficients of W, W^-1, W^2, W^-2:
///   W     : (-1)^i q^(i^2)        / ((q^2;q^2)_i (a q^(1-d);q^2)_i)
///   W^-1  : (-1)^i a^i q^(i(i-d+1)) / ((q^2;q^2)_i (a q^(1-d);q^2)_i)
///   W^2   : a^-i q^(id)           / (q^2;q^2)_i
///   W^-2  : (-1)^i a^i q^(i(i-d+1)) / (q^2;q^2)_i
/// The denominators are nonzero under the assumption.
template <ExactField F>
TauExpansion<F> w_tau_expansion(const QRacahParams<F>& p, WForm which) {
    const F &q = p.q, &a = p.a;
    const int d = p.d;
    const std::vector<F> eigs = detail::eigenvalue_sequence(a, q, d);
    TauExpansion<F> out;
    out.roots.assign(eigs.begin(), eigs.end() - 1);
    out.coeffs.reserve(static_cast<std::size_t>(d) + 1);
    const F qsq = q * q;
    const F aq = a * pow(q, 1 - d);
    for (int i = 0; i <= d; ++i) {
        const F sign = q.make(i % 2 == 0 ? 1 : -1);
        const F poch_q = q_pochhammer(qsq, qsq, i);
        F gamma = q.make(0);
        switch (which) {
            case WForm::w:
                gamma = sign * pow(q, static_cast<std::int64_t>(i) * i) / (poch_q * q_pochhammer(aq, qsq, i));
                break;
            case WForm::w_inverse:
                gamma = sign * pow(a, i) * pow(q, static_cast<std::int64_t>(i) * (i - d + 1)) /
                        (poch_q * q_pochhammer(aq, qsq, i));
                break;
            case WForm::w_square:
                gamma = pow(a, -i) * pow(q, static_cast<std::int64_t>(i) * d) / poch_q;
                break;
            case WForm::w_square_inverse:
                gamma = sign * pow(a, i) * pow(q, static_cast<std::int64_t>(i) * (i - d + 1)) / poch_q;
                break;
        }
        out.coeffs.push_back(gamma);
    }
    return out;
}

/// Closed form of A_bar, split on the location of q + q^-1 in the spectrum:
/// for a = q^(d+1) it is the trace scalar times E_0, for a = q^(-d-1) the
/// same scalar times E_d, and otherwise
/// (alpha_b - alpha_c)(I - A/(q + q^-1))^-1.
template <ExactField F>
Matrix<F> bar_closed_form(const QRacahParams<F>& p, const TripleRealization<F>& r) {
    const F &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    const F qd1 = pow(q, p.d + 1);
    if (a == qd1 || a == qd1.inv()) {
        const F scalar = (b - c) * (b - c.inv()) * b.inv() * q_bracket(p.d + 1, q);
        return (a == qd1 ? r.E_a.front() : r.E_a.back()).scaled(scalar);
    }
    const Matrix<F> id = Matrix<F>::identity(r.A.order(), q.make(1));
    const Matrix<F> m = id - r.A.scaled((q + q.inv()).inv());
    return inverse(m).scaled(r.eig.alpha_b - r.eig.alpha_c);
}

/// The same element expanded in the tau basis of A, with the generic-case
/// leading coefficient (a - q^(-d-1))(b - c)(b - c^-1) b^-1 q^d / (a - q^(d-1))
/// and the recurrence gamma_{i-1} = gamma_i (q + q^-1 - eig_i).
template <ExactField F>
Matrix<F> bar_tau_form(const QRacahParams<F>& p, const TripleRealization<F>& r) {
    const F &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    const int d = p.d;
    const auto& eigs = r.eig.eig_a;
    const std::vector<F> roots(eigs.begin(), eigs.end() - 1);
    const F qd1 = pow(q, d + 1);
    std::vector<F> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    if (a == qd1 || a == qd1.inv()) {
        const F scalar = (b - c) * (b - c.inv()) * b.inv() * q_bracket(d + 1, q);
        if (a == qd1) {
            // scalar times the tau expansion of E_0
            F den = q.make(1);
            coeffs.push_back(scalar);
            for (int i = 1; i <= d; ++i) {
                den = den * (eigs[0] - eigs[i]);
                coeffs.push_back(scalar / den);
            }
        } else {
            // scalar times the tau expansion of E_d, a single top term
            F den = q.make(1);
            for (int k = 0; k < d; ++k) den = den * (eigs[d] - eigs[k]);
            coeffs.assign(static_cast<std::size_t>(d) + 1, q.make(0));
            coeffs.back() = scalar / den;
        }
    } else {
        const F lead = (a - qd1.inv()) * (b - c) * (b - c.inv()) * b.inv() * pow(q, d) / (a - pow(q, d - 1));
        const F qpq = q + q.inv();
        F gamma = lead;
        coeffs.push_back(gamma);
        for (int i = 1; i <= d; ++i) {
            gamma = gamma / (qpq - eigs[i]);
            coeffs.push_back(gamma);
        }
    }
    return eval_tau_polynomial(r.A, roots, coeffs);
}

/// The one-parameter family of invertible elements commuting with A whose
/// conjugate of B corrects to C: coefficients t_i on the idempotents with
/// t_i = eps (-1)^i a^(-i) q^(i(d-i)), normalized to t_0 = 1.
template <ExactField F>
struct CommutantSolution {
    std::vector<F> t;
    F eps;
};

/// Solves the two-term recurrence t_i / t_{i-1} = -a^-1 q^(d-2i+1) with
/// t_0 = 1 and certifies the result: every adjacent constraint holds in both
/// directions (so the constraint system pins the solution up to the overall
/// scalar), the closed form matches, and sum t_i E_i actually commutes with
/// A and conjugates B onto C + A_bar. Throws if any of this fails.
template <ExactField F>
CommutantSolution<F> solve_commutant_w(const TripleRealization<F>& r) {
    const F &q = r.params.q, &a = r.params.a;
    const int d = r.params.d;
    const F one = q.make(1);
    std::vector<F> t{one};
    t.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 1; i <= d; ++i) t.push_back(t.back() * (-(a.inv() * pow(q, d - 2 * i + 1))));
    const F qsq = q * q;
    const F span = qsq - qsq.inv();
    // both orientations of the adjacency constraint; their mutual consistency
    // is what makes the solution space one-dimensional
    for (int i = 1; i <= d; ++i) {
        const auto& th = r.eig.eig_a;
        const F forward = t[i] / t[i - 1] + (q * th[i - 1] - q.inv() * th[i]) / span;
        const F backward = t[i - 1] / t[i] + (q * th[i] - q.inv() * th[i - 1]) / span;
        if (!forward.is_zero() || !backward.is_zero()) throw error("commutant recurrence inconsistent");
    }
    for (int i = 0; i <= d; ++i) {
        if (t[i].is_zero()) throw error("commutant recurrence inconsistent");
        const F sign = one.make(i % 2 == 0 ? 1 : -1);
        if (!(t[i] == sign * pow(a, -i) * pow(q, static_cast<std::int64_t>(i) * (d - i))))
            throw error("commutant recurrence inconsistent");
    }
    // certify the matrix-level statement
    std::vector<F> t_inv;
    t_inv.reserve(t.size());
    for (const F& x : t) t_inv.push_back(x.inv());
    const Matrix<F> w = detail::idempotent_sum(r.E_a, t);
    const Matrix<F> w_inv = detail::idempotent_sum(r.E_a, t_inv);
    if (!commutator(r.A, w).is_zero()) throw error("commutant recurrence inconsistent");
    if (!commutator(r.A, w_inv * r.B * w - r.C).is_zero()) throw error("commutant recurrence inconsistent");
    return CommutantSolution<F>{std::move(t), one};
}

} // namespace qlt
