#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlt/triple.hpp"

namespace qlt {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string_view s);

/// Result of one catalog check. A fail always carries a concrete witness in
/// detail (the first differing entry or scalar); some passing checks carry an
/// informative detail such as the value of a product scalar.
struct CheckOutcome {
    std::string id;
    std::string paper_ref;
    CheckStatus status = CheckStatus::pass;
    std::string detail;

    bool operator==(const CheckOutcome&) const = default;
};

/// Precondition a check places on the realization; unmet checks are reported
/// as skipped, never silently passed.
enum class Applicability { always, diameter_at_least_3, equal_abc };

struct CheckDescriptor {
    std::string_view id;
    std::string_view paper_ref;
    Applicability when = Applicability::always;
};

/// The full check catalog in its fixed order. Ids are unique and stable;
/// they form the vocabulary of the CLI check filter and the report format.
const std::vector<CheckDescriptor>& check_catalog();

/// Descriptor lookup; null when the id is unknown.
const CheckDescriptor* find_check(std::string_view id);

/// Glob match with '*' (any run) and '?' (any single character).
bool glob_match(std::string_view pattern, std::string_view text);

/// Everything one suite execution produced, with the parameters echoed as
/// canonical literals so reports are field-agnostic and serializable.
struct VerificationReport {
    std::string q, a, b, c;
    int d = 0;
    std::string field;
    std::string basis;
    std::vector<CheckOutcome> checks;
    int pass = 0, fail = 0, skipped = 0;

    bool operator==(const VerificationReport&) const = default;
};

namespace detail {

// Scratch state for evaluating checks against one realization. Records only
// the first counterexample; later comparisons become no-ops.
template <ExactField F>
struct Session {
    const TripleRealization<F>& r;
    F q, a, b, c, one, qinv, g, g2, qp; // g = q - q^-1, g2 = q^2 - q^-2, qp = q + q^-1
    Matrix<F> id;
    std::optional<std::string> failure;
    std::string note;

    explicit Session(const TripleRealization<F>& real)
        : r(real),
          q(real.params.q),
          a(real.params.a),
          b(real.params.b),
          c(real.params.c),
          one(real.params.q.make(1)) {
        qinv = q.inv();
        g = q - qinv;
        const F qsq = q * q;
        g2 = qsq - qsq.inv();
        qp = q + qinv;
        id = Matrix<F>::identity(r.A.order(), one);
    }

    void eq_m(const std::string& label, const Matrix<F>& lhs, const Matrix<F>& rhs) {
        if (failure || lhs == rhs) return;
        if (lhs.order() != rhs.order()) {
            failure = label + ": order mismatch";
            return;
        }
        for (int i = 0; i < lhs.order(); ++i) {
            for (int j = 0; j < lhs.order(); ++j) {
                if (!(lhs(i, j) == rhs(i, j))) {
                    failure = label + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                              "): lhs = " + lhs(i, j).to_string() + ", rhs = " + rhs(i, j).to_string();
                    return;
                }
            }
        }
        failure = label + ": matrices differ";
    }

    void eq_s(const std::string& label, const F& lhs, const F& rhs) {
        if (failure || lhs == rhs) return;
        failure = label + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
    }

    void zero_m(const std::string& label, const Matrix<F>& m) {
        if (failure || m.is_zero()) return;
        for (int i = 0; i < m.order(); ++i)
            for (int j = 0; j < m.order(); ++j)
                if (!m(i, j).is_zero()) {
                    failure = label + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + m(i, j).to_string();
                    return;
                }
    }

    void nonzero_m(const std::string& label, const Matrix<F>& m) {
        if (failure) return;
        if (m.is_zero()) failure = label + ": matrix is identically zero";
    }

    void require(const std::string& label, bool ok) {
        if (failure || ok) return;
        failure = label;
    }
};

template <ExactField F>
Matrix<F> conj(const Matrix<F>& left, const Matrix<F>& x, const Matrix<F>& right) {
    return left * x * right;
}

// --- eigenvalue checks ------------------------------------------------------

template <ExactField F>
void check_eig_distinct(Session<F>& s) {
    const char* names[] = {"eig_a", "eig_b", "eig_c"};
    const std::vector<F>* seqs[] = {&s.r.eig.eig_a, &s.r.eig.eig_b, &s.r.eig.eig_c};
    for (int f = 0; f < 3; ++f) {
        const auto& e = *seqs[f];
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                s.require(std::string(names[f]) + "[" + std::to_string(i) + "] = " + std::string(names[f]) +
                              "[" + std::to_string(j) + "] = " + e[i].to_string(),
                          !(e[i] == e[j]));
    }
}

template <ExactField F>
void check_eig_lem1(Session<F>& s) {
    const int d = s.r.params.d;
    const F* xs[] = {&s.a, &s.b, &s.c};
    const std::vector<F>* seqs[] = {&s.r.eig.eig_a, &s.r.eig.eig_b, &s.r.eig.eig_c};
    for (int f = 0; f < 3; ++f) {
        const F& x = *xs[f];
        const auto& e = *seqs[f];
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j)
                s.eq_s("difference factorization at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                       e[i] - e[j],
                       (s.one - pow(s.q, 2 * j - 2 * i)) * (x * pow(s.q, 2 * i - d) - x.inv() * pow(s.q, d - 2 * j)));
    }
}

template <ExactField F>
void check_eig_lem4(Session<F>& s) {
    const int d = s.r.params.d;
    const F* xs[] = {&s.a, &s.b, &s.c};
    const std::vector<F>* seqs[] = {&s.r.eig.eig_a, &s.r.eig.eig_b, &s.r.eig.eig_c};
    for (int f = 0; f < 3; ++f) {
        const F& x = *xs[f];
        const auto& e = *seqs[f];
        for (int i = 1; i <= d; ++i) {
            const F up = (s.q * e[i] - s.qinv * e[i - 1]) / s.g2;
            const F down = (s.q * e[i - 1] - s.qinv * e[i]) / s.g2;
            s.eq_s("ascending ratio at i = " + std::to_string(i), up, x * pow(s.q, 2 * i - d - 1));
            s.eq_s("descending ratio at i = " + std::to_string(i), down, x.inv() * pow(s.q, d - 2 * i + 1));
            s.eq_s("cross product at i = " + std::to_string(i), up * down, s.one);
        }
    }
}

template <ExactField F>
void check_eig_qqth(Session<F>& s) {
    const int d = s.r.params.d;
    const F* xs[] = {&s.a, &s.b, &s.c};
    const std::vector<F>* seqs[] = {&s.r.eig.eig_a, &s.r.eig.eig_b, &s.r.eig.eig_c};
    for (int f = 0; f < 3; ++f) {
        const F& x = *xs[f];
        const auto& e = *seqs[f];
        for (int i = 0; i <= d; ++i)
            s.eq_s("offset factorization at i = " + std::to_string(i), e[i] - s.qp,
                   (x - pow(s.q, d - 2 * i + 1)) * (x - pow(s.q, d - 2 * i - 1)) * pow(s.q, 2 * i - d) * x.inv());
    }
}

template <ExactField F>
void check_eig_eigreq(Session<F>& s) {
    const int d = s.r.params.d;
    const std::vector<F>* seqs[] = {&s.r.eig.eig_a, &s.r.eig.eig_b, &s.r.eig.eig_c};
    std::optional<F> expected;
    for (const auto* seq : seqs) {
        const auto& e = *seq;
        for (int i = 2; i <= d - 1; ++i) {
            const F ratio = (e[i - 2] - e[i + 1]) / (e[i - 1] - e[i]);
            if (!expected) expected = ratio;
            s.eq_s("eigenvalue ratio at i = " + std::to_string(i), ratio, *expected);
        }
    }
}

// --- defining relations ------------------------------------------------------

template <ExactField F>
void check_zrel(Session<F>& s, char which) {
    const auto &A = s.r.A, &B = s.r.B, &C = s.r.C;
    const F g2inv = s.g2.inv();
    switch (which) {
        case 'a':
            s.eq_m("A + (q BC - q^-1 CB)/(q^2 - q^-2)",
                   A + ((B * C).scaled(s.q) - (C * B).scaled(s.qinv)).scaled(g2inv),
                   s.id.scaled(s.r.eig.alpha_a));
            break;
        case 'b':
            s.eq_m("B + (q CA - q^-1 AC)/(q^2 - q^-2)",
                   B + ((C * A).scaled(s.q) - (A * C).scaled(s.qinv)).scaled(g2inv),
                   s.id.scaled(s.r.eig.alpha_b));
            break;
        default:
            s.eq_m("C + (q AB - q^-1 BA)/(q^2 - q^-2)",
                   C + ((A * B).scaled(s.q) - (B * A).scaled(s.qinv)).scaled(g2inv),
                   s.id.scaled(s.r.eig.alpha_c));
            break;
    }
}

template <ExactField F>
void check_cubic(Session<F>& s, int k) {
    const auto &A = s.r.A, &B = s.r.B, &C = s.r.C;
    const F &aa = s.r.eig.alpha_a, &ab = s.r.eig.alpha_b, &ac = s.r.eig.alpha_c;
    struct Row {
        const Matrix<F>*x, *y;
        const F *on_id, *on_x;
    };
    const Row rows[] = {{&A, &B, &ab, &ac}, {&B, &C, &ac, &aa}, {&C, &A, &aa, &ab},
                        {&A, &C, &ac, &ab}, {&B, &A, &aa, &ac}, {&C, &B, &ab, &aa}};
    const Row& w = rows[k - 1];
    const Matrix<F>&X = *w.x, &Y = *w.y;
    const F qq = s.q * s.q + s.qinv * s.qinv;
    const Matrix<F> lhs = X * X * Y - (X * Y * X).scaled(qq) + Y * X * X + Y.scaled(s.g2 * s.g2);
    const Matrix<F> rhs = s.id.scaled(*w.on_id * s.g2 * s.g2) - X.scaled(*w.on_x * s.g * s.g2);
    s.eq_m("cubic relation " + std::to_string(k), lhs, rhs);
}

template <ExactField F>
void check_trid(Session<F>& s) {
    struct Fam {
        const std::vector<Matrix<F>>* es;
        const Matrix<F>* x;
        const char* name;
    };
    const Fam fams[] = {{&s.r.E_a, &s.r.B, "E_i B E_j"},  {&s.r.E_b, &s.r.C, "E'_i C E'_j"},
                        {&s.r.E_c, &s.r.A, "E''_i A E''_j"}, {&s.r.E_a, &s.r.C, "E_i C E_j"},
                        {&s.r.E_b, &s.r.A, "E'_i A E'_j"}, {&s.r.E_c, &s.r.B, "E''_i B E''_j"}};
    const int n = s.r.A.order();
    for (const auto& fam : fams) {
        if (s.failure) return;
        std::vector<Matrix<F>> xe;
        xe.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) xe.push_back(*fam.x * (*fam.es)[j]);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const std::string where =
                    std::string(fam.name) + " at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
                const Matrix<F> prod = (*fam.es)[i] * xe[j];
                if (i - j > 1 || j - i > 1)
                    s.zero_m(where, prod);
                else
                    s.nonzero_m(where, prod);
            }
        }
    }
}

// --- traces -------------------------------------------------------------------

template <ExactField F>
void check_trace_abc(Session<F>& s) {
    const F bracket = q_bracket(s.r.params.d + 1, s.q);
    s.eq_s("tr(A)", trace(s.r.A), (s.a + s.a.inv()) * bracket);
    s.eq_s("tr(B)", trace(s.r.B), (s.b + s.b.inv()) * bracket);
    s.eq_s("tr(C)", trace(s.r.C), (s.c + s.c.inv()) * bracket);
}

template <ExactField F>
void check_threea(Session<F>& s, int k) {
    const F &aa = s.r.eig.alpha_a, &ab = s.r.eig.alpha_b, &ac = s.r.eig.alpha_c;
    struct Row {
        const Matrix<F>* x;
        const std::vector<Matrix<F>>* es;
        const std::vector<F>* eigs;
        const F *subtrahend, *rhs_pos, *rhs_neg;
    };
    const Row rows[] = {{&s.r.B, &s.r.E_a, &s.r.eig.eig_a, &ac, &ab, &ac},
                        {&s.r.C, &s.r.E_b, &s.r.eig.eig_b, &aa, &ac, &aa},
                        {&s.r.A, &s.r.E_c, &s.r.eig.eig_c, &ab, &aa, &ab},
                        {&s.r.C, &s.r.E_a, &s.r.eig.eig_a, &ab, &ac, &ab},
                        {&s.r.A, &s.r.E_b, &s.r.eig.eig_b, &ac, &aa, &ac},
                        {&s.r.B, &s.r.E_c, &s.r.eig.eig_c, &aa, &ab, &aa}};
    const Row& w = rows[k - 1];
    const F rhs = *w.rhs_pos - *w.rhs_neg;
    for (std::size_t i = 0; i < w.eigs->size(); ++i) {
        const F& th = (*w.eigs)[i];
        const F lhs = (trace(*w.x * (*w.es)[i]) * (s.qp + th) / s.qp - *w.subtrahend) * (s.one - th / s.qp);
        s.eq_s("trace equation " + std::to_string(k) + " at i = " + std::to_string(i), lhs, rhs);
    }
}

template <ExactField F>
void check_alphadif(Session<F>& s, int k) {
    const int d = s.r.params.d;
    const F qd = pow(s.q, d + 1);
    const F qdi = qd.inv();
    const F &aa = s.r.eig.alpha_a, &ab = s.r.eig.alpha_b, &ac = s.r.eig.alpha_c;
    switch (k) {
        case 1:
            s.eq_s("alpha_a - alpha_b", aa - ab,
                   (s.b - s.a) * (s.b - s.a.inv()) * (s.c - qd) * (s.c - qdi) * s.b.inv() * s.c.inv() / s.qp);
            break;
        case 2:
            s.eq_s("alpha_b - alpha_c", ab - ac,
                   (s.c - s.b) * (s.c - s.b.inv()) * (s.a - qd) * (s.a - qdi) * s.c.inv() * s.a.inv() / s.qp);
            break;
        default:
            s.eq_s("alpha_c - alpha_a", ac - aa,
                   (s.a - s.c) * (s.a - s.c.inv()) * (s.b - qd) * (s.b - qdi) * s.a.inv() * s.b.inv() / s.qp);
            break;
    }
}

// --- the W family -------------------------------------------------------------

template <ExactField F>
void check_w_commute(Session<F>& s) {
    s.zero_m("[A, W]", commutator(s.r.A, s.r.W));
    s.zero_m("[A, W^-1 B W - C]", commutator(s.r.A, s.r.A_bar));
    s.zero_m("[B, W']", commutator(s.r.B, s.r.Wp));
    s.zero_m("[B, W'^-1 C W' - A]", commutator(s.r.B, s.r.B_bar));
    s.zero_m("[C, W'']", commutator(s.r.C, s.r.Wpp));
    s.zero_m("[C, W''^-1 A W'' - B]", commutator(s.r.C, s.r.C_bar));
}

template <ExactField F>
void check_w_unique(Session<F>& s) {
    const auto sol = solve_commutant_w(s.r);
    const auto weights = detail::w_weights(s.a, s.q, s.r.params.d, 1);
    for (std::size_t i = 0; i < weights.size(); ++i)
        s.eq_s("normalized solution coefficient " + std::to_string(i), sol.t[i], weights[i]);
    s.eq_s("normalization", sol.eps, s.one);
}

// --- bar elements --------------------------------------------------------------

template <ExactField F>
void check_bar_membership(Session<F>& s) {
    struct Row {
        const Matrix<F>*bar, *x;
        const std::vector<Matrix<F>>* es;
        const char* name;
    };
    const Row rows[] = {{&s.r.A_bar, &s.r.A, &s.r.E_a, "Abar"},
                        {&s.r.B_bar, &s.r.B, &s.r.E_b, "Bbar"},
                        {&s.r.C_bar, &s.r.C, &s.r.E_c, "Cbar"}};
    for (const auto& w : rows) {
        s.zero_m(std::string("[") + w.name + ", operator]", commutator(*w.bar, *w.x));
        Matrix<F> diag = (*w.es)[0] * *w.bar * (*w.es)[0];
        for (std::size_t i = 1; i < w.es->size(); ++i) diag = diag + (*w.es)[i] * *w.bar * (*w.es)[i];
        s.eq_m(std::string(w.name) + " = sum_i E_i " + w.name + " E_i", diag, *w.bar);
    }
}

template <ExactField F>
void check_bar_altform(Session<F>& s) {
    s.eq_m("Abar = B - W C W^-1", s.r.A_bar, s.r.B - conj(s.r.W, s.r.C, s.r.W_inv));
    s.eq_m("Bbar = C - W' A W'^-1", s.r.B_bar, s.r.C - conj(s.r.Wp, s.r.A, s.r.Wp_inv));
    s.eq_m("Cbar = A - W'' B W''^-1", s.r.C_bar, s.r.A - conj(s.r.Wpp, s.r.B, s.r.Wpp_inv));
}

template <ExactField F>
void check_bar_trace(Session<F>& s) {
    const F bracket = q_bracket(s.r.params.d + 1, s.q);
    const F ta = trace(s.r.A), tb = trace(s.r.B), tc = trace(s.r.C);
    s.eq_s("tr(Abar) = tr(B) - tr(C)", trace(s.r.A_bar), tb - tc);
    s.eq_s("tr(Bbar) = tr(C) - tr(A)", trace(s.r.B_bar), tc - ta);
    s.eq_s("tr(Cbar) = tr(A) - tr(B)", trace(s.r.C_bar), ta - tb);
    s.eq_s("tr(Abar) closed form", trace(s.r.A_bar), (s.b - s.c) * (s.b - s.c.inv()) * s.b.inv() * bracket);
    s.eq_s("tr(Bbar) closed form", trace(s.r.B_bar), (s.c - s.a) * (s.c - s.a.inv()) * s.c.inv() * bracket);
    s.eq_s("tr(Cbar) closed form", trace(s.r.C_bar), (s.a - s.b) * (s.a - s.b.inv()) * s.a.inv() * bracket);
}

template <ExactField F>
void check_abarinv(Session<F>& s, int k) {
    struct Row {
        const Matrix<F>*bar, *x;
        const F *pos, *neg;
        const char* name;
    };
    const Row rows[] = {{&s.r.A_bar, &s.r.A, &s.r.eig.alpha_b, &s.r.eig.alpha_c, "Abar"},
                        {&s.r.B_bar, &s.r.B, &s.r.eig.alpha_c, &s.r.eig.alpha_a, "Bbar"},
                        {&s.r.C_bar, &s.r.C, &s.r.eig.alpha_a, &s.r.eig.alpha_b, "Cbar"}};
    const Row& w = rows[k - 1];
    const Matrix<F> m = s.id - w.x->scaled(s.qp.inv());
    const Matrix<F> rhs = s.id.scaled(*w.pos - *w.neg);
    s.eq_m(std::string(w.name) + " (I - X/(q+q^-1))", *w.bar * m, rhs);
    s.eq_m(std::string("(I - X/(q+q^-1)) ") + w.name, m * *w.bar, rhs);
}

template <ExactField F>
void check_bar_closed(Session<F>& s) {
    s.eq_m("case-split closed form of Abar", bar_closed_form(s.r.params, s.r), s.r.A_bar);
    s.eq_m("tau-basis form of Abar", bar_tau_form(s.r.params, s.r), s.r.A_bar);
}

// --- conjugation ----------------------------------------------------------------

template <ExactField F>
void check_table1(Session<F>& s, int k) {
    const auto &A = s.r.A, &B = s.r.B, &C = s.r.C;
    const auto &Ab = s.r.A_bar, &Bb = s.r.B_bar, &Cb = s.r.C_bar;
    const Matrix<F>* pairs[][2] = {{&s.r.W_inv, &s.r.W},     {&s.r.W, &s.r.W_inv},
                                   {&s.r.Wp_inv, &s.r.Wp},   {&s.r.Wp, &s.r.Wp_inv},
                                   {&s.r.Wpp_inv, &s.r.Wpp}, {&s.r.Wpp, &s.r.Wpp_inv}};
    const Matrix<F>* columns[] = {&A, &B, &C};
    const int row = (k - 1) / 3, col = (k - 1) % 3;
    const Matrix<F> lhs = conj(*pairs[row][0], *columns[col], *pairs[row][1]);
    auto over_g = [&](const Matrix<F>& m) { return m.scaled(s.g.inv()); };
    Matrix<F> rhs;
    switch (k) {
        case 1: rhs = A; break;
        case 2: rhs = C + Ab; break;
        case 3: rhs = B + over_g(commutator(C, A)) - Ab; break;
        case 4: rhs = A; break;
        case 5: rhs = C + over_g(commutator(A, B)) + Ab; break;
        case 6: rhs = B - Ab; break;
        case 7: rhs = C + over_g(commutator(A, B)) - Bb; break;
        case 8: rhs = B; break;
        case 9: rhs = A + Bb; break;
        case 10: rhs = C - Bb; break;
        case 11: rhs = B; break;
        case 12: rhs = A + over_g(commutator(B, C)) + Bb; break;
        case 13: rhs = B + Cb; break;
        case 14: rhs = A + over_g(commutator(B, C)) - Cb; break;
        case 15: rhs = C; break;
        case 16: rhs = B + over_g(commutator(C, A)) + Cb; break;
        case 17: rhs = A - Cb; break;
        default: rhs = C; break;
    }
    s.eq_m("conjugation table cell " + std::to_string(k), lhs, rhs);
}

template <ExactField F>
void check_wbwi(Session<F>& s) {
    s.eq_m("W B W^-1 - W^-1 B W", conj(s.r.W, s.r.B, s.r.W_inv) - conj(s.r.W_inv, s.r.B, s.r.W),
           commutator(s.r.A, s.r.B).scaled(s.g.inv()));
    s.eq_m("W C W^-1 - W^-1 C W", conj(s.r.W, s.r.C, s.r.W_inv) - conj(s.r.W_inv, s.r.C, s.r.W),
           commutator(s.r.A, s.r.C).scaled(s.g.inv()));
}

template <ExactField F>
void check_w22(Session<F>& s) {
    const F gsqi = (s.g * s.g).inv();
    s.eq_m("W^2 B W^-2 + W^-2 B W^2",
           conj(s.r.W_sq, s.r.B, s.r.W_sq_inv) + conj(s.r.W_sq_inv, s.r.B, s.r.W_sq),
           s.r.B + s.r.B + commutator(s.r.A, commutator(s.r.A, s.r.B)).scaled(gsqi));
    s.eq_m("W^2 C W^-2 + W^-2 C W^2",
           conj(s.r.W_sq, s.r.C, s.r.W_sq_inv) + conj(s.r.W_sq_inv, s.r.C, s.r.W_sq),
           s.r.C + s.r.C + commutator(s.r.A, commutator(s.r.A, s.r.C)).scaled(gsqi));
}

template <ExactField F>
void check_table2(Session<F>& s, int k) {
    const auto &A = s.r.A, &B = s.r.B, &C = s.r.C;
    const Matrix<F>* pairs[][2] = {{&s.r.W_sq_inv, &s.r.W_sq},     {&s.r.W_sq, &s.r.W_sq_inv},
                                   {&s.r.Wp_sq_inv, &s.r.Wp_sq},   {&s.r.Wp_sq, &s.r.Wp_sq_inv},
                                   {&s.r.Wpp_sq_inv, &s.r.Wpp_sq}, {&s.r.Wpp_sq, &s.r.Wpp_sq_inv}};
    const Matrix<F>* columns[] = {&A, &B, &C};
    const int row = (k - 1) / 3, col = (k - 1) % 3;
    const Matrix<F> lhs = conj(*pairs[row][0], *columns[col], *pairs[row][1]);
    const F gsqi = (s.g * s.g).inv();
    auto over_g = [&](const Matrix<F>& m) { return m.scaled(s.g.inv()); };
    auto twice = [&](const Matrix<F>& x, const Matrix<F>& y) {
        return commutator(x, commutator(x, y)).scaled(gsqi);
    };
    Matrix<F> rhs;
    switch (k) {
        case 1: rhs = A; break;
        case 2: rhs = B + over_g(commutator(C, A)); break;
        case 3: rhs = C - over_g(commutator(A, B)) + twice(A, C); break;
        case 4: rhs = A; break;
        case 5: rhs = B - over_g(commutator(C, A)) + twice(A, B); break;
        case 6: rhs = C + over_g(commutator(A, B)); break;
        case 7: rhs = A - over_g(commutator(B, C)) + twice(B, A); break;
        case 8: rhs = B; break;
        case 9: rhs = C + over_g(commutator(A, B)); break;
        case 10: rhs = A + over_g(commutator(B, C)); break;
        case 11: rhs = B; break;
        case 12: rhs = C - over_g(commutator(A, B)) + twice(B, C); break;
        case 13: rhs = A + over_g(commutator(B, C)); break;
        case 14: rhs = B - over_g(commutator(C, A)) + twice(C, B); break;
        case 15: rhs = C; break;
        case 16: rhs = A - over_g(commutator(B, C)) + twice(C, A); break;
        case 17: rhs = B + over_g(commutator(C, A)); break;
        default: rhs = C; break;
    }
    s.eq_m("square conjugation table cell " + std::to_string(k), lhs, rhs);
}

template <ExactField F>
void check_lusztig(Session<F>& s, int k) {
    const auto &A = s.r.A, &B = s.r.B, &C = s.r.C;
    const F deninv = (s.g * s.g2).inv();
    const F qq = s.qp;
    const Matrix<F>& Y = k <= 2 ? B : C;
    const bool inward = (k % 2) == 1; // W^-2 Y W^2 rows
    const Matrix<F> lhs = inward ? conj(s.r.W_sq_inv, Y, s.r.W_sq) : conj(s.r.W_sq, Y, s.r.W_sq_inv);
    const F &hi = inward ? s.q : s.qinv, &lo = inward ? s.qinv : s.q;
    const Matrix<F> rhs =
        Y + ((A * A * Y).scaled(hi) - (A * Y * A).scaled(qq) + (Y * A * A).scaled(lo)).scaled(deninv);
    s.eq_m("Lusztig form " + std::to_string(k), lhs, rhs);
}

// --- polynomial forms and q-series ----------------------------------------------

template <ExactField F>
void check_poly_w(Session<F>& s, int k) {
    const WForm forms[] = {WForm::w, WForm::w_inverse, WForm::w_square, WForm::w_square_inverse};
    const Matrix<F>* targets[] = {&s.r.W, &s.r.W_inv, &s.r.W_sq, &s.r.W_sq_inv};
    const char* names[] = {"W", "W^-1", "W^2", "W^-2"};
    const auto expansion = w_tau_expansion(s.r.params, forms[k - 1]);
    s.eq_m(std::string("tau-basis form of ") + names[k - 1],
           eval_tau_polynomial(s.r.A, expansion.roots, expansion.coeffs), *targets[k - 1]);
}

template <ExactField F>
void check_chu(Session<F>& s, int family) {
    const int d = s.r.params.d;
    const F &q = s.q, &a = s.a;
    const F qsq = q * q, qsq_inv = (q * q).inv();
    const F zero = q.make(0);
    for (int j = 0; j <= d; ++j) {
        const std::string at = " at j = " + std::to_string(j);
        if (family == 1) {
            s.eq_s("terminating sum" + at,
                   phi21_terminating(pow(q, -2 * j), a * a * pow(q, 2 * j - 2 * d), a * pow(q, 1 - d), qsq, qsq, j),
                   q.make(j % 2 == 0 ? 1 : -1) * pow(a, j) * pow(q, static_cast<std::int64_t>(j) * (j - d)));
            s.eq_s("inverted terminating sum" + at,
                   phi21_terminating(pow(q, 2 * j), pow(a, -2) * pow(q, 2 * d - 2 * j), a.inv() * pow(q, d - 1),
                                     qsq_inv, qsq_inv, j),
                   q.make(j % 2 == 0 ? 1 : -1) * pow(a, -j) * pow(q, static_cast<std::int64_t>(j) * (d - j)));
        } else {
            s.eq_s("zero-bottom sum" + at,
                   phi21_terminating(pow(q, -2 * j), a * a * pow(q, 2 * j - 2 * d), zero, qsq, qsq, j),
                   pow(a, 2 * j) * pow(q, 2 * static_cast<std::int64_t>(j) * (j - d)));
            s.eq_s("inverted zero-bottom sum" + at,
                   phi21_terminating(pow(q, 2 * j), pow(a, -2) * pow(q, 2 * d - 2 * j), zero, qsq_inv, qsq_inv, j),
                   pow(a, -2 * j) * pow(q, 2 * static_cast<std::int64_t>(j) * (d - j)));
        }
    }
}

// --- products --------------------------------------------------------------------

template <ExactField F>
F product_scalar(const Session<F>& s) {
    const int d = s.r.params.d;
    return pow(s.a * s.b * s.c, -d) * pow(s.q, static_cast<std::int64_t>(d) * (d - 1));
}

template <ExactField F>
void check_prod_squares(Session<F>& s) {
    const F scal = product_scalar(s);
    s.eq_m("W''^2 W'^2 W^2", s.r.Wpp_sq * s.r.Wp_sq * s.r.W_sq, s.id.scaled(scal));
    if (!s.failure) s.note = "scalar = " + scal.to_string();
}

template <ExactField F>
void check_prod_sumcomm(Session<F>& s) {
    const Matrix<F> sum = s.r.A + s.r.B + s.r.C;
    s.zero_m("[W'W, A+B+C]", commutator(s.r.P, sum));
    s.zero_m("[W''W', A+B+C]", commutator(s.r.Wpp * s.r.Wp, sum));
    s.zero_m("[WW'', A+B+C]", commutator(s.r.W * s.r.Wpp, sum));
}

template <ExactField F>
void check_prod_cyclic(Session<F>& s) {
    const int n = s.r.A.order();
    const Matrix<F> sum = s.r.A + s.r.B + s.r.C;
    std::vector<F> v(static_cast<std::size_t>(n), s.one.make(0));
    v[0] = s.one;
    Matrix<F> krylov = Matrix<F>::zero(n, s.one);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) krylov(i, k) = v[i];
        if (k + 1 < n) v = sum * v;
    }
    const int got = rank(krylov);
    s.require("Krylov matrix of A+B+C from e_0 has rank " + std::to_string(got) + ", expected " +
                  std::to_string(n),
              got == n);
}

template <ExactField F>
void check_prod_commutant(Session<F>& s) {
    const int n = s.r.A.order();
    const Matrix<F> sum = s.r.A + s.r.B + s.r.C;
    std::vector<Matrix<F>> powers{Matrix<F>::identity(n, s.one)};
    for (int k = 1; k < n; ++k) powers.push_back(powers.back() * sum);
    const struct {
        Matrix<F> g;
        const char* name;
    } targets[] = {{s.r.P, "W'W"}, {s.r.Wpp * s.r.Wp, "W''W'"}, {s.r.W * s.r.Wpp, "WW''"}};
    for (const auto& t : targets)
        s.require(std::string(t.name) + " is not a polynomial in A+B+C",
                  solve_in_span(powers, t.g).has_value());
}

template <ExactField F>
void check_prod_mutual(Session<F>& s) {
    const Matrix<F> g1 = s.r.P, g2m = s.r.Wpp * s.r.Wp, g3 = s.r.W * s.r.Wpp;
    s.zero_m("[W'W, W''W']", commutator(g1, g2m));
    s.zero_m("[W''W', WW'']", commutator(g2m, g3));
    s.zero_m("[W'W, WW'']", commutator(g1, g3));
}

template <ExactField F>
void check_prod_scalar(Session<F>& s) {
    const F scal = product_scalar(s);
    s.eq_m("(W'W)(W''W')(WW'')", s.r.P * (s.r.Wpp * s.r.Wp) * (s.r.W * s.r.Wpp), s.id.scaled(scal));
    if (!s.failure) s.note = "scalar = " + scal.to_string();
}

// --- the modular case ---------------------------------------------------------------

template <ExactField F>
void check_mod_threepart(Session<F>& s) {
    const struct {
        const Matrix<F>* bar;
        const F *x, *y;
        const char* name;
    } rows[] = {{&s.r.A_bar, &s.b, &s.c, "Abar = 0 iff b ~ c"},
                {&s.r.B_bar, &s.c, &s.a, "Bbar = 0 iff c ~ a"},
                {&s.r.C_bar, &s.a, &s.b, "Cbar = 0 iff a ~ b"}};
    for (const auto& w : rows) {
        const bool bar_zero = w.bar->is_zero();
        const bool similar = is_similar(*w.x, *w.y);
        s.require(std::string(w.name) + ": bar vanishing is " + (bar_zero ? "true" : "false") +
                      " but similarity is " + (similar ? "true" : "false"),
                  bar_zero == similar);
    }
}

template <ExactField F>
void check_mod_cycle(Session<F>& s) {
    const auto& r = s.r;
    for (std::size_t i = 0; i < r.eig.eig_a.size(); ++i) {
        s.eq_s("eig_a = eig_b at " + std::to_string(i), r.eig.eig_a[i], r.eig.eig_b[i]);
        s.eq_s("eig_b = eig_c at " + std::to_string(i), r.eig.eig_b[i], r.eig.eig_c[i]);
    }
    const Matrix<F> p_inv = r.W_inv * r.Wp_inv;
    s.eq_m("P^-1 A P = B", conj(p_inv, r.A, r.P), r.B);
    s.eq_m("P^-1 B P = C", conj(p_inv, r.B, r.P), r.C);
    s.eq_m("P^-1 C P = A", conj(p_inv, r.C, r.P), r.A);
    for (std::size_t i = 0; i < r.E_a.size(); ++i) {
        const std::string at = "[" + std::to_string(i) + "]";
        s.eq_m("P^-1 E" + at + " P = E'" + at, conj(p_inv, r.E_a[i], r.P), r.E_b[i]);
        s.eq_m("P^-1 E'" + at + " P = E''" + at, conj(p_inv, r.E_b[i], r.P), r.E_c[i]);
        s.eq_m("P^-1 E''" + at + " P = E" + at, conj(p_inv, r.E_c[i], r.P), r.E_a[i]);
    }
    s.eq_m("P^-1 W P = W'", conj(p_inv, r.W, r.P), r.Wp);
    s.eq_m("P^-1 W' P = W''", conj(p_inv, r.Wp, r.P), r.Wpp);
    s.eq_m("P^-1 W'' P = W", conj(p_inv, r.Wpp, r.P), r.W);
    s.eq_m("P = W'W", r.P, r.Wp * r.W);
    s.eq_m("P = W''W'", r.P, r.Wpp * r.Wp);
    s.eq_m("P = WW''", r.P, r.W * r.Wpp);
    const F scal = pow(s.a, -3 * s.r.params.d) *
                   pow(s.q, static_cast<std::int64_t>(s.r.params.d) * (s.r.params.d - 1));
    s.eq_m("P^3", r.P * r.P * r.P, s.id.scaled(scal));
    if (!s.failure) s.note = "P^3 scalar = " + scal.to_string();
}

int indexed_suffix(std::string_view id);

template <ExactField F>
void dispatch_check(std::string_view id, Session<F>& s) {
    if (id.starts_with("triple.cubic.")) return check_cubic(s, indexed_suffix(id));
    if (id.starts_with("trace.threea.")) return check_threea(s, indexed_suffix(id));
    if (id.starts_with("trace.alphadif.")) return check_alphadif(s, indexed_suffix(id));
    if (id.starts_with("bar.abarinv.")) return check_abarinv(s, indexed_suffix(id));
    if (id.starts_with("conj.table1.")) return check_table1(s, indexed_suffix(id));
    if (id.starts_with("conj.table2.")) return check_table2(s, indexed_suffix(id));
    if (id.starts_with("conj.lusztig.")) return check_lusztig(s, indexed_suffix(id));
    if (id.starts_with("poly.w.")) return check_poly_w(s, indexed_suffix(id));
    if (id.starts_with("qser.chu.")) return check_chu(s, indexed_suffix(id));
    if (id == "eig.distinct") return check_eig_distinct(s);
    if (id == "eig.lem1") return check_eig_lem1(s);
    if (id == "eig.lem4") return check_eig_lem4(s);
    if (id == "eig.qqth") return check_eig_qqth(s);
    if (id == "eig.eigreq") return check_eig_eigreq(s);
    if (id == "triple.zrel.a") return check_zrel(s, 'a');
    if (id == "triple.zrel.b") return check_zrel(s, 'b');
    if (id == "triple.zrel.c") return check_zrel(s, 'c');
    if (id == "triple.trid") return check_trid(s);
    if (id == "trace.abc") return check_trace_abc(s);
    if (id == "w.commute") return check_w_commute(s);
    if (id == "w.unique") return check_w_unique(s);
    if (id == "bar.membership") return check_bar_membership(s);
    if (id == "bar.altform") return check_bar_altform(s);
    if (id == "bar.trace") return check_bar_trace(s);
    if (id == "bar.closed") return check_bar_closed(s);
    if (id == "conj.wbwi") return check_wbwi(s);
    if (id == "conj.w22") return check_w22(s);
    if (id == "prod.squares") return check_prod_squares(s);
    if (id == "prod.sumcomm") return check_prod_sumcomm(s);
    if (id == "prod.cyclic") return check_prod_cyclic(s);
    if (id == "prod.commutant") return check_prod_commutant(s);
    if (id == "prod.mutual") return check_prod_mutual(s);
    if (id == "prod.scalar") return check_prod_scalar(s);
    if (id == "mod.threepart") return check_mod_threepart(s);
    if (id == "mod.cycle") return check_mod_cycle(s);
    throw error("unknown check id: " + std::string(id));
}

template <ExactField F>
CheckOutcome evaluate_check(const CheckDescriptor& cd, const TripleRealization<F>& r) {
    CheckOutcome out{std::string(cd.id), std::string(cd.paper_ref), CheckStatus::pass, ""};
    if (cd.when == Applicability::diameter_at_least_3 && r.params.d < 3) {
        out.status = CheckStatus::skipped;
        out.detail = "requires d >= 3";
        return out;
    }
    if (cd.when == Applicability::equal_abc && !(r.params.a == r.params.b && r.params.b == r.params.c)) {
        out.status = CheckStatus::skipped;
        out.detail = "requires a = b = c";
        return out;
    }
    try {
        Session<F> s(r);
        dispatch_check(cd.id, s);
        if (s.failure) {
            out.status = CheckStatus::fail;
            out.detail = *s.failure;
        } else {
            out.detail = s.note;
        }
    } catch (const error& e) {
        out.status = CheckStatus::fail;
        out.detail = std::string("error: ") + e.what();
    }
    return out;
}

} // namespace detail

/// Runs one catalog check against a realization. Unknown ids are an error;
/// mathematical failures are data, reported in the outcome.
template <ExactField F>
CheckOutcome run_check(std::string_view id, const TripleRealization<F>& r) {
    const CheckDescriptor* cd = find_check(id);
    if (!cd) throw error("unknown check id: " + std::string(id));
    return detail::evaluate_check(*cd, r);
}

/// Runs the checks whose ids match the glob (empty matches everything), in
/// catalog order, and assembles the report.
template <ExactField F>
VerificationReport run_matching(const TripleRealization<F>& r, std::string_view id_glob) {
    VerificationReport rep;
    rep.q = r.params.q.to_string();
    rep.a = r.params.a.to_string();
    rep.b = r.params.b.to_string();
    rep.c = r.params.c.to_string();
    rep.d = r.params.d;
    rep.field = field_descriptor(r.params.q);
    rep.basis = to_string(r.basis);
    for (const CheckDescriptor& cd : check_catalog()) {
        if (!id_glob.empty() && !glob_match(id_glob, cd.id)) continue;
        CheckOutcome out = detail::evaluate_check(cd, r);
        switch (out.status) {
            case CheckStatus::pass: ++rep.pass; break;
            case CheckStatus::fail: ++rep.fail; break;
            case CheckStatus::skipped: ++rep.skipped; break;
        }
        rep.checks.push_back(std::move(out));
    }
    return rep;
}

/// Runs the whole catalog in order.
template <ExactField F>
VerificationReport run_all(const TripleRealization<F>& r) {
    return run_matching(r, {});
}

} // namespace qlt
