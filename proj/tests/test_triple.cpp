#include <doctest.h>

#include "qlt/triple.hpp"
#include "testutil.hpp"

using namespace qlt;

namespace {

TripleRealization<Rat> reference(int d, BasisChoice basis = BasisChoice::first) {
    return build_triple(validate_params(Rat(2), Rat(3), Rat(5), Rat(7), d), basis);
}

} // namespace

TEST_SUITE_BEGIN("triple");

TEST_CASE("construction shapes and forced entries") {
    const auto r = reference(2);
    CHECK(classify_shape(r.A) == ShapeClass::lower_bidiagonal);
    CHECK(classify_shape(r.B) == ShapeClass::upper_bidiagonal);
    CHECK(classify_shape(r.C) == ShapeClass::irreducible_tridiagonal);
    CHECK(classify_shape(r.A + r.B + r.C) == ShapeClass::irreducible_tridiagonal);
    // subdiagonal of C is -b^-1 q^(d-2i+1)
    const Rat b_inv = Rat(5).inv();
    CHECK(r.C(1, 0) == -(b_inv * Rat(2)));
    CHECK(r.C(2, 1) == -(b_inv * make_rational(1, 2)));
    CHECK(trace(r.A) == make_rational(35, 2));
    CHECK(!commutator(r.A, r.B).is_zero());
}

TEST_CASE("diameter zero is the scalar case") {
    const auto r = reference(0);
    CHECK(r.A(0, 0) == Rat(3) + Rat(3).inv());
    CHECK(r.B(0, 0) == Rat(5) + Rat(5).inv());
    CHECK(r.C(0, 0) == Rat(7) + Rat(7).inv());
    const Matrix<Rat> id = Matrix<Rat>::identity(1, Rat(0));
    CHECK(r.W == id);
    CHECK(r.Wp == id);
    CHECK(r.Wpp == id);
    CHECK(r.A_bar == r.B - r.C);
}

TEST_CASE("defining relations hold exactly in both bases") {
    const Rat q(2);
    const Rat span = q * q - pow(q, -2);
    for (const auto basis : {BasisChoice::first, BasisChoice::second}) {
        const auto r = reference(3, basis);
        const Matrix<Rat> id = Matrix<Rat>::identity(4, Rat(0));
        CHECK(r.A + ((r.B * r.C).scaled(q) - (r.C * r.B).scaled(q.inv())).scaled(span.inv()) ==
              id.scaled(r.eig.alpha_a));
        CHECK(r.B + ((r.C * r.A).scaled(q) - (r.A * r.C).scaled(q.inv())).scaled(span.inv()) ==
              id.scaled(r.eig.alpha_b));
        CHECK(r.C + ((r.A * r.B).scaled(q) - (r.B * r.A).scaled(q.inv())).scaled(span.inv()) ==
              id.scaled(r.eig.alpha_c));
        // minimal polynomials
        auto annihilates = [&](const Matrix<Rat>& x, const std::vector<Rat>& eigs) {
            Matrix<Rat> acc = id;
            for (const Rat& t : eigs) acc = acc * (x - id.scaled(t));
            return acc.is_zero();
        };
        CHECK(annihilates(r.A, r.eig.eig_a));
        CHECK(annihilates(r.B, r.eig.eig_b));
        CHECK(annihilates(r.C, r.eig.eig_c));
    }
}

TEST_CASE("idempotent families behave as spectral projectors") {
    const auto r = reference(2);
    const Matrix<Rat> id = Matrix<Rat>::identity(3, Rat(0));
    for (const auto* fam : {&r.E_a, &r.E_b, &r.E_c}) {
        Matrix<Rat> sum = (*fam)[0];
        for (std::size_t i = 1; i < fam->size(); ++i) sum = sum + (*fam)[i];
        CHECK(sum == id);
        for (std::size_t i = 0; i < fam->size(); ++i) {
            CHECK(trace((*fam)[i]) == Rat(1));
            CHECK(rank((*fam)[i]) == 1);
            for (std::size_t j = 0; j < fam->size(); ++j) {
                const Matrix<Rat> prod = (*fam)[i] * (*fam)[j];
                if (i == j)
                    CHECK(prod == (*fam)[i]);
                else
                    CHECK(prod.is_zero());
            }
        }
    }
    // X = sum of eigenvalue-weighted idempotents, and X E_i = eig_i E_i = E_i X
    Matrix<Rat> rebuilt = r.E_a[0].scaled(r.eig.eig_a[0]);
    for (std::size_t i = 1; i < r.E_a.size(); ++i) rebuilt = rebuilt + r.E_a[i].scaled(r.eig.eig_a[i]);
    CHECK(rebuilt == r.A);
    for (std::size_t i = 0; i < r.E_a.size(); ++i) {
        CHECK(r.A * r.E_a[i] == r.E_a[i].scaled(r.eig.eig_a[i]));
        CHECK(r.E_a[i] * r.A == r.E_a[i].scaled(r.eig.eig_a[i]));
    }
}

TEST_CASE("lagrange idempotents match the tau-basis expansion") {
    const auto r = reference(3);
    const int d = 3;
    const std::vector<Rat> roots(r.eig.eig_a.begin(), r.eig.eig_a.end() - 1);
    for (int i = 0; i <= d; ++i) {
        // coefficient of tau_j in E_i: 1 / prod_{k <= j, k != i} (eig_i - eig_k), zero for j < i
        std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
        for (int j = i; j <= d; ++j) {
            Rat den(1);
            for (int k = 0; k <= j; ++k)
                if (k != i) den = den * (r.eig.eig_a[i] - r.eig.eig_a[k]);
            coeffs[j] = den.inv();
        }
        CHECK(eval_tau_polynomial(r.A, roots, coeffs) == r.E_a[i]);
    }
}

TEST_CASE("lagrange preconditions are enforced") {
    const auto r = reference(1);
    CHECK(lagrange_idempotents(Matrix<Rat>::identity(1, Rat(0)), {Rat(1)}) ==
          std::vector<Matrix<Rat>>{Matrix<Rat>::identity(1, Rat(0))});
    // wrong spectrum
    CHECK_THROWS_WITH_AS(lagrange_idempotents(r.A, std::vector<Rat>{Rat(1), Rat(2)}),
                         "not multiplicity-free with given spectrum", error);
    // duplicated eigenvalues
    CHECK_THROWS_WITH_AS(lagrange_idempotents(r.A, std::vector<Rat>{Rat(1), Rat(1)}),
                         "not multiplicity-free with given spectrum", error);
    // a nontrivial Jordan block is not multiplicity-free
    Matrix<Rat> nilpotent(2, Rat(0));
    nilpotent(0, 1) = Rat(1);
    CHECK_THROWS_WITH_AS(lagrange_idempotents(nilpotent, std::vector<Rat>{Rat(0), Rat(0)}),
                         "not multiplicity-free with given spectrum", error);
}

TEST_CASE("the W family") {
    const auto r = reference(2);
    const Matrix<Rat> id = Matrix<Rat>::identity(3, Rat(0));
    CHECK(r.W * r.W_inv == id);
    CHECK(r.Wp * r.Wp_inv == id);
    CHECK(r.Wpp * r.Wpp_inv == id);
    CHECK(r.W_sq == r.W * r.W);
    CHECK(r.W_sq_inv == r.W_inv * r.W_inv);
    CHECK(r.Wp_sq == r.Wp * r.Wp);
    CHECK(r.Wpp_sq == r.Wpp * r.Wpp);
    CHECK(inverse(r.W) == r.W_inv); // elimination agrees with the closed form
    CHECK(r.P == r.Wp * r.W);
}

TEST_CASE("tau expansions reproduce the W family") {
    for (int d : {0, 1, 2, 3}) {
        const auto r = reference(d);
        const auto p = r.params;
        const struct {
            WForm form;
            const Matrix<Rat>* want;
        } cases[] = {{WForm::w, &r.W},
                     {WForm::w_inverse, &r.W_inv},
                     {WForm::w_square, &r.W_sq},
                     {WForm::w_square_inverse, &r.W_sq_inv}};
        for (const auto& tc : cases) {
            const auto expansion = w_tau_expansion(p, tc.form);
            CHECK(expansion.coeffs.size() == static_cast<std::size_t>(d) + 1);
            if (d == 0) CHECK(expansion.coeffs[0] == Rat(1));
            CHECK(eval_tau_polynomial(r.A, expansion.roots, expansion.coeffs) == *tc.want);
        }
        // leading coefficient of the W^2 expansion is a^-d q^(d^2) / (q^2;q^2)_d
        const auto wsq = w_tau_expansion(p, WForm::w_square);
        const Rat q(2), a(3);
        CHECK(wsq.coeffs.back() ==
              pow(a, -d) * pow(q, d * d) / q_pochhammer(q * q, q * q, d));
    }
}

TEST_CASE("bar elements") {
    const auto r = reference(2);
    CHECK(!r.A_bar.is_zero());
    CHECK(commutator(r.A_bar, r.A).is_zero());
    CHECK(trace(r.A_bar) == trace(r.B) - trace(r.C));

    // mutually similar parameters collapse every bar to zero
    const auto modular = build_triple(validate_params(Rat(2), Rat(3), Rat(3), Rat(3), 2), BasisChoice::first);
    CHECK(modular.A_bar.is_zero());
    CHECK(modular.B_bar.is_zero());
    CHECK(modular.C_bar.is_zero());

    // b ~ c kills only the A bar
    const auto similar_bc =
        build_triple(validate_params(Rat(2), Rat(3), Rat(5), make_rational(1, 5), 2), BasisChoice::first);
    CHECK(similar_bc.A_bar.is_zero());
    CHECK(!similar_bc.B_bar.is_zero());
}

TEST_CASE("closed forms of the A bar") {
    // generic case
    const auto r = reference(2);
    CHECK(bar_closed_form(r.params, r) == r.A_bar);
    CHECK(bar_tau_form(r.params, r) == r.A_bar);

    // a = q^(d+1): q = 2, d = 1, a = 4
    const auto top = build_triple(validate_params(Rat(2), Rat(4), Rat(3), Rat(5), 1), BasisChoice::first);
    const Rat scalar = (Rat(3) - Rat(5)) * (Rat(3) - Rat(5).inv()) * Rat(3).inv() * q_bracket(2, Rat(2));
    CHECK(top.A_bar == top.E_a.front().scaled(scalar));
    CHECK(bar_closed_form(top.params, top) == top.A_bar);
    CHECK(bar_tau_form(top.params, top) == top.A_bar);

    // a = q^(-d-1): invert a in the same tuple
    const auto bottom = build_triple(invert_huang_data(top.params, {.a = true}), BasisChoice::first);
    CHECK(bottom.A_bar == bottom.E_a.back().scaled(scalar));
    CHECK(bar_closed_form(bottom.params, bottom) == bottom.A_bar);
    CHECK(bar_tau_form(bottom.params, bottom) == bottom.A_bar);
}

TEST_CASE("commutant solutions are pinned up to one scalar") {
    const auto r = reference(2);
    const auto sol = solve_commutant_w(r);
    REQUIRE(sol.t.size() == 3);
    CHECK(sol.eps == Rat(1));
    const Rat q(2), a(3);
    for (int i = 0; i <= 2; ++i) {
        const Rat sign(i % 2 == 0 ? 1 : -1);
        CHECK(sol.t[i] == sign * pow(a, -i) * pow(q, i * (2 - i)));
    }
    // any perturbed coefficient violates an adjacency constraint
    const Rat span = q * q - pow(q, -2);
    std::vector<Rat> t = sol.t;
    t[1] = t[1] + Rat(1);
    bool violated = false;
    for (int i = 1; i <= 2; ++i) {
        if (!(t[i] / t[i - 1] + (q * r.eig.eig_a[i - 1] - q.inv() * r.eig.eig_a[i]) / span).is_zero())
            violated = true;
    }
    CHECK(violated);

    const auto scalar_case = solve_commutant_w(reference(0));
    CHECK(scalar_case.t == std::vector<Rat>{Rat(1)});
}

TEST_CASE("realizations work over prime fields") {
    const Field f = Field::prime(1000003);
    const auto p = sample_params(f, 6, 3);
    const auto r = build_triple(p, BasisChoice::second);
    const Matrix<Fp> id = Matrix<Fp>::identity(7, p.q.make(0));
    CHECK(r.W * r.W_inv == id);
    CHECK(classify_shape(r.C) == ShapeClass::irreducible_tridiagonal);
    CHECK(trace(r.A) == (p.a + p.a.inv()) * q_bracket(7, p.q));
}

TEST_SUITE_END();
