#include <doctest.h>

#include "qlt/matrix.hpp"
#include "testutil.hpp"

using namespace qlt;
using qlt::testing::SplitMix;

namespace {

Matrix<Rat> random_matrix(SplitMix& rng, int n) {
    Matrix<Rat> m(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = testing::random_rat(rng);
    return m;
}

Matrix<Fp> random_matrix_fp(SplitMix& rng, int n, std::uint64_t p) {
    Matrix<Fp> m(n, Fp(0, p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = testing::random_fp(rng, p);
    return m;
}

} // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("products against hand arithmetic") {
    Matrix<Rat> x(2, Rat(0)), y(2, Rat(0));
    x(0, 0) = Rat(1);
    x(0, 1) = Rat(2);
    x(1, 0) = Rat(3);
    x(1, 1) = Rat(4);
    y(0, 0) = Rat(5);
    y(0, 1) = Rat(6);
    y(1, 0) = Rat(7);
    y(1, 1) = Rat(8);
    const Matrix<Rat> z = x * y;
    CHECK(z(0, 0) == Rat(19));
    CHECK(z(0, 1) == Rat(22));
    CHECK(z(1, 0) == Rat(43));
    CHECK(z(1, 1) == Rat(50));
}

TEST_CASE("identity is neutral and order mismatches are rejected") {
    SplitMix rng{11};
    const Matrix<Rat> x = random_matrix(rng, 4);
    const Matrix<Rat> id = Matrix<Rat>::identity(4, Rat(0));
    CHECK(x * id == x);
    CHECK(id * x == x);
    CHECK(commutator(x, x).is_zero());
    CHECK(commutator(x, id).is_zero());
    CHECK_THROWS_AS(x * Matrix<Rat>::identity(3, Rat(0)), error);
    CHECK_THROWS_AS(x + Matrix<Rat>::identity(5, Rat(0)), error);
}

TEST_CASE("trace basics") {
    const Matrix<Rat> id = Matrix<Rat>::identity(5, Rat(0));
    CHECK(trace(id) == Rat(5));
}

TEST_CASE("associativity and trace cyclicity on random triples") {
    SplitMix rng{12};
    for (int round = 0; round < 25; ++round) {
        const int n = 1 + static_cast<int>(rng.next() % 5);
        const Matrix<Rat> x = random_matrix(rng, n), y = random_matrix(rng, n), z = random_matrix(rng, n);
        CHECK((x * y) * z == x * (y * z));
        CHECK(trace(x * y) == trace(y * x));
    }
    const std::uint64_t p = 1000003;
    for (int round = 0; round < 25; ++round) {
        const int n = 1 + static_cast<int>(rng.next() % 5);
        const auto x = random_matrix_fp(rng, n, p), y = random_matrix_fp(rng, n, p),
                   z = random_matrix_fp(rng, n, p);
        CHECK((x * y) * z == x * (y * z));
        CHECK(trace(x * y) == trace(y * x));
    }
}

TEST_CASE("exact inverse") {
    const Matrix<Rat> id = Matrix<Rat>::identity(3, Rat(0));
    CHECK(inverse(id) == id);
    SplitMix rng{13};
    int verified = 0;
    while (verified < 20) {
        const Matrix<Rat> x = random_matrix(rng, 4);
        try {
            const Matrix<Rat> xi = inverse(x);
            CHECK(x * xi == Matrix<Rat>::identity(4, Rat(0)));
            CHECK(inverse(xi) == x);
            ++verified;
        } catch (const error&) {
            // singular draw, try again
        }
    }
    Matrix<Rat> singular(3, Rat(0));
    singular(0, 0) = Rat(1);
    singular(0, 1) = Rat(2);
    singular(2, 2) = Rat(3); // middle row is zero
    CHECK_THROWS_WITH_AS(inverse(singular), "singular", error);
}

TEST_CASE("rank by exact elimination") {
    CHECK(rank(Matrix<Rat>::identity(4, Rat(0))) == 4);
    Matrix<Rat> m(3, Rat(0));
    for (int j = 0; j < 3; ++j) {
        m(0, j) = Rat(j + 1);
        m(1, j) = Rat(2 * (j + 1)); // twice row 0
        m(2, j) = Rat(7 * (j + 1)); // seven times row 0
    }
    CHECK(rank(m) == 1);
    m(2, 2) = Rat(100);
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix<Rat>::zero(3, Rat(0))) == 0);
}

TEST_CASE("shape classification picks the most specific class") {
    const Rat zero(0), one(1);
    CHECK(classify_shape(Matrix<Rat>::identity(4, zero)) == ShapeClass::diagonal);
    CHECK(classify_shape(Matrix<Rat>::identity(1, zero)) == ShapeClass::diagonal);

    Matrix<Rat> lower = Matrix<Rat>::identity(3, zero);
    lower(1, 0) = one;
    CHECK(classify_shape(lower) == ShapeClass::lower_bidiagonal);

    Matrix<Rat> upper = Matrix<Rat>::identity(3, zero);
    upper(0, 1) = one;
    upper(1, 2) = one;
    CHECK(classify_shape(upper) == ShapeClass::upper_bidiagonal);

    Matrix<Rat> tri = Matrix<Rat>::identity(3, zero);
    tri(1, 0) = one;
    tri(0, 1) = one;
    tri(1, 2) = one;
    CHECK(classify_shape(tri) == ShapeClass::tridiagonal); // (2,1) entry is zero

    tri(2, 1) = one;
    CHECK(classify_shape(tri) == ShapeClass::irreducible_tridiagonal);

    Matrix<Rat> full(3, one);
    CHECK(classify_shape(full) == ShapeClass::general);
}

TEST_CASE("tau polynomial evaluation") {
    SplitMix rng{14};
    const Matrix<Rat> x = random_matrix(rng, 3);
    const Matrix<Rat> id = Matrix<Rat>::identity(3, Rat(0));
    CHECK(eval_tau_polynomial(x, {}, {Rat(1)}) == id);
    const Rat r = make_rational(5, 3), c0 = Rat(2), c1 = make_rational(-1, 2);
    CHECK(eval_tau_polynomial(x, {r}, {c0, c1}) == id.scaled(c0) + (x - id.scaled(r)).scaled(c1));
    CHECK_THROWS_AS(eval_tau_polynomial(x, {r}, {c0, c1, c0}), error);
}

TEST_CASE("matrix-vector product and span solving") {
    SplitMix rng{15};
    const Matrix<Rat> x = random_matrix(rng, 3);
    const std::vector<Rat> e1{Rat(0), Rat(1), Rat(0)};
    const std::vector<Rat> col = x * e1;
    for (int i = 0; i < 3; ++i) CHECK(col[i] == x(i, 1));

    const Matrix<Rat> id = Matrix<Rat>::identity(3, Rat(0));
    const Matrix<Rat> target = id.scaled(Rat(3)) + x.scaled(make_rational(-2, 7));
    const auto sol = solve_in_span<Rat>({id, x}, target);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(3));
    CHECK((*sol)[1] == make_rational(-2, 7));

    Matrix<Rat> off(3, Rat(0));
    off(0, 1) = Rat(1); // not a polynomial in the identity alone
    CHECK_FALSE(solve_in_span<Rat>({id}, off).has_value());
}

TEST_SUITE_END();
