#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlt/errors.hpp"
#include "qlt/field.hpp"

namespace qlt {

/// A validated parameter tuple (q, a, b, c, d). Instances are produced by
/// validate_params and therefore satisfy: q, a, b, c nonzero; q^4 != 1;
/// q^(2i) != 1 for 1 <= i <= d; none of a^2, b^2, c^2 among
/// q^(2d-2), q^(2d-4), ..., q^(2-2d); none of abc, a^-1 bc, a b^-1 c,
/// a b c^-1 among q^(d-1), q^(d-3), ..., q^(1-d).
template <ExactField F>
struct QRacahParams {
    F q, a, b, c;
    int d = 0;

    bool operator==(const QRacahParams&) const = default;
};

/// Scalar data derived from a validated tuple: the three eigenvalue
/// sequences (for the triple members built from a, b, c respectively), the
/// alpha constants of the cyclic relations, and the two split sequences that
/// fill the superdiagonal in the two standard bases.
template <ExactField F>
struct EigenData {
    std::vector<F> eig_a, eig_b, eig_c;       // size d+1, mutually distinct per family
    F alpha_a, alpha_b, alpha_c;
    std::vector<F> split_first, split_second; // size d; slot [i-1] holds index i, all nonzero
};

/// Validates (q,a,b,c,d) against the full assumption. On rejection throws
/// assumption_error carrying the violated clause and witness exponent.
template <ExactField F>
QRacahParams<F> validate_params(const F& q, const F& a, const F& b, const F& c, int d) {
    if (d < 0) throw error("diameter must be nonnegative");
    if (q.is_zero() || a.is_zero() || b.is_zero() || c.is_zero())
        throw error("parameters q, a, b, c must be nonzero");
    const F one = q.make(1);
    if (pow(q, 4) == one)
        throw assumption_error(assumption_clause::q_fourth_root, 4, "assumption violated: q^4 = 1");
    for (int i = 1; i <= d; ++i) {
        if (pow(q, 2 * i) == one)
            throw assumption_error(assumption_clause::clause_i, 2 * i,
                                   "assumption violated: clause (i): q^(" + std::to_string(2 * i) + ") = 1");
    }
    const struct {
        const F* x;
        const char* name;
    } squares[] = {{&a, "a"}, {&b, "b"}, {&c, "c"}};
    for (int e = 2 * d - 2; e >= 2 - 2 * d; e -= 2) {
        const F qe = pow(q, e);
        for (const auto& s : squares) {
            if (*s.x * *s.x == qe)
                throw assumption_error(assumption_clause::clause_ii, e,
                                       std::string("assumption violated: clause (ii): ") + s.name + "^2 = q^(" +
                                           std::to_string(e) + ")");
        }
    }
    const struct {
        F value;
        const char* name;
    } products[] = {{a * b * c, "a b c"},
                    {a.inv() * b * c, "a^-1 b c"},
                    {a * b.inv() * c, "a b^-1 c"},
                    {a * b * c.inv(), "a b c^-1"}};
    for (int e = d - 1; e >= 1 - d; e -= 2) {
        const F qe = pow(q, e);
        for (const auto& s : products) {
            if (s.value == qe)
                throw assumption_error(assumption_clause::clause_iii, e,
                                       std::string("assumption violated: clause (iii): ") + s.name + " = q^(" +
                                           std::to_string(e) + ")");
        }
    }
    return QRacahParams<F>{q, a, b, c, d};
}

/// The balanced q-integer [n]_q = (q^n - q^-n) / (q - q^-1).
template <ExactField F>
F q_bracket(std::int64_t n, const F& q) {
    if (q * q == q.make(1)) throw error("q-bracket undefined: q^2 = 1");
    return (pow(q, n) - pow(q, -n)) / (q - q.inv());
}

/// The shifted factorial (x;t)_n = (1-x)(1-xt)...(1-x t^(n-1)), with
/// (x;t)_0 = 1. A zero x gives 1 for every n.
template <ExactField F>
F q_pochhammer(const F& x, const F& t, std::int64_t n) {
    if (n < 0) throw error("q-pochhammer length must be nonnegative");
    const F one = t.make(1);
    F acc = one;
    F xt = x;
    for (std::int64_t k = 0; k < n; ++k) {
        acc = acc * (one - xt);
        xt = xt * t;
    }
    return acc;
}

namespace detail {

template <ExactField F>
std::vector<F> eigenvalue_sequence(const F& x, const F& q, int d) {
    std::vector<F> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) out.push_back(x * pow(q, 2 * i - d) + x.inv() * pow(q, d - 2 * i));
    return out;
}

} // namespace detail

/// Computes all derived scalars and re-asserts their structural invariants:
/// each eigenvalue sequence is mutually distinct and the split sequences are
/// nonvanishing (both facts are consequences of validation).
template <ExactField F>
EigenData<F> eigen_data(const QRacahParams<F>& p) {
    const F &q = p.q, &a = p.a, &b = p.b, &c = p.c;
    const int d = p.d;
    EigenData<F> e;
    e.eig_a = detail::eigenvalue_sequence(a, q, d);
    e.eig_b = detail::eigenvalue_sequence(b, q, d);
    e.eig_c = detail::eigenvalue_sequence(c, q, d);
    const F qd1 = pow(q, d + 1) + pow(q, -(d + 1));
    const F denom = q + q.inv();
    e.alpha_a = ((a + a.inv()) * qd1 + (b + b.inv()) * (c + c.inv())) / denom;
    e.alpha_b = ((b + b.inv()) * qd1 + (c + c.inv()) * (a + a.inv())) / denom;
    e.alpha_c = ((c + c.inv()) * qd1 + (a + a.inv()) * (b + b.inv())) / denom;
    e.split_first.reserve(static_cast<std::size_t>(d));
    e.split_second.reserve(static_cast<std::size_t>(d));
    const F abc = a * b * c;
    const F abci = a * b * c.inv();
    const F aibc = a.inv() * b * c;
    const F aibci = a.inv() * b * c.inv();
    for (int i = 1; i <= d; ++i) {
        const F common = (pow(q, i) - pow(q, -i)) * (pow(q, i - d - 1) - pow(q, d - i + 1));
        const F qmi = pow(q, -i);
        const F qi = pow(q, i - d - 1);
        e.split_first.push_back(a.inv() * b.inv() * pow(q, d + 1) * common * (qmi - abc * qi) * (qmi - abci * qi));
        e.split_second.push_back(a * b.inv() * pow(q, d + 1) * common * (qmi - aibc * qi) * (qmi - aibci * qi));
    }
    for (const auto* seq : {&e.eig_a, &e.eig_b, &e.eig_c}) {
        for (std::size_t i = 0; i < seq->size(); ++i)
            for (std::size_t j = i + 1; j < seq->size(); ++j)
                if ((*seq)[i] == (*seq)[j]) throw error("derived eigenvalues are not distinct");
    }
    for (const auto* seq : {&e.split_first, &e.split_second})
        for (const F& x : *seq)
            if (x.is_zero()) throw error("derived split sequence vanishes");
    return e;
}

/// Terminating basic hypergeometric sum
///   sum_{k=0}^{j} (top1;base)_k (top2;base)_k / ((base;base)_k (bottom;base)_k) argument^k.
/// Requires top1 = base^(-j) so that the series terminates at k = j; a zero
/// bottom parameter is allowed and contributes (0;base)_k = 1.
template <ExactField F>
F phi21_terminating(const F& top1, const F& top2, const F& bottom, const F& base, const F& argument,
                    std::int64_t termination_index) {
    if (termination_index < 0) throw error("termination index must be nonnegative");
    if (!(top1 == pow(base, -termination_index))) throw error("series does not terminate at the given index");
    const F one = base.make(1);
    F sum = one;
    F num = one, den = one, arg_pow = one;
    F t1 = top1, t2 = top2, tb = base, tbot = bottom;
    for (std::int64_t k = 1; k <= termination_index; ++k) {
        // extend each pochhammer by its k-th factor
        num = num * (one - t1) * (one - t2);
        den = den * (one - tb) * (one - tbot);
        if (den.is_zero()) throw error("series undefined");
        arg_pow = arg_pow * argument;
        sum = sum + num / den * arg_pow;
        t1 = t1 * base;
        t2 = t2 * base;
        tb = tb * base;
        tbot = tbot * base;
    }
    return sum;
}

/// Which of a, b, c to replace by its inverse.
struct HuangFlips {
    bool a = false, b = false, c = false;
};

/// Replaces each flipped parameter by its inverse and re-validates. The
/// assumption is invariant under inversion, so the result always validates.
template <ExactField F>
QRacahParams<F> invert_huang_data(const QRacahParams<F>& p, HuangFlips flips) {
    return validate_params(p.q, flips.a ? p.a.inv() : p.a, flips.b ? p.b.inv() : p.b,
                           flips.c ? p.c.inv() : p.c, p.d);
}

/// x ~ y whenever x = y or xy = 1.
template <ExactField F>
bool is_similar(const F& x, const F& y) {
    return x == y || x * y == x.make(1);
}

/// Rejection-samples a uniform nonzero tuple (q,a,b,c) over the given prime
/// field until validation accepts, deterministically in (p, d, seed). The
/// pseudorandom stream is SplitMix64; see the README for the exact seeding.
/// Throws "sampling exhausted" after 10000 rejected rounds, which signals
/// that p is too small for the assumption to be satisfiable.
QRacahParams<Fp> sample_params(const Field& field, int d, std::uint64_t seed);

} // namespace qlt
