#include "qlt/verify.hpp"

#include <charconv>
#include <unordered_map>

namespace qlt {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

CheckStatus check_status_from_string(std::string_view s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw error("unknown check status: " + std::string(s));
}

namespace detail {

int indexed_suffix(std::string_view id) {
    const auto pos = id.rfind('.');
    int k = 0;
    const char* first = id.data() + pos + 1;
    const char* last = id.data() + id.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last) throw error("unknown check id: " + std::string(id));
    return k;
}

} // namespace detail

const std::vector<CheckDescriptor>& check_catalog() {
    static const std::vector<CheckDescriptor> catalog = {
        {"eig.distinct", "each of the three eigenvalue sequences consists of mutually distinct values"},
        {"eig.lem1", "eig_i - eig_j = (1 - q^(2j-2i))(x q^(2i-d) - x^-1 q^(d-2j)) for each parameter x"},
        {"eig.lem4", "(q eig_i - q^-1 eig_j)(q eig_j - q^-1 eig_i) = (q^2 - q^-2)^2 for |i-j| = 1"},
        {"eig.qqth", "eig_i - q - q^-1 = (x - q^(d-2i+1))(x - q^(d-2i-1)) q^(2i-d) x^-1"},
        {"eig.eigreq",
         "(eig_{i-2} - eig_{i+1})/(eig_{i-1} - eig_i) is constant in i and equal across the three sequences",
         Applicability::diameter_at_least_3},
        {"triple.zrel.a", "A + (q BC - q^-1 CB)/(q^2 - q^-2) = alpha_a I"},
        {"triple.zrel.b", "B + (q CA - q^-1 AC)/(q^2 - q^-2) = alpha_b I"},
        {"triple.zrel.c", "C + (q AB - q^-1 BA)/(q^2 - q^-2) = alpha_c I"},
        {"triple.cubic.1",
         "A^2 B - (q^2+q^-2) ABA + B A^2 + (q^2-q^-2)^2 B = alpha_b (q^2-q^-2)^2 I - alpha_c (q-q^-1)(q^2-q^-2) A"},
        {"triple.cubic.2",
         "B^2 C - (q^2+q^-2) BCB + C B^2 + (q^2-q^-2)^2 C = alpha_c (q^2-q^-2)^2 I - alpha_a (q-q^-1)(q^2-q^-2) B"},
        {"triple.cubic.3",
         "C^2 A - (q^2+q^-2) CAC + A C^2 + (q^2-q^-2)^2 A = alpha_a (q^2-q^-2)^2 I - alpha_b (q-q^-1)(q^2-q^-2) C"},
        {"triple.cubic.4",
         "A^2 C - (q^2+q^-2) ACA + C A^2 + (q^2-q^-2)^2 C = alpha_c (q^2-q^-2)^2 I - alpha_b (q-q^-1)(q^2-q^-2) A"},
        {"triple.cubic.5",
         "B^2 A - (q^2+q^-2) BAB + A B^2 + (q^2-q^-2)^2 A = alpha_a (q^2-q^-2)^2 I - alpha_c (q-q^-1)(q^2-q^-2) B"},
        {"triple.cubic.6",
         "C^2 B - (q^2+q^-2) CBC + B C^2 + (q^2-q^-2)^2 B = alpha_b (q^2-q^-2)^2 I - alpha_a (q-q^-1)(q^2-q^-2) C"},
        {"triple.trid",
         "E_i X E_j vanishes for |i-j| > 1 and is nonzero for |i-j| = 1, over all six idempotent/operator pairings"},
        {"trace.abc", "tr(A) = (a + a^-1)[d+1]_q, tr(B) = (b + b^-1)[d+1]_q, tr(C) = (c + c^-1)[d+1]_q"},
        {"trace.threea.1",
         "(tr(B E_i)(q + q^-1 + eig_i)/(q + q^-1) - alpha_c)(1 - eig_i/(q + q^-1)) = alpha_b - alpha_c"},
        {"trace.threea.2",
         "(tr(C E'_i)(q + q^-1 + eig'_i)/(q + q^-1) - alpha_a)(1 - eig'_i/(q + q^-1)) = alpha_c - alpha_a"},
        {"trace.threea.3",
         "(tr(A E''_i)(q + q^-1 + eig''_i)/(q + q^-1) - alpha_b)(1 - eig''_i/(q + q^-1)) = alpha_a - alpha_b"},
        {"trace.threea.4",
         "(tr(C E_i)(q + q^-1 + eig_i)/(q + q^-1) - alpha_b)(1 - eig_i/(q + q^-1)) = alpha_c - alpha_b"},
        {"trace.threea.5",
         "(tr(A E'_i)(q + q^-1 + eig'_i)/(q + q^-1) - alpha_c)(1 - eig'_i/(q + q^-1)) = alpha_a - alpha_c"},
        {"trace.threea.6",
         "(tr(B E''_i)(q + q^-1 + eig''_i)/(q + q^-1) - alpha_a)(1 - eig''_i/(q + q^-1)) = alpha_b - alpha_a"},
        {"trace.alphadif.1", "alpha_a - alpha_b = (b-a)(b-a^-1)(c-q^(d+1))(c-q^(-d-1)) b^-1 c^-1 / (q+q^-1)"},
        {"trace.alphadif.2", "alpha_b - alpha_c = (c-b)(c-b^-1)(a-q^(d+1))(a-q^(-d-1)) c^-1 a^-1 / (q+q^-1)"},
        {"trace.alphadif.3", "alpha_c - alpha_a = (a-c)(a-c^-1)(b-q^(d+1))(b-q^(-d-1)) a^-1 b^-1 / (q+q^-1)"},
        {"w.commute",
         "A commutes with W and W^-1 B W - C; B with W' and W'^-1 C W' - A; C with W'' and W''^-1 A W'' - B"},
        {"w.unique", "the intertwining constraints pin the commutant solution up to one scalar: t_i = "
                     "eps (-1)^i a^-i q^(i(d-i))"},
        {"bar.membership",
         "each bar element commutes with its operator and equals sum_i E_i X E_i over that operator's idempotents"},
        {"bar.altform", "Abar = B - W C W^-1, Bbar = C - W' A W'^-1, Cbar = A - W'' B W''^-1"},
        {"bar.trace", "tr(Abar) = tr(B) - tr(C) = (b-c)(b-c^-1) b^-1 [d+1]_q, and the cyclic analogues"},
        {"bar.abarinv.1", "Abar (I - A/(q+q^-1)) = (alpha_b - alpha_c) I = (I - A/(q+q^-1)) Abar"},
        {"bar.abarinv.2", "Bbar (I - B/(q+q^-1)) = (alpha_c - alpha_a) I = (I - B/(q+q^-1)) Bbar"},
        {"bar.abarinv.3", "Cbar (I - C/(q+q^-1)) = (alpha_a - alpha_b) I = (I - C/(q+q^-1)) Cbar"},
        {"bar.closed", "the case-split closed form of Abar and its tau-basis expansion both equal W^-1 B W - C"},
        {"conj.table1.1", "W^-1 A W = A"},
        {"conj.table1.2", "W^-1 B W = C + Abar"},
        {"conj.table1.3", "W^-1 C W = B + [C,A]/(q-q^-1) - Abar"},
        {"conj.table1.4", "W A W^-1 = A"},
        {"conj.table1.5", "W B W^-1 = C + [A,B]/(q-q^-1) + Abar"},
        {"conj.table1.6", "W C W^-1 = B - Abar"},
        {"conj.table1.7", "W'^-1 A W' = C + [A,B]/(q-q^-1) - Bbar"},
        {"conj.table1.8", "W'^-1 B W' = B"},
        {"conj.table1.9", "W'^-1 C W' = A + Bbar"},
        {"conj.table1.10", "W' A W'^-1 = C - Bbar"},
        {"conj.table1.11", "W' B W'^-1 = B"},
        {"conj.table1.12", "W' C W'^-1 = A + [B,C]/(q-q^-1) + Bbar"},
        {"conj.table1.13", "W''^-1 A W'' = B + Cbar"},
        {"conj.table1.14", "W''^-1 B W'' = A + [B,C]/(q-q^-1) - Cbar"},
        {"conj.table1.15", "W''^-1 C W'' = C"},
        {"conj.table1.16", "W'' A W''^-1 = B + [C,A]/(q-q^-1) + Cbar"},
        {"conj.table1.17", "W'' B W''^-1 = A - Cbar"},
        {"conj.table1.18", "W'' C W''^-1 = C"},
        {"conj.wbwi", "W B W^-1 - W^-1 B W = [A,B]/(q-q^-1) and W C W^-1 - W^-1 C W = [A,C]/(q-q^-1)"},
        {"conj.w22", "W^2 X W^-2 + W^-2 X W^2 = 2X + [A,[A,X]]/(q-q^-1)^2 for X = B and X = C"},
        {"conj.table2.1", "W^-2 A W^2 = A"},
        {"conj.table2.2", "W^-2 B W^2 = B + [C,A]/(q-q^-1)"},
        {"conj.table2.3", "W^-2 C W^2 = C - [A,B]/(q-q^-1) + [A,[A,C]]/(q-q^-1)^2"},
        {"conj.table2.4", "W^2 A W^-2 = A"},
        {"conj.table2.5", "W^2 B W^-2 = B - [C,A]/(q-q^-1) + [A,[A,B]]/(q-q^-1)^2"},
        {"conj.table2.6", "W^2 C W^-2 = C + [A,B]/(q-q^-1)"},
        {"conj.table2.7", "W'^-2 A W'^2 = A - [B,C]/(q-q^-1) + [B,[B,A]]/(q-q^-1)^2"},
        {"conj.table2.8", "W'^-2 B W'^2 = B"},
        {"conj.table2.9", "W'^-2 C W'^2 = C + [A,B]/(q-q^-1)"},
        {"conj.table2.10", "W'^2 A W'^-2 = A + [B,C]/(q-q^-1)"},
        {"conj.table2.11", "W'^2 B W'^-2 = B"},
        {"conj.table2.12", "W'^2 C W'^-2 = C - [A,B]/(q-q^-1) + [B,[B,C]]/(q-q^-1)^2"},
        {"conj.table2.13", "W''^-2 A W''^2 = A + [B,C]/(q-q^-1)"},
        {"conj.table2.14", "W''^-2 B W''^2 = B - [C,A]/(q-q^-1) + [C,[C,B]]/(q-q^-1)^2"},
        {"conj.table2.15", "W''^-2 C W''^2 = C"},
        {"conj.table2.16", "W''^2 A W''^-2 = A - [B,C]/(q-q^-1) + [C,[C,A]]/(q-q^-1)^2"},
        {"conj.table2.17", "W''^2 B W''^-2 = B + [C,A]/(q-q^-1)"},
        {"conj.table2.18", "W''^2 C W''^-2 = C"},
        {"conj.lusztig.1", "W^-2 B W^2 = B + (q A^2 B - (q+q^-1) ABA + q^-1 B A^2)/((q-q^-1)(q^2-q^-2))"},
        {"conj.lusztig.2", "W^2 B W^-2 = B + (q^-1 A^2 B - (q+q^-1) ABA + q B A^2)/((q-q^-1)(q^2-q^-2))"},
        {"conj.lusztig.3", "W^-2 C W^2 = C + (q A^2 C - (q+q^-1) ACA + q^-1 C A^2)/((q-q^-1)(q^2-q^-2))"},
        {"conj.lusztig.4", "W^2 C W^-2 = C + (q^-1 A^2 C - (q+q^-1) ACA + q C A^2)/((q-q^-1)(q^2-q^-2))"},
        {"poly.w.1", "the tau-basis expansion of W evaluated at A equals the idempotent-sum form"},
        {"poly.w.2", "the tau-basis expansion of W^-1 evaluated at A equals the idempotent-sum form"},
        {"poly.w.3", "the tau-basis expansion of W^2 evaluated at A equals the idempotent-sum form"},
        {"poly.w.4", "the tau-basis expansion of W^-2 evaluated at A equals the idempotent-sum form"},
        {"qser.chu.1", "(-1)^j a^j q^(j(j-d)) equals the terminating 2phi1 with bottom a q^(1-d) at base q^2, "
                       "for 0 <= j <= d, plus the (a,q) -> (a^-1,q^-1) variant"},
        {"qser.chu.2", "a^(2j) q^(2j(j-d)) equals the terminating 2phi1 with bottom 0 at base q^2, "
                       "for 0 <= j <= d, plus the (a,q) -> (a^-1,q^-1) variant"},
        {"prod.squares", "W''^2 W'^2 W^2 = (abc)^-d q^(d(d-1)) I"},
        {"prod.sumcomm", "each of W'W, W''W', WW'' commutes with A + B + C"},
        {"prod.cyclic", "the Krylov matrix [v, Xv, ..., X^d v] with X = A+B+C and v = e_0 has full rank"},
        {"prod.commutant", "each of W'W, W''W', WW'' is a polynomial of degree at most d in A + B + C"},
        {"prod.mutual", "W'W, W''W', WW'' mutually commute"},
        {"prod.scalar", "(W'W)(W''W')(WW'') = (abc)^-d q^(d(d-1)) I"},
        {"mod.threepart", "Abar = 0 iff b ~ c, Bbar = 0 iff c ~ a, Cbar = 0 iff a ~ b, with x ~ y meaning "
                          "x = y or xy = 1"},
        {"mod.cycle", "with a = b = c: P = W'W = W''W' = WW'' conjugates A -> B -> C -> A and the idempotent "
                      "and W families cyclically, and P^3 = a^(-3d) q^(d(d-1)) I",
         Applicability::equal_abc},
    };
    return catalog;
}

const CheckDescriptor* find_check(std::string_view id) {
    static const std::unordered_map<std::string_view, const CheckDescriptor*> index = [] {
        std::unordered_map<std::string_view, const CheckDescriptor*> m;
        for (const auto& cd : check_catalog()) m.emplace(cd.id, &cd);
        return m;
    }();
    const auto it = index.find(id);
    return it == index.end() ? nullptr : it->second;
}

bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace qlt
