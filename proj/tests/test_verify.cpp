#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qlt/verify.hpp"

using namespace qlt;

namespace {

TripleRealization<Rat> reference(int d, BasisChoice basis = BasisChoice::first) {
    return build_triple(validate_params(Rat(2), Rat(3), Rat(5), Rat(7), d), basis);
}

std::vector<std::string> expected_ids() {
    std::vector<std::string> ids = {"eig.distinct", "eig.lem1", "eig.lem4", "eig.qqth", "eig.eigreq",
                                    "triple.zrel.a", "triple.zrel.b", "triple.zrel.c"};
    for (int k = 1; k <= 6; ++k) ids.push_back("triple.cubic." + std::to_string(k));
    ids.push_back("triple.trid");
    ids.push_back("trace.abc");
    for (int k = 1; k <= 6; ++k) ids.push_back("trace.threea." + std::to_string(k));
    for (int k = 1; k <= 3; ++k) ids.push_back("trace.alphadif." + std::to_string(k));
    ids.insert(ids.end(), {"w.commute", "w.unique", "bar.membership", "bar.altform", "bar.trace"});
    for (int k = 1; k <= 3; ++k) ids.push_back("bar.abarinv." + std::to_string(k));
    ids.push_back("bar.closed");
    for (int k = 1; k <= 18; ++k) ids.push_back("conj.table1." + std::to_string(k));
    ids.insert(ids.end(), {"conj.wbwi", "conj.w22"});
    for (int k = 1; k <= 18; ++k) ids.push_back("conj.table2." + std::to_string(k));
    for (int k = 1; k <= 4; ++k) ids.push_back("conj.lusztig." + std::to_string(k));
    for (int k = 1; k <= 4; ++k) ids.push_back("poly.w." + std::to_string(k));
    ids.insert(ids.end(), {"qser.chu.1", "qser.chu.2"});
    ids.insert(ids.end(),
               {"prod.squares", "prod.sumcomm", "prod.cyclic", "prod.commutant", "prod.mutual", "prod.scalar"});
    ids.insert(ids.end(), {"mod.threepart", "mod.cycle"});
    return ids;
}

} // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("the catalog is fixed, unique, and complete") {
    const auto& catalog = check_catalog();
    CHECK(catalog.size() >= 40);
    std::set<std::string_view> seen;
    for (const auto& cd : catalog) {
        CHECK(seen.insert(cd.id).second);
        CHECK(!cd.paper_ref.empty());
    }
    const auto want = expected_ids();
    REQUIRE(catalog.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(catalog[i].id == want[i]);
    CHECK(find_check("prod.scalar") != nullptr);
    CHECK(find_check("no.such.check") == nullptr);
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("prod.*", "prod.scalar"));
    CHECK_FALSE(glob_match("prod.*", "mod.cycle"));
    CHECK(glob_match("conj.table?.3", "conj.table1.3"));
    CHECK(glob_match("conj.table?.3", "conj.table2.3"));
    CHECK_FALSE(glob_match("conj.table?.3", "conj.table2.13"));
    CHECK(glob_match("eig.distinct", "eig.distinct"));
}

TEST_CASE("single checks report frozen scalars") {
    const auto r = reference(2);
    const auto scalar = run_check("prod.scalar", r);
    CHECK(scalar.status == CheckStatus::pass);
    CHECK(scalar.detail == "scalar = 4/11025");
    const auto squares = run_check("prod.squares", r);
    CHECK(squares.status == CheckStatus::pass);
    CHECK(squares.detail == "scalar = 4/11025");
    CHECK(run_check("triple.zrel.a", r).status == CheckStatus::pass);
    CHECK(run_check("mod.cycle", r).status == CheckStatus::skipped);
    CHECK(run_check("eig.eigreq", r).status == CheckStatus::skipped);
    CHECK_THROWS_AS(run_check("no.such.check", r), error);

    const auto modular = build_triple(validate_params(Rat(2), Rat(3), Rat(3), Rat(3), 2), BasisChoice::first);
    const auto cycle = run_check("mod.cycle", modular);
    CHECK(cycle.status == CheckStatus::pass);
    CHECK(cycle.detail == "P^3 scalar = 4/729");
}

TEST_CASE("the whole catalog passes on valid realizations") {
    for (const auto basis : {BasisChoice::first, BasisChoice::second}) {
        const auto rep = run_all(reference(3, basis));
        CHECK(rep.fail == 0);
        CHECK(rep.pass + rep.skipped == static_cast<int>(check_catalog().size()));
        CHECK(rep.skipped == 1); // only mod.cycle is gated out at d = 3
        CHECK(rep.d == 3);
        CHECK(rep.field == "rational");
    }
}

TEST_CASE("diameter zero passes or skips every check") {
    const auto rep = run_all(reference(0));
    CHECK(rep.fail == 0);
    for (const auto& c : rep.checks) CHECK(c.status != CheckStatus::fail);
}

TEST_CASE("eigreq applies from diameter three") {
    const auto rep = run_all(reference(3));
    for (const auto& c : rep.checks)
        if (c.id == "eig.eigreq") CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("a corrupted realization is detected with a witness") {
    auto r = reference(2);
    r.C(0, 0) = r.C(0, 0) + Rat(1);
    const auto rep = run_all(r);
    CHECK(rep.fail >= 1);
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::fail && !c.detail.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("corruption of derived members is also detected") {
    auto r = reference(2);
    r.W(1, 1) = r.W(1, 1) + Rat(1);
    CHECK(run_all(r).fail >= 1);

    auto r2 = reference(2);
    r2.A_bar(0, 1) = r2.A_bar(0, 1) + Rat(1);
    CHECK(run_all(r2).fail >= 1);

    auto r3 = reference(2);
    r3.E_a[0](0, 0) = r3.E_a[0](0, 0) + Rat(1);
    CHECK(run_all(r3).fail >= 1);
}

TEST_CASE("check filtering by glob") {
    const auto r = reference(2);
    const auto rep = run_matching(r, "prod.*");
    CHECK(rep.checks.size() == 6);
    for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::pass);
    CHECK(run_matching(r, "zzz.*").checks.empty());
}

TEST_CASE("product theorems survive every parameter inversion in both bases") {
    const auto base = validate_params(Rat(2), Rat(3), Rat(5), Rat(7), 2);
    for (int mask = 0; mask < 8; ++mask) {
        const auto p = invert_huang_data(
            base, HuangFlips{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
        for (const auto basis : {BasisChoice::first, BasisChoice::second}) {
            const auto r = build_triple(p, basis);
            CHECK(run_check("prod.mutual", r).status == CheckStatus::pass);
            CHECK(run_check("prod.scalar", r).status == CheckStatus::pass);
        }
    }
}

TEST_SUITE_END();
