#include <catch_amalgamated.hpp>

#include <set>

#include "lusym/io.hpp"
#include "lusym/theta.hpp"
#include "lusym/verify.hpp"

using namespace lusym;

namespace {

Symbol S(const std::string& s) { return io::parse_symbol(s); }
const SignConfig kPlus{Sign::plus};
const SignConfig kMinus{Sign::minus};

} // namespace

TEST_CASE("in_B membership") {
    CHECK(in_B(Sign::plus, S("-;2,1,0"), S("3,2,1,0;-")));
    CHECK(in_B(Sign::plus, S("0;-"), S("-;-")));
    CHECK_THROWS_AS(in_B(Sign::plus, S("1,0;-"), S("-;-")), FamilyMismatchError);
    CHECK_THROWS_AS(in_B(Sign::minus, S("1;-"), S("1;0")), FamilyMismatchError);

    // exhaustive oracle: rank-1 partners of (1;-) in the plus family
    std::set<std::string> partners;
    for (const auto& cand : enumerate_family(1, DefectFamily::SPlus))
        if (in_B(Sign::plus, S("1;-"), cand))
            partners.insert(io::format_symbol(cand));
    CHECK(partners == std::set<std::string>{"1;0", "0;1"});
}

TEST_CASE("in_B defect equation as a property") {
    for (int n = 0; n <= 4; ++n)
        for (int np = 0; np <= 4; ++np)
            for (const auto& lam : enumerate_family(n, DefectFamily::S))
                for (Sign e : {Sign::plus, Sign::minus})
                    for (const auto& lamp : enumerate_family(
                             np, e == Sign::plus ? DefectFamily::SPlus
                                                 : DefectFamily::SMinus))
                        if (in_B(e, lam, lamp))
                            CHECK(lamp.defect() == -lam.defect() + to_int(e));
}

TEST_CASE("theta targets for named examples") {
    // trivial Sp_2 -> O+ tower at rank 0: exactly the trivial O+_0 datum.
    Irrep t = trivial_rep(GroupTag::sp(1));
    auto tg = theta_targets(t, GroupTag::o_even(0, Sign::plus), kPlus);
    REQUIRE(tg.size() == 1);
    CHECK(tg[0].lambda1 == S("-;-"));

    // unipotent cuspidal Sp_4 -> O-_2: the k=1 staircase.
    Irrep cusp{GroupTag::sp(2), {}, S("-;2,1,0"), S("-;-"), std::nullopt};
    auto tg2 = theta_targets(cusp, GroupTag::o_even(1, Sign::minus), kPlus);
    REQUIRE(tg2.size() == 1);
    CHECK(tg2[0].lambda1 == S("1,0;-"));

    // Sp with nontrivial rho into an odd tower: rho negates, iota is the
    // stated sign (all pd and ee factors trivial here).
    RhoDatum r;
    r.declare({"x", 2, false, "y", Sign::plus});
    r.declare({"y", 2, false, "x", Sign::plus});
    r.set_part("x", Partition({1}));
    Irrep p{GroupTag::sp(1), r, S("0;-"), S("-;-"), std::nullopt};
    REQUIRE(validate(p).ok());
    for (Sign e : {Sign::plus, Sign::minus}) {
        auto odd = theta_targets(p, GroupTag::o_odd(1, e), kPlus);
        REQUIRE(odd.size() == 1);
        CHECK(odd[0].rho == r.minus());
        CHECK(odd[0].iota == r.iota_tilde(kPlus));
        CHECK(odd[0].lambdam1 == S("0;-"));
    }
}

TEST_CASE("first occurrence indexes") {
    Irrep t = trivial_rep(GroupTag::sp(1));
    CHECK(first_occurrence(t, WittTower::o_even_plus, kPlus).n_first == 0);
    auto fo = first_occurrence(t, WittTower::o_even_minus, kPlus);
    CHECK(fo.n_first == 2);
    auto tg = theta_targets(t, GroupTag::o_even(2, Sign::minus), kPlus);
    REQUIRE(tg.size() == 1);
    CHECK(tg[0].lambda1 == S("-;2,0"));

    Irrep cusp{GroupTag::sp(2), {}, S("-;2,1,0"), S("-;-"), std::nullopt};
    CHECK(first_occurrence(cusp, WittTower::o_even_minus, kPlus).n_first == 1);
    CHECK(first_occurrence(cusp, WittTower::o_even_plus, kPlus).n_first == 4);
    CHECK(first_occurrence(cusp, WittTower::o_even_minus, kPlus).bold_n == 1);

    CHECK_THROWS_AS(first_occurrence(t, WittTower::sp, kPlus), std::invalid_argument);
}

TEST_CASE("occurrence is monotone along a tower") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& p : enumerate_irreps(GroupTag::sp(n), true))
            for (auto t : {WittTower::o_even_plus, WittTower::o_even_minus,
                           WittTower::o_odd_plus, WittTower::o_odd_minus}) {
                bool seen = false;
                for (int m = 0; m <= 2 * n + 4; ++m) {
                    if (t == WittTower::o_even_minus && m == 0)
                        continue;
                    bool nonempty =
                        !theta_targets(p, tower_group(t, m), kMinus).empty();
                    if (seen)
                        CHECK(nonempty);
                    seen = seen || nonempty;
                }
                CHECK(seen);
            }
}

TEST_CASE("central signs propagate along odd-pair edges") {
    // pi(-I) = ee^n * pi'(-I') for (Sp_2n, O_2n'+1) under the modified Weil
    // representation.
    for (const SignConfig& cfg : {kPlus, kMinus})
        for (int n = 0; n <= 3; ++n)
            for (const auto& p : enumerate_irreps(GroupTag::sp(n), true))
                for (Sign e : {Sign::plus, Sign::minus})
                    for (int m = 0; m <= n + 2; ++m)
                        for (const auto& q :
                             theta_targets(p, GroupTag::o_odd(m, e), cfg)) {
                            Sign lhs = central_sign(p, cfg);
                            Sign rhs =
                                sign_pow(cfg.ee, n) * central_sign(q, cfg);
                            CHECK(lhs == rhs);
                        }
}

TEST_CASE("conservation identities for stated examples") {
    // odd orthogonal basics: n+ = n-, and the iota-selected closed form
    Irrep oo{GroupTag::o_odd(0, Sign::plus), {}, S("0;-"), S("0;-"), Sign::plus};
    auto ids = conservation_check_basic(oo, kPlus);
    for (const auto& id : ids)
        CHECK(id.passed);

    // quadratic-unipotent basic Sp of rank <= 4: all identities pass
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : enumerate_basic_irreps(GroupTag::sp(n)))
            for (const auto& id : conservation_check_basic(p, kMinus))
                CHECK(id.passed);

    CHECK_THROWS_AS(
        conservation_check_basic(
            Irrep{GroupTag::sp(2), {}, S("2;-"), S("-;-"), std::nullopt}, kPlus),
        NotBasicError);
}

TEST_CASE("theta_star identity-shaped checks") {
    // Theta* on the trivial Sp_n data lands on the first even lift with the
    // (-1)-part untouched.
    Irrep t = trivial_rep(GroupTag::sp(2));
    auto im = theta_star(tuple_of(t), t.group, GroupKind::OEven, std::nullopt, kPlus);
    REQUIRE(im.size() == 1);
    CHECK(im[0].group.kind == GroupKind::OEven);
    CHECK(im[0].data.lm1 == S("-;-"));
    CHECK(im[0].data.rho == t.rho);

    // odd-orthogonal source: the rho part negates.
    RhoDatum r;
    r.declare({"x", 2, false, "y", Sign::plus});
    r.declare({"y", 2, false, "x", Sign::plus});
    r.set_part("x", Partition({1}));
    Irrep oo{GroupTag::o_odd(1, Sign::plus), r, S("0;-"), S("0;-"), Sign::plus};
    REQUIRE(validate(oo).ok());
    auto im2 = theta_star(tuple_of(oo), oo.group, GroupKind::Sp, std::nullopt, kPlus);
    REQUIRE(!im2.empty());
    for (const auto& x : im2)
        CHECK(x.data.rho == r.minus());
}

TEST_CASE("theta_star agrees with first theta lifting on basics") {
    // diagram cm2, top square: Theta* = L^can . Theta_first . (L^can)^-1
    for (const SignConfig& cfg : {kPlus, kMinus})
        for (const auto& p : verify_detail::all_basics(4)) {
            GroupKind target = p.group.kind == GroupKind::Sp ? GroupKind::OEven
                                                             : GroupKind::Sp;
            auto star = theta_star(tuple_of(p), p.group, target, std::nullopt, cfg);
            auto reps = verify_detail::theta_first_irreps(p, cfg);
            CHECK(verify_detail::same_keys(reps, star));
            if (p.group.kind == GroupKind::Sp) {
                auto star_odd =
                    theta_star(tuple_of(p), p.group, GroupKind::OOdd, std::nullopt, cfg);
                auto reps_odd = verify_detail::theta_first_irreps_odd(p, cfg);
                CHECK(verify_detail::same_keys(reps_odd, star_odd));
            }
        }
}

TEST_CASE("targets are validated outputs") {
    for (const SignConfig& cfg : {kPlus, kMinus})
        for (int n = 0; n <= 3; ++n)
            for (const auto& p : enumerate_irreps(GroupTag::sp(n), true))
                for (Sign e : {Sign::plus, Sign::minus})
                    for (int m = 0; m <= n + 2; ++m) {
                        for (const auto& q :
                             theta_targets(p, GroupTag::o_even(m, e), cfg))
                            CHECK(validate(q).ok());
                        for (const auto& q :
                             theta_targets(p, GroupTag::o_odd(m, e), cfg))
                            CHECK(validate(q).ok());
                    }
}
