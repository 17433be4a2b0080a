#include <catch_amalgamated.hpp>

#include <random>

#include "lusym/io.hpp"
#include "lusym/rep.hpp"
#include "lusym/verify.hpp"

using namespace lusym;

namespace {

Symbol S(const std::string& s) { return io::parse_symbol(s); }

RhoDatum simple_rho(const std::string& id, Partition p, bool unitary = false,
                    Sign central = Sign::plus, int card = 2) {
    RhoDatum r;
    r.declare({id, card, unitary, id, central});
    r.set_part(id, std::move(p));
    return r;
}

} // namespace

TEST_CASE("trivial representations") {
    for (int n : {0, 1, 3}) {
        Irrep t = trivial_rep(GroupTag::sp(n));
        CHECK(t.lambda1 == Symbol({n}, {}));
        CHECK(t.lambdam1 == S("-;-"));
        CHECK(validate(t).ok());
    }
    Irrep op = trivial_rep(GroupTag::o_even(3, Sign::plus));
    CHECK(op.lambda1 == S("3;0"));
    Irrep om = trivial_rep(GroupTag::o_even(3, Sign::minus));
    CHECK(om.lambda1 == S("-;3,0"));
    CHECK(validate(op).ok());
    CHECK(validate(om).ok());
    for (Sign e : {Sign::plus, Sign::minus}) {
        Irrep oo = trivial_rep(GroupTag::o_odd(2, e));
        CHECK(oo.lambda1 == S("2;-"));
        CHECK(oo.iota == Sign::plus);
        CHECK(validate(oo).ok());
    }
    CHECK_THROWS_AS(trivial_rep(GroupTag::o_even(0, Sign::minus)),
                    std::invalid_argument);
}

TEST_CASE("validation catches the named violations") {
    CHECK(validate(trivial_rep(GroupTag::sp(3))).ok());

    Irrep bad1{GroupTag::sp(1), {}, S("1,0;-"), S("-;-"), std::nullopt};
    auto v1 = validate(bad1);
    CHECK_FALSE(v1.ok()); // lambda1 has defect 2, not in S

    Irrep bad2{GroupTag::o_even(1, Sign::plus), {}, S("-;1,0"), S("-;-"), std::nullopt};
    auto v2 = validate(bad2);
    CHECK_FALSE(v2.ok()); // pd(lambda1) = - forces eps = -
    bad2.group.eps = Sign::minus;
    CHECK(validate(bad2).ok());

    Irrep bad3{GroupTag::sp(2), {}, S("1;-"), S("-;-"), std::nullopt};
    CHECK_FALSE(validate(bad3).ok()); // rank bookkeeping: 0+1+0 != 2

    Irrep bad4{GroupTag::sp(1), {}, S("1;-"), S("-;-"), Sign::plus};
    CHECK_FALSE(validate(bad4).ok()); // iota on a symplectic group

    // half-integral |rho| is rejected
    Irrep bad5{GroupTag::sp(2), simple_rho("u", Partition({1}), true, Sign::plus, 3),
               S("0;-"), S("-;-"), std::nullopt};
    CHECK_FALSE(validate(bad5).ok());
}

TEST_CASE("unipotent cuspidal detection") {
    CHECK(is_unipotent_cuspidal(S("-;2,1,0"), GroupTag::sp(2)));
    CHECK(is_unipotent_cuspidal(S("1,0;-"), GroupTag::o_even(1, Sign::minus)));
    CHECK_FALSE(is_unipotent_cuspidal(S("2;-"), GroupTag::sp(2)));
    CHECK(is_unipotent_cuspidal(S("0;-"), GroupTag::sp(0)));
    CHECK(is_unipotent_cuspidal(S("-;-"), GroupTag::o_even(0, Sign::plus)));
    CHECK_FALSE(is_unipotent_cuspidal(S("1,0;-"), GroupTag::o_even(1, Sign::plus)));
    CHECK(is_unipotent_cuspidal(S("-;2,1,0"), GroupTag::o_odd(2, Sign::plus)));
    CHECK_FALSE(is_unipotent_cuspidal(S("-;2,1,0"), GroupTag::sp(3)));
}

TEST_CASE("kh parameters of basic representations") {
    Irrep p{GroupTag::sp(2), {}, S("-;2,1,0"), S("-;-"), std::nullopt};
    auto [k, h] = kh_params(p);
    CHECK(k == HalfInt{2}); // (3-1)/2 = 1
    CHECK(h == HalfInt{0});

    Irrep q{GroupTag::sp(1), {}, S("0;-"), S("1;0"), std::nullopt};
    CHECK(kh_params(q).second == HalfInt{1}); // +1/2
    Irrep qq{GroupTag::sp(1), {}, S("0;-"), S("0;1"), std::nullopt};
    CHECK(kh_params(qq).second == HalfInt{-1}); // -1/2

    Irrep r{GroupTag::o_even(1, Sign::minus), {}, S("1,0;-"), S("-;-"), std::nullopt};
    CHECK(kh_params(r).first == HalfInt{2}); // def/2 = 1

    Irrep np{GroupTag::sp(2), {}, S("2;-"), S("-;-"), std::nullopt};
    CHECK_THROWS_AS(kh_params(np), NotBasicError);
}

TEST_CASE("conjugation and sign twists") {
    Irrep p{GroupTag::sp(2), {}, S("1;-"), S("1;0"), std::nullopt};
    CHECK(conj_c(p).lambdam1 == S("0;1"));
    CHECK(conj_c(conj_c(p)) == p);

    Irrep om = trivial_rep(GroupTag::o_even(1, Sign::minus));
    Irrep sg = sgn_twist(om);
    CHECK(sg.lambda1 == S("1,0;-"));
    CHECK(validate(sg).ok());
    CHECK(sgn_twist(sg) == om);

    Irrep oo = trivial_rep(GroupTag::o_odd(1, Sign::plus));
    CHECK(sgn_twist(oo).iota == Sign::minus);
    CHECK_THROWS_AS(sgn_twist(trivial_rep(GroupTag::sp(1))), UnsupportedOperation);
    CHECK_THROWS_AS(conj_c(oo), UnsupportedOperation);
}

TEST_CASE("chi twist") {
    SignConfig plus{Sign::plus}, minus{Sign::minus};

    // OEven: swap the two symbols, transposing both iff pd*pd = -.
    Irrep p{GroupTag::o_even(2, Sign::minus), {}, S("1,0;-"), S("1;0"), std::nullopt};
    REQUIRE(validate(p).ok());
    Irrep x = chi_twist(p, plus);
    CHECK(x.lambda1 == S("0;1"));
    CHECK(x.lambdam1 == S("-;1,0"));
    CHECK(x.group == p.group);
    CHECK(validate(x).ok());

    // OOdd: swap symbols and multiply iota by the spinor norm of -I.
    Irrep oo{GroupTag::o_odd(2, Sign::plus), {}, S("1;-"), S("1;-"), Sign::plus};
    REQUIRE(validate(oo).ok());
    // N = 5: chi(-I) = eps * ee^2 = eps
    CHECK(chi_twist(oo, minus).iota == Sign::plus);
    Irrep oom = oo;
    oom.group.eps = Sign::minus;
    CHECK(chi_twist(oom, minus).iota == Sign::minus);
    // N = 7: chi(-I) = eps * ee^3
    Irrep oo3{GroupTag::o_odd(3, Sign::plus), {}, S("2;-"), S("1;-"), Sign::plus};
    CHECK(chi_twist(oo3, minus).iota == Sign::minus);
    CHECK(chi_twist(oo3, plus).iota == Sign::plus);

    CHECK_THROWS_AS(chi_twist(trivial_rep(GroupTag::sp(1)), plus), UnsupportedOperation);
}

TEST_CASE("central sign") {
    SignConfig plus{Sign::plus}, minus{Sign::minus};
    Irrep uni = trivial_rep(GroupTag::sp(3));
    CHECK(central_sign(uni, plus) == Sign::plus);
    CHECK(central_sign(uni, minus) == Sign::plus);

    Irrep p{GroupTag::sp(1), {}, S("0;-"), S("1;0"), std::nullopt};
    CHECK(central_sign(p, minus) == Sign::minus); // pd=+, ee^1=-
    CHECK(central_sign(p, plus) == Sign::plus);

    Irrep oo{GroupTag::o_odd(1, Sign::plus), {}, S("1;-"), S("0;-"), Sign::minus};
    CHECK(central_sign(oo, plus) == Sign::minus);
    CHECK_THROWS_AS(central_sign(trivial_rep(GroupTag::o_even(1, Sign::plus)), plus),
                    UnsupportedOperation);
}

TEST_CASE("alvis-curtis on representations") {
    Irrep t = trivial_rep(GroupTag::sp(1));
    Irrep d = alvis_curtis(t);
    CHECK(d.lambda1 == S("1,0;1"));
    CHECK(validate(d).ok());

    Irrep t0 = trivial_rep(GroupTag::sp(0));
    CHECK(alvis_curtis(t0) == t0);

    std::mt19937 rng(21);
    std::vector<Irrep> pool;
    for (int n = 0; n <= 3; ++n) {
        for (auto& p : enumerate_irreps(GroupTag::sp(n), false,
                                        verify_detail::synthetic_alphabet(), 3))
            pool.push_back(std::move(p));
        for (Sign e : {Sign::plus, Sign::minus})
            for (auto& p : enumerate_irreps(GroupTag::o_odd(n, e), true))
                pool.push_back(std::move(p));
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        const Irrep& p = pool[pick(rng)];
        Irrep d2 = alvis_curtis(p);
        CHECK(validate(d2).ok());
        CHECK(d2.lambda1.defect() == p.lambda1.defect());
        CHECK(d2.lambdam1.defect() == p.lambdam1.defect());
        CHECK(d2.iota == p.iota);
        CHECK(alvis_curtis(d2) == p);
    }
}

TEST_CASE("rho datum arithmetic") {
    RhoDatum r;
    r.declare({"x", 2, false, "y", Sign::plus});
    r.declare({"y", 2, false, "x", Sign::plus});
    r.set_part("x", Partition({3, 1}));
    CHECK(r.size() == 4);
    CHECK(r.eps_rho() == Sign::plus);
    CHECK(r.iota_rho() == Sign::plus);

    RhoDatum m = r.minus();
    CHECK(m.part("y") == Partition({3, 1}));
    CHECK(m.part("x").empty());
    CHECK(m.minus() == r);

    RhoDatum one = r.first_rows_removed();
    CHECK(one.part("x") == Partition({1}));
    CHECK(one.size() == 1);

    // self-paired label: minus is the identity
    RhoDatum s = simple_rho("l", Partition({2, 1}));
    CHECK(s.minus() == s);
    // size bookkeeping of rho_1: drop one first row weighted by card/2
    CHECK(s.size() - s.first_rows_removed().size() == 2); // card 2, first row 2

    RhoDatum u = simple_rho("u", Partition({1, 1}), true, Sign::minus, 3);
    CHECK(u.size() == 3);
    CHECK(u.eps_rho() == Sign::minus);
    CHECK(u.iota_rho() == Sign::minus);
    CHECK(u.iota_tilde(SignConfig{Sign::minus}) == Sign::plus); // (-)*(-1)^3
}

TEST_CASE("irrep enumeration") {
    auto sp1 = enumerate_irreps(GroupTag::sp(1), true);
    CHECK(sp1.size() == 6);
    for (const auto& p : sp1)
        CHECK(validate(p).ok());

    auto sp0 = enumerate_irreps(GroupTag::sp(0), true);
    REQUIRE(sp0.size() == 1);
    CHECK(sp0[0].lambda1 == S("0;-"));
    CHECK(sp0[0].lambdam1 == S("-;-"));

    auto oe0 = enumerate_irreps(GroupTag::o_even(0, Sign::plus), true);
    REQUIRE(oe0.size() == 1);
    CHECK(oe0[0].lambda1 == S("-;-"));
    CHECK(enumerate_irreps(GroupTag::o_even(0, Sign::minus), true).empty());

    // closure under validate for the general alphabet
    for (auto& p : enumerate_irreps(GroupTag::sp(2), false,
                                    verify_detail::synthetic_alphabet(), 2))
        CHECK(validate(p).ok());
    CHECK_THROWS_AS(enumerate_irreps(GroupTag::sp(20), true, {}, 12),
                    std::length_error);
}

TEST_CASE("basic enumeration produces basics only") {
    for (int n = 0; n <= 4; ++n) {
        for (const auto& p :
             enumerate_basic_irreps(GroupTag::sp(n), verify_detail::synthetic_alphabet())) {
            CHECK(validate(p).ok());
            CHECK(is_basic(p));
        }
    }
}

TEST_CASE("twists preserve validity across quadratic-unipotent data") {
    SignConfig cfg{Sign::minus};
    for (int n = 0; n <= 4; ++n) {
        for (const auto& p : enumerate_irreps(GroupTag::sp(n), true)) {
            CHECK(validate(conj_c(p)).ok());
            CHECK(validate(alvis_curtis(p)).ok());
        }
        for (Sign e : {Sign::plus, Sign::minus})
            for (const auto& p : enumerate_irreps(GroupTag::o_even(n, e), true)) {
                CHECK(validate(conj_c(p)).ok());
                CHECK(validate(sgn_twist(p)).ok());
                CHECK(validate(chi_twist(p, cfg)).ok());
                CHECK(validate(alvis_curtis(p)).ok());
            }
    }
}
