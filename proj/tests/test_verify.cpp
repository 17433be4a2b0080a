#include <catch_amalgamated.hpp>

#include "lusym/verify.hpp"

using namespace lusym;

TEST_CASE("suite passes at small rank") {
    SuiteOptions opt;
    opt.max_rank = 2;
    opt.cfg = SignConfig{Sign::minus};
    opt.random_cases = 500;
    auto reports = run_suite(opt);
    CHECK(reports.size() == all_check_ids().size());
    for (const auto& r : reports) {
        INFO(r.check_id << " " << (r.counterexamples.empty()
                                       ? ""
                                       : r.counterexamples.front()));
        CHECK(r.failed == 0);
        CHECK(r.passed > 0);
    }
    CHECK(suite_exit_code(reports) == 0);
}

TEST_CASE("selected checks at rank 0 pass trivially") {
    SuiteOptions opt;
    opt.max_rank = 0;
    opt.random_cases = 100;
    for (Sign e : {Sign::plus, Sign::minus}) {
        opt.cfg = SignConfig{e};
        auto reports = run_suite(opt);
        for (const auto& r : reports)
            CHECK(r.failed == 0);
    }
}

TEST_CASE("single-check selection and unknown ids") {
    SuiteOptions opt;
    opt.max_rank = 2;
    opt.random_cases = 100;
    auto t4 = run_suite(opt, {"t4"});
    REQUIRE(t4.size() == 1);
    CHECK(t4[0].check_id == "t4");
    CHECK(t4[0].failed == 0);

    auto counts = run_suite(opt, {"counts"});
    REQUIRE(counts.size() == 1);
    CHECK(counts[0].failed == 0);

    CHECK_THROWS_AS(run_suite(opt, {"no-such-check"}), std::invalid_argument);
    SuiteOptions big;
    big.max_rank = 9;
    CHECK_THROWS_AS(run_suite(big), std::length_error);
}

TEST_CASE("counterexample lists are capped") {
    CheckReport r{"x", "y"};
    for (int i = 0; i < 100; ++i)
        r.fail("ce" + std::to_string(i));
    CHECK(r.failed == 100);
    CHECK(r.counterexamples.size() == CheckReport::kMaxCounterexamples);
}
