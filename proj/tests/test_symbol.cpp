#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lusym/io.hpp"
#include "lusym/symbol.hpp"
#include "lusym/verify.hpp"

using namespace lusym;

namespace {

Symbol S(const std::string& s) { return io::parse_symbol(s); }

} // namespace

TEST_CASE("rank and defect of named symbols") {
    CHECK(S("-;2,1,0").rank() == 2);
    CHECK(S("-;2,1,0").defect() == -3);
    for (int n : {0, 1, 3, 7}) {
        Symbol t({n}, {});
        CHECK(t.rank() == n);
        CHECK(t.defect() == 1);
    }
    CHECK(S("-;-").rank() == 0);
    CHECK(S("-;-").defect() == 0);
}

TEST_CASE("sd and pd") {
    CHECK(S("-;2,1,0").sd() == Sign::minus);
    CHECK(S("-;2,1,0").pd() == Sign::minus);
    CHECK(S("1;0").sd() == Sign::plus);
    CHECK(S("0;1").sd() == Sign::minus);
    CHECK(S("2;-").sd() == Sign::plus);
    CHECK(S("2;-").pd() == Sign::plus);
    CHECK_THROWS_AS(S("-;-").sd(), SdUndefinedError);
    CHECK_THROWS_AS(S("2,1;3,0").sd(), SdUndefinedError);
}

TEST_CASE("transpose") {
    CHECK(S("1,0;-").transpose() == S("-;1,0"));
    CHECK(S("-;-").transpose() == S("-;-"));
    std::mt19937 rng(3);
    for (int i = 0; i < 10000; ++i) {
        Symbol s = verify_detail::random_symbol(rng);
        CHECK(s.transpose().rank() == s.rank());
        CHECK(s.transpose().defect() == -s.defect());
        CHECK(s.transpose().transpose() == s);
    }
}

TEST_CASE("shift and normalize") {
    // roundtrip pins the shifted representative: one shift of (1;-)
    Symbol s = S("1;-");
    Symbol sh = s.shift();
    CHECK(sh.top() == std::vector<int>{2, 0});
    CHECK(sh.bottom() == std::vector<int>{0});
    CHECK(sh.defect() == s.defect());
    CHECK(sh.rank() == s.rank());
    CHECK(sh.normalize() == s);
    CHECK(S("-;-").normalize() == S("-;-"));

    std::mt19937 rng(5);
    for (int i = 0; i < 10000; ++i) {
        Symbol r = verify_detail::random_symbol(rng);
        CHECK(r.shift().rank() == r.rank());
        CHECK(r.shift().defect() == r.defect());
        CHECK(r.shift().normalize() == r.normalize());
    }
}

TEST_CASE("upsilon and its inverse") {
    CHECK(S("3;-").upsilon() == Bipartition{Partition({3}), {}});
    CHECK(S("1,0;1").upsilon() == Bipartition{{}, Partition({1})});
    CHECK(upsilon_inverse({{}, Partition({1})}, 1) == S("1,0;1"));

    // derived oracle: scan all reduced symbols of rank 1, defect 1
    for (const auto& s : verify_detail::brute_force_symbols(1, 1))
        if (s.upsilon() == Bipartition{{}, Partition({1})})
            CHECK(s == S("1,0;1"));
}

TEST_CASE("upsilon is a bijection per rank and defect, exhaustively") {
    for (int n = 0; n <= 8; ++n) {
        for (int d = -7; d <= 7; ++d) {
            auto symbols = enumerate_symbols(n, d);
            std::set<std::string> seen;
            for (const auto& s : symbols) {
                CHECK(s.rank() == n);
                CHECK(s.defect() == d);
                CHECK(s.is_reduced());
                CHECK(upsilon_inverse(s.upsilon(), d) == s);
                seen.insert(io::format_bipartition(s.upsilon()));
            }
            CHECK(seen.size() == symbols.size());
            int content = n - defect_offset(d);
            if (content >= 0)
                CHECK(symbols.size() == enumerate_bipartitions(content).size());
        }
    }
}

TEST_CASE("alvis-curtis dual") {
    CHECK(ac_dual(S("1;-")) == S("1,0;1"));
    CHECK(ac_dual(S("-;-")) == S("-;-"));
    std::mt19937 rng(9);
    for (int i = 0; i < 10000; ++i) {
        Symbol s = verify_detail::random_symbol(rng);
        Symbol d = ac_dual(s);
        CHECK(d.defect() == s.defect());
        CHECK(d.rank() == s.rank());
        CHECK(d.upsilon().upper == s.upsilon().lower.transpose());
        CHECK(ac_dual(d) == s.normalize());
    }
}

TEST_CASE("zeta") {
    CHECK(S("1,0;1").zeta().both());
    CHECK(S("2;0").zeta() == SignSet::only(Sign::plus));
    CHECK(S("-;1").zeta() == SignSet::only(Sign::minus));
    CHECK(S("-;-").zeta().both()); // convention, flagged in the docs
    // shift invariance
    CHECK(S("1;-").shift().zeta() == SignSet::only(Sign::plus));
}

TEST_CASE("row-max removal acts on shift classes") {
    CHECK(remove_row_max(S("1,0;1"), Sign::plus) == S("0;1"));
    CHECK(remove_row_max(S("1,0;1"), Sign::minus) == S("1,0;-"));
    CHECK(remove_row_max(S("-;2,1,0"), Sign::minus) == S("-;1,0"));
    // empty selected row: a shifted representative supplies a zero to drop
    CHECK(remove_row_max(S("-;-"), Sign::plus) == S("-;0"));
    CHECK(remove_row_max(S("-;-"), Sign::minus) == S("0;-"));
    std::mt19937 rng(13);
    for (int i = 0; i < 5000; ++i) {
        Symbol s = verify_detail::random_symbol(rng).normalize();
        if (!s.top().empty()) {
            Symbol direct(std::vector<int>(s.top().begin() + 1, s.top().end()),
                          s.bottom());
            CHECK(remove_row_max(s, Sign::plus) == direct);
        }
    }
}

TEST_CASE("defect family enumeration") {
    CHECK(enumerate_family(1, DefectFamily::S).size() == 2);
    CHECK(enumerate_family(2, DefectFamily::S).size() == 6);
    CHECK(enumerate_family(1, DefectFamily::SMinus).size() == 2);

    // brute-force oracle over raw row lists
    for (int n = 0; n <= 6; ++n)
        for (auto fam : {DefectFamily::S, DefectFamily::SPlus, DefectFamily::SMinus}) {
            std::size_t brute = 0;
            for (int d : family_defects(n, fam))
                brute += verify_detail::brute_force_symbols(n, d).size();
            CHECK(enumerate_family(n, fam).size() == brute);
        }
}

TEST_CASE("family membership") {
    CHECK(S("2;-").family() == DefectFamily::S);
    CHECK(S("-;2,1,0").family() == DefectFamily::S);
    CHECK(S("1;0").family() == DefectFamily::SPlus);
    CHECK(S("1,0;-").family() == DefectFamily::SMinus);
    CHECK_FALSE(S("-;1").family().has_value());
}
