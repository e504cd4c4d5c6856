#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "brachy/errors.hpp"
#include "brachy/finstruct.hpp"
#include "brachy/ringzoo.hpp"

using namespace brachy;

namespace {

FiniteStruct table1() { return read_struct_file(std::string(FIXTURE_DIR) + "/table1.struct"); }
FiniteStruct table2() { return read_struct_file(std::string(FIXTURE_DIR) + "/table2.struct"); }

const ElementProfile& profile_of(const std::vector<ElementProfile>& ps, int e) {
    return ps[e];
}

} // namespace

TEST_CASE("classification of modular rings") {
    FiniteStruct z4 = zoo_zmod(4);
    CHECK(z4.cls().is_ring);
    CHECK(z4.cls().is_commutative_ring);
    CHECK(z4.cls().is_cancellative_semiring);
    CHECK(z4.cls().is_right_nearring);
}

TEST_CASE("classification of the pinned fixtures") {
    FiniteStruct t1 = table1();
    CHECK(t1.cls().is_commutative_semiring);
    CHECK(!t1.cls().is_ring);
    CHECK(!t1.cls().add_inverses);
    CHECK(!t1.cls().is_cancellative_semiring); // a + a = a

    FiniteStruct t2 = table2();
    CHECK(t2.cls().is_right_nearring);
    CHECK(t2.cls().add_commutative);
    CHECK(t2.cls().mul_zero_absorbs);
    CHECK(!t2.cls().left_distributive);
    CHECK(!t2.cls().is_ring);
    for (int x = 0; x < 16; ++x) CHECK(t2.additive_order(x) <= 2);
}

TEST_CASE("serial and parallel classification agree") {
    auto equal = [](const Classification& a, const Classification& b) {
        return a.is_ring == b.is_ring &&
               a.is_commutative_ring == b.is_commutative_ring &&
               a.is_commutative_semiring == b.is_commutative_semiring &&
               a.is_cancellative_semiring == b.is_cancellative_semiring &&
               a.is_right_nearring == b.is_right_nearring &&
               a.add_commutative == b.add_commutative &&
               a.mul_zero_absorbs == b.mul_zero_absorbs &&
               a.left_distributive == b.left_distributive &&
               a.add_cancellative == b.add_cancellative;
    };
    for (const auto& [name, S] : default_battery()) {
        TableView t{S.order(), S.add_table().data(), S.mul_table().data(),
                    S.zero(), S.one()};
        INFO(name);
        CHECK(equal(classify_tables_serial(t), classify_tables_parallel(t)));
    }
    // and on a deliberately lopsided random table
    std::mt19937 rng(3);
    const int n = 40;
    std::vector<uint16_t> add(n * n), mul(n * n);
    for (auto& v : add) v = uint16_t(rng() % n);
    for (auto& v : mul) v = uint16_t(rng() % n);
    TableView t{n, add.data(), mul.data(), 0, 1};
    CHECK(equal(classify_tables_serial(t), classify_tables_parallel(t)));
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(FiniteStruct::make(2, {0, 1, 1}, {0, 0, 0, 0}, 0, 1),
                    UsageError);
    CHECK_THROWS_AS(FiniteStruct::make(2, {0, 1, 1, 9}, {0, 0, 0, 0}, 0, 1),
                    UsageError);
    CHECK_THROWS_AS(FiniteStruct::make(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 5),
                    UsageError);
    // a missing identity is a flag failure, not an error
    FiniteStruct s = FiniteStruct::make(2, {1, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
    CHECK(!s.cls().zero_identity_ok);
    CHECK(!s.cls().is_ring);
}

TEST_CASE("structure file round-trip") {
    FiniteStruct t1 = table1();
    std::ostringstream os;
    write_struct(os, t1);
    std::istringstream is(os.str());
    FiniteStruct back = read_struct(is);
    CHECK(back.order() == t1.order());
    CHECK(back.add_table() == t1.add_table());
    CHECK(back.mul_table() == t1.mul_table());
    CHECK(back.zero() == t1.zero());
    CHECK(back.one() == t1.one());
    CHECK(back.label(1) == "a");
}

TEST_CASE("element profiles in Z/4") {
    FiniteStruct z4 = zoo_zmod(4);
    auto ps = element_profile(z4);
    const auto& two = profile_of(ps, 2);
    CHECK(two.nilpotency_index == 2);
    CHECK(two.pi_regular_k == 2);
    CHECK(!two.is_unit);
    const auto& three = profile_of(ps, 3);
    CHECK(three.is_unit);
    CHECK(three.inverse == 3);
    // witnesses replay
    for (const auto& p : ps) {
        if (p.is_unit) {
            CHECK(z4.mul(p.element, p.inverse) == z4.one());
            CHECK(z4.mul(p.inverse, p.element) == z4.one());
        }
        if (p.is_regular)
            CHECK(z4.mul(z4.mul(p.element, p.quasi_inverse), p.element) ==
                  p.element);
    }
}

TEST_CASE("matrix units are regular with nilpotent squares") {
    FiniteStruct m2 = build_zoo("matring(zmod(2),2)");
    // find e12 and e21 by their labels
    int e12 = -1, e21 = -1;
    for (int i = 0; i < m2.order(); ++i) {
        if (m2.label(i) == "[0,1;0,0]") e12 = i;
        if (m2.label(i) == "[0,0;1,0]") e21 = i;
    }
    REQUIRE(e12 >= 0);
    REQUIRE(e21 >= 0);
    CHECK(m2.mul(m2.mul(e12, e21), e12) == e12);
    auto ps = element_profile(m2);
    CHECK(ps[e12].is_regular);
    CHECK(ps[e12].nilpotency_index == 2);
}

TEST_CASE("profile witnesses replay across the battery") {
    for (const auto& [name, S] : default_battery()) {
        auto ps = element_profile(S);
        for (const auto& p : ps) {
            INFO(name << " element " << p.element);
            if (p.is_regular)
                CHECK(S.mul(S.mul(p.element, p.quasi_inverse), p.element) ==
                      p.element);
            if (p.pi_regular_k > 0) {
                int pw = S.pow(p.element, p.pi_regular_k);
                bool reg = false;
                for (int t = 0; t < S.order(); ++t)
                    if (S.mul(S.mul(pw, t), pw) == pw) reg = true;
                CHECK(reg);
            }
            if (p.is_central)
                for (int y = 0; y < S.order(); ++y)
                    CHECK(S.mul(p.element, y) == S.mul(y, p.element));
        }
    }
}

TEST_CASE("jacobson radical") {
    CHECK(jacobson_radical(zoo_zmod(4)) == std::vector<int>{0, 2});
    CHECK(jacobson_radical(zoo_zmod(6)) == std::vector<int>{0});

    FiniteStruct ut = build_zoo("triangular(zmod(2),2,upper)");
    auto rad = jacobson_radical(ut);
    // strictly upper-triangular part: zero and e12
    REQUIRE(rad.size() == 2);
    CHECK(ut.label(rad[0]) == "[0,0;0,0]");
    CHECK(ut.label(rad[1]) == "[0,1;0,0]");

    CHECK_THROWS_AS(jacobson_radical(table1()), UsageError);
}

TEST_CASE("radical is an ideal and 1 + radical consists of units") {
    for (const auto& [name, S] : default_battery()) {
        if (!S.cls().is_ring) continue;
        auto rad = jacobson_radical(S);
        std::vector<bool> in(S.order(), false);
        for (int x : rad) in[x] = true;
        auto ps = element_profile(S);
        for (int x : rad) {
            CHECK(ps[S.succ(x)].is_unit);
            for (int y : rad) CHECK(in[S.add(x, y)]);
            for (int r = 0; r < S.order(); ++r) {
                INFO(name);
                CHECK(in[S.mul(r, x)]);
                CHECK(in[S.mul(x, r)]);
            }
        }
    }
}

TEST_CASE("alpha hierarchy") {
    // any commutative monoid: the chain starts at everything
    FiniteStruct z4 = zoo_zmod(4);
    AlphaChain c = alpha_hierarchy(z4);
    CHECK(c.levels[0].size() == 4);
    CHECK(c.exhausts);

    // full transformation monoid on 2 points: id, swap, const0, const1
    // (composition f*g = "apply g, then f" as table f(g(x)))
    std::vector<uint16_t> t2 = {
        // rows: id, swap, c0, c1 acting by composition
        0, 1, 2, 3,
        1, 0, 3, 2,
        2, 2, 2, 2,
        3, 3, 3, 3,
    };
    AlphaChain chain = alpha_hierarchy(4, t2, 0);
    CHECK(chain.levels[0] == std::vector<int>{0}); // center is the identity
    CHECK(chain.exhausts);
    CHECK(chain.levels.size() == 2); // level 1 already collects everything

    // monotone and stabilizing
    for (size_t i = 1; i < chain.levels.size(); ++i)
        CHECK(chain.levels[i].size() >= chain.levels[i - 1].size());

    CHECK_THROWS_AS(alpha_hierarchy(2, {0, 1, 1, 1}, 1), UsageError);
}

TEST_CASE("sums of units") {
    FiniteStruct z4 = zoo_zmod(4);
    auto d = sums_of_units(z4);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == 2); // 1 + 1
    CHECK(d[3] == 1);

    FiniteStruct f22 = build_zoo("product(zmod(2),zmod(2))");
    auto d2 = sums_of_units(f22);
    // the only unit is (1,1); sums of it reach only (0,0) and (1,1)
    int reachable = 0;
    for (int x : d2) reachable += x >= 0;
    CHECK(reachable == 2);

    FiniteStruct m2 = build_zoo("matring(zmod(2),2)");
    auto d3 = sums_of_units(m2);
    for (int x : d3) {
        CHECK(x >= 0);
        CHECK(x <= 3);
    }

    CHECK_THROWS_AS(sums_of_units(table1()), UsageError);
}

TEST_CASE("polynomial evaluation in a ring") {
    FiniteStruct z6 = zoo_zmod(6);
    NCPoly p = parse_ncpoly("x^2 + 5*y - 3");
    // at x=4, y=2: 16 + 10 - 3 = 23 = 5 mod 6
    CHECK(eval_ncpoly(p, z6, {{"x", 4}, {"y", 2}}) == 5);
    CHECK_THROWS_AS(eval_ncpoly(p, table1(), {{"x", 0}, {"y", 0}}), UsageError);
}
