#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "qd/group.hpp"

using namespace qd;

TEST_CASE("make_group parses the five families") {
    CHECK(make_group("cyclic:3").order() == 3);
    CHECK(make_group("sym:4").order() == 24);
    CHECK(make_group("wreath:3,cyclic:2").order() == 48); // 3! * 2^3
    CHECK(make_group("truncseries:3").order() == 27);
    CHECK(make_group("permgen:3;(1,2);(1,2,3)").order() == 6);

    CHECK_THROWS_AS(make_group("frobnicate:12"), SpecParseError);
    CHECK_THROWS_AS(make_group("cyclic:"), SpecParseError);
    CHECK_THROWS_AS(make_group("sym:11"), ResourceError); // 11! over the default cap
    CHECK_THROWS_AS(make_group("sym:9", GroupLimits{1000}), ResourceError);
}

TEST_CASE("group axioms on every family") {
    for (const char* spec : {"cyclic:6", "cyclic:2x4", "sym:4", "wreath:2,cyclic:2",
                             "wreath:3,cyclic:2", "permgen:4;(1,2);(1,2,3,4)", "truncseries:3"}) {
        auto g = make_group(spec);
        CAPTURE(spec);
        CHECK(oracles::group_axioms_hold(g));
        CHECK(generated_order(g) == g.order());
    }
}

TEST_CASE("wreath_product small cases") {
    CHECK(wreath_product(1, AbelianSpec{{2}}).order() == 2);
    CHECK(wreath_product(2, AbelianSpec{{}}).order() == 2); // S_2
    auto d4 = wreath_product(2, AbelianSpec{{2}});
    CHECK(d4.order() == 8);
    auto cd = conjugacy_classes(d4);
    CHECK(cd.classes.size() == 5); // dihedral of order 8

    auto brute = oracles::classes_bruteforce(d4);
    CHECK(brute.size() == 5);
}

TEST_CASE("conjugacy classes against the all-pairs oracle") {
    auto s3 = make_group("sym:3");
    auto cd = conjugacy_classes(s3);
    std::vector<std::size_t> sizes;
    for (const auto& c : cd.classes)
        sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    CHECK(conjugacy_classes(make_group("cyclic:1")).classes.size() == 1);

    for (const char* spec : {"sym:3", "sym:4", "wreath:2,cyclic:2", "wreath:2,cyclic:3",
                             "permgen:8;(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)"}) {
        auto g = make_group(spec);
        CAPTURE(spec);
        auto lib = conjugacy_classes(g);
        auto brute = oracles::classes_bruteforce(g);
        CHECK(lib.classes.size() == brute.size());
        std::vector<std::size_t> a, b;
        for (const auto& c : lib.classes)
            a.push_back(c.size());
        b = oracles::sorted_class_sizes(brute);
        std::sort(a.begin(), a.end());
        CHECK(a == b);

        // partition + deterministic ordering by minimal member
        std::size_t total = 0;
        for (std::size_t i = 0; i < lib.classes.size(); ++i) {
            total += lib.classes[i].size();
            CHECK(lib.classes[i].representative == lib.classes[i].members.front());
            if (i)
                CHECK(lib.classes[i - 1].representative < lib.classes[i].representative);
        }
        CHECK(total == g.order());
        CHECK(lib.classes[0].representative == g.identity());
    }
}

TEST_CASE("centralizers") {
    auto s3 = make_group("sym:3");
    auto ce = centralizer(s3, s3.identity());
    CHECK(ce.sub.order() == s3.order());

    // a transposition: |class| = 3, |Z| = 2
    auto cd = conjugacy_classes(s3);
    for (const auto& cls : cd.classes) {
        auto z = centralizer(s3, cls.representative);
        CHECK(z.sub.order() * cls.size() == s3.order());
        // every embedded element commutes with y
        for (Elt s = 0; s < z.sub.order(); ++s) {
            Elt a = z.to_ambient(s);
            CHECK(s3.mul(a, z.y) == s3.mul(z.y, a));
        }
        if (cls.size() == 3)
            CHECK(z.sub.order() == 2);
    }
}

TEST_CASE("schreier centralizer path agrees with the brute scan") {
    for (const char* spec : {"wreath:3,cyclic:2", "sym:5", "truncseries:3"}) {
        auto g = make_group(spec);
        CAPTURE(spec);
        auto cd = conjugacy_classes(g);
        for (const auto& cls : cd.classes) {
            auto brute = centralizer_members(g, cls.representative);
            auto schreier = centralizer_members(g, cls.representative, 1);
            CHECK(brute == schreier);
        }
    }
}

TEST_CASE("power_class_map") {
    auto s3 = make_group("sym:3");
    auto cd = conjugacy_classes(s3);
    auto id_map = power_class_map(s3, cd, 1);
    for (std::size_t i = 0; i < id_map.size(); ++i)
        CHECK(id_map[i] == i);

    auto order_map = power_class_map(s3, cd, static_cast<long long>(s3.order()));
    for (auto m : order_map)
        CHECK(m == cd.class_of[s3.identity()]);

    // S_3, n = 2: transpositions -> identity, 3-cycles -> 3-cycles
    auto sq = power_class_map(s3, cd, 2);
    for (std::size_t i = 0; i < cd.classes.size(); ++i) {
        if (cd.classes[i].size() == 3)
            CHECK(sq[i] == cd.class_of[s3.identity()]);
        if (cd.classes[i].size() == 2)
            CHECK(sq[i] == i);
    }

    // the map is well defined: every member lands in the same class
    for (const char* spec : {"sym:4", "wreath:2,cyclic:2"}) {
        auto g = make_group(spec);
        auto cdg = conjugacy_classes(g);
        for (long long n : {0, 2, 3, 5}) {
            auto pm = power_class_map(g, cdg, n);
            for (std::size_t i = 0; i < cdg.classes.size(); ++i)
                for (Elt m : cdg.classes[i].members)
                    CHECK(cdg.class_of[g.power(m, n)] == pm[i]);
        }
    }
}

TEST_CASE("power maps compose at composite exponents") {
    auto g = make_group("wreath:2,cyclic:3");
    auto cd = conjugacy_classes(g);
    for (long long n : {2, 3, 4})
        for (long long m : {2, 3, 5}) {
            auto pn = power_class_map(g, cd, n);
            auto pm = power_class_map(g, cd, m);
            auto pnm = power_class_map(g, cd, n * m);
            for (std::size_t i = 0; i < cd.classes.size(); ++i)
                CHECK(pn[pm[i]] == pnm[i]);
        }
}

TEST_CASE("exponent") {
    auto d4 = make_group("wreath:2,cyclic:2");
    CHECK(exponent_of(d4, conjugacy_classes(d4)) == 4);
    auto s3 = make_group("sym:3");
    CHECK(exponent_of(s3, conjugacy_classes(s3)) == 6);
}

TEST_CASE("q8 via permgen has the quaternion class structure") {
    auto q8 = make_group("permgen:8;(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)");
    CHECK(q8.order() == 8);
    auto cd = conjugacy_classes(q8);
    CHECK(cd.classes.size() == 5);
    // exactly one element of order 2
    int order2 = 0;
    for (Elt x = 0; x < q8.order(); ++x)
        if (x != q8.identity() && q8.mul(x, x) == q8.identity())
            ++order2;
    CHECK(order2 == 1);
}
