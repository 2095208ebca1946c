#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qmf/periodicity.hpp"

using namespace qmf;

namespace {
const Catalog& catalog() {
    static Catalog cat(60);
    return cat;
}
}  // namespace

TEST_CASE("delta-power obstructions recompute their moduli") {
    const auto& cat = catalog();

    const auto ob1 = obstruct_delta_power(1, cat);
    REQUIRE(ob1);
    CHECK(ob1->pairing_coefficient == make_rational(1, 24));
    CHECK(ob1->modulus == 24);
    CHECK(ob1->witness_chain == std::vector<std::string>{"D4S3"});

    const auto ob16 = obstruct_delta_power(16, cat);
    REQUIRE(ob16);
    CHECK(ob16->pairing_coefficient == make_rational(1, 3));
    CHECK(ob16->modulus == 3);
    CHECK(ob16->witness_chain == (std::vector<std::string>{"realizer(15)", "D4S3"}));

    const auto ob12 = obstruct_delta_power(12, cat);
    REQUIRE(ob12);
    CHECK(ob12->pairing_coefficient == make_rational(3, 2));
    CHECK(ob12->modulus == 2);
    CHECK(ob12->witness_chain == (std::vector<std::string>{"realizer(8)", "USPIN76"}));

    CHECK(!obstruct_delta_power(24, cat));
    CHECK(!obstruct_delta_power(2, cat));
    CHECK(!obstruct_delta_power(7, cat));
    CHECK_THROWS_AS(obstruct_delta_power(0, cat), std::invalid_argument);
}

TEST_CASE("naive degree-288 witness yields no obstruction") {
    // 24*Delta^11 is the minimal lattice multiple, and it pairs to exactly 1
    const auto& cat = catalog();
    const Witness naive = product_witness(image_realizer(11), cat.find("D4S3"));
    CHECK(naive.degree == 268);
    const PairingResult pr = pair_sqft(MFElement::delta_power(-12), naive);
    CHECK(pr.value == 1);
    CHECK(denominator(pr.value) == 1);  // modulus 1: no divisibility constraint
}

TEST_CASE("reduction exponents solve n*d = -12 + 24m") {
    const auto r12 = reduction_exponents(12);
    REQUIRE(r12);
    CHECK(r12->n == 1);
    CHECK(r12->m == 1);

    const auto r1 = reduction_exponents(1);
    REQUIRE(r1);
    CHECK(r1->n == 12);
    CHECK(r1->m == 1);

    const auto r11 = reduction_exponents(11);
    REQUIRE(r11);
    CHECK(r11->n == 12);
    CHECK(r11->m == 6);

    CHECK(!reduction_exponents(8));
    CHECK(!reduction_exponents(16));
    CHECK_THROWS_AS(reduction_exponents(0), std::invalid_argument);
    CHECK_THROWS_AS(reduction_exponents(24), std::invalid_argument);
}

TEST_CASE("reduction exponents: exhaustive checks against brute force") {
    for (long d = 1; d <= 23; ++d) {
        // brute-force oracle over the full search space
        std::optional<std::pair<long, long>> expect;
        for (long n = 1; n <= 24 && !expect; ++n)
            for (long m = 1; m <= 24 && !expect; ++m)
                if (n * d == -12 + 24 * m) expect = {n, m};
        const auto got = reduction_exponents(d);
        CHECK(got.has_value() == expect.has_value());
        if (got && expect) {
            CHECK(got->n == expect->first);
            CHECK(got->m == expect->second);
            CHECK(got->n * d == -12 + 24 * got->m);
        }
        // impossibility exactly at d in {8, 16}
        CHECK(got.has_value() == (d != 8 && d != 16));
    }
}

TEST_CASE("sqft lower bound certifies 576") {
    const auto report = sqft_lower_bound(catalog());
    CHECK(report.bound == 576);

    std::set<long> covered;
    bool has_grading = false;
    for (const auto& c : report.cases) {
        if (c.method == "unit-grading") {
            has_grading = true;
            continue;
        }
        covered.insert(c.d);
        if (c.d == 8 || c.d == 16) {
            CHECK(c.method == "obstruction");
            CHECK(*c.modulus == 3);
            CHECK(*c.pairing == make_rational(1, 3));
            CHECK(*c.n == 16 / c.d);
            CHECK(!c.m);
        } else {
            CHECK(c.method == "reduction");
            CHECK(*c.modulus == 2);
            CHECK(*c.pairing == make_rational(3, 2));
            CHECK(*c.n * c.d == -12 + 24 * *c.m);
        }
    }
    CHECK(has_grading);
    std::set<long> expected;
    for (long d = 1; d <= 23; ++d) expected.insert(d);
    CHECK(covered == expected);
}

TEST_CASE("case d=11 uses the (12, 6) reduction") {
    const auto report = sqft_lower_bound(catalog());
    for (const auto& c : report.cases) {
        if (c.d == 11 && c.method == "reduction") {
            CHECK(*c.n == 12);
            CHECK(*c.m == 6);
            return;
        }
    }
    FAIL("missing the d=11 case");
}

TEST_CASE("sqm lower bound certifies 8") {
    const auto report = sqm_lower_bound(catalog());
    CHECK(report.bound == 8);

    std::set<long> covered;
    for (const auto& c : report.cases) {
        covered.insert(c.d);
        if (c.d % 4 != 0) {
            CHECK(c.method == "unit-grading");
        } else {
            CHECK(c.d == 4);
            CHECK(c.method == "obstruction");
            CHECK(*c.modulus == 2);
            CHECK(*c.pairing == make_rational(1, 2));
        }
    }
    CHECK(covered == std::set<long>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("deleting a witness breaks the dependent case loudly") {
    Catalog cat(30);
    cat.erase("USPIN76");
    CHECK_THROWS_AS(obstruct_delta_power(12, cat), std::invalid_argument);
    CHECK_THROWS_AS(sqft_lower_bound(cat), std::invalid_argument);
    // the d=1 and d=16 chains only need D4S3 and still work
    CHECK(obstruct_delta_power(1, cat).has_value());

    Catalog cat2(30);
    cat2.erase("D4S3");
    CHECK_THROWS_AS(obstruct_delta_power(1, cat2), std::invalid_argument);
    CHECK_THROWS_AS(obstruct_delta_power(16, cat2), std::invalid_argument);

    Catalog cat3(30);
    cat3.erase("D2S1");
    CHECK_THROWS_AS(sqm_lower_bound(cat3), std::invalid_argument);

    Catalog cat4(30);
    cat4.erase("BOTT8");
    CHECK_THROWS_AS(sqm_lower_bound(cat4), std::invalid_argument);
}
