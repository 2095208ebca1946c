#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmf/json_io.hpp"

using namespace qmf;

TEST_CASE("qseries round-trips through its schema") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long> val_dist(-6, 4);
    std::uniform_int_distribution<long> len_dist(1, 10);
    std::uniform_int_distribution<int> num_dist(-40, 40);
    std::uniform_int_distribution<int> den_dist(1, 9);
    for (int it = 0; it < 50; ++it) {
        const long lo = val_dist(rng);
        const long hi = lo + len_dist(rng);
        std::map<long, Rational> coeffs;
        for (long n = lo; n < hi; ++n) {
            const int c = num_dist(rng);
            if (c != 0) coeffs.emplace(n, make_rational(c, den_dist(rng)));
        }
        const QSeries s(lo, hi, coeffs);
        CHECK(qseries_from_json(to_json(s)) == s);
    }
}

TEST_CASE("qseries schema shape") {
    const QSeries s(-1, 3, {{-1, Rational(1)}, {1, make_rational(-3, 2)}});
    const Json j = to_json(s);
    CHECK(j.at("valuation") == -1);
    CHECK(j.at("horizon") == 3);
    REQUIRE(j.at("coeffs").size() == 2);  // zero entries omitted
    CHECK(j.at("coeffs")[0].at("n") == -1);
    CHECK(j.at("coeffs")[0].at("num") == "1");
    CHECK(j.at("coeffs")[0].at("den") == "1");
    CHECK(j.at("coeffs")[1].at("n") == 1);  // sorted by n
    CHECK(j.at("coeffs")[1].at("num") == "-3");
    CHECK(j.at("coeffs")[1].at("den") == "2");
}

TEST_CASE("malformed qseries JSON is rejected") {
    CHECK_THROWS(qseries_from_json(Json::parse(R"({"valuation": 0})")));
    CHECK_THROWS_AS(qseries_from_json(Json::parse(
                        R"({"valuation": 2, "horizon": 2, "coeffs": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(
                        R"({"valuation": 0, "horizon": 2,
                            "coeffs": [{"n": 0, "num": "1", "den": "0"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(
                        R"({"valuation": 0, "horizon": 2,
                            "coeffs": [{"n": 0, "num": "x", "den": "1"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(
                        R"({"valuation": 0, "horizon": 2,
                            "coeffs": [{"n": 5, "num": "1", "den": "1"}]})")),
                    std::invalid_argument);
}

TEST_CASE("mfelement schema and round-trip") {
    const MFElement f = parse_mf_expression("c4^3 - 1728*Delta");
    const Json j = to_json(f);
    CHECK(j.at("weight") == 12);
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("d") == 0);  // sorted by d
    CHECK(j.at("terms")[1].at("d") == 1);
    CHECK(j.at("terms")[1].at("num") == "-1728");
    CHECK(mfelement_from_json(j) == f);
}

TEST_CASE("coset and witness serialization") {
    const Catalog cat(12);
    const Witness& d4s3 = cat.find("D4S3");
    const Json j = to_json(d4s3);
    CHECK(j.at("name") == "D4S3");
    CHECK(j.at("degree") == 4);
    CHECK(j.at("kind") == "RELATIVE_WITTEN");
    CHECK(j.at("invariant").at("weight") == 2);
    CHECK(j.at("invariant").at("canonical") == false);
    const Coset back = coset_from_json(j.at("invariant"));
    CHECK(back.weight() == 2);
    CHECK(back.rep() == d4s3.coset().rep());

    const Json jc = to_json(canonicalize(d4s3.coset()));
    CHECK(jc.at("canonical") == true);

    const Json jd = to_json(cat.find("D2S1"));
    CHECK(jd.at("kind") == "RELATIVE_DIRAC");
    CHECK(jd.at("invariant").at("num") == "1");
    CHECK(jd.at("invariant").at("den") == "2");

    const Json jl = to_json(cat.find("L24_STRING"));
    CHECK(jl.at("kind") == "STRING_CLASS");
    CHECK(jl.at("invariant").at("weight") == 12);
}

TEST_CASE("pairing result serialization") {
    const Catalog cat(12);
    const Json j = to_json(pair_sqft(MFElement::delta_power(-1), cat.find("D4S3")));
    CHECK(j.at("value").at("num") == "1");
    CHECK(j.at("value").at("den") == "24");
    CHECK(j.at("d") == 24);
    CHECK(j.at("integral") == false);
    CHECK(j.at("weights") == Json::array({12, -12, 2}));

    const Json jm = to_json(pair_sqm(Rational(2), cat.find("D2S1")));
    CHECK(jm.at("integral") == true);
    CHECK(!jm.contains("weights"));
}

TEST_CASE("lower-bound report serialization") {
    const Catalog cat(40);
    const Json j = to_json(sqft_lower_bound(cat));
    CHECK(j.at("bound") == 576);
    REQUIRE(j.at("cases").size() == 24);
    bool saw_reduction = false;
    for (const auto& c : j.at("cases")) {
        CHECK(c.contains("d"));
        CHECK(c.contains("method"));
        CHECK(c.contains("citations"));
        if (c.at("method") == "reduction") {
            saw_reduction = true;
            CHECK(c.at("modulus") == 2);
            CHECK(c.at("pairing").at("num") == "3");
            CHECK(c.at("pairing").at("den") == "2");
            CHECK(c.contains("n"));
            CHECK(c.contains("m"));
        }
    }
    CHECK(saw_reduction);
}
