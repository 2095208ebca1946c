#include "qmf/periodicity.hpp"

namespace qmf {

namespace {

ObstructionReport run_obstruction(long d, const Witness& witness,
                                  std::vector<std::string> chain,
                                  std::vector<std::string> citations) {
    const MFElement phi = MFElement::delta_power(-d);
    const PairingResult pr = pair_sqft(phi, witness);
    ObstructionReport report;
    report.d = d;
    report.target = "k*Delta^-" + std::to_string(d) + " in the image at degree " +
                    std::to_string(-24 * d);
    report.witness_chain = std::move(chain);
    report.pairing_coefficient = pr.value;
    report.modulus = denominator(pr.value);
    report.citations = std::move(citations);
    return report;
}

}  // namespace

std::optional<ObstructionReport> obstruct_delta_power(long d, const Catalog& catalog) {
    if (d < 1) throw std::invalid_argument("obstruct_delta_power: d must be positive");
    switch (d) {
        case 1:
            return run_obstruction(
                1, catalog.find("D4S3"), {"D4S3"},
                {"pairing value k/24 must be an integer, so 24 | k"});
        case 16:
            return run_obstruction(
                16, product_witness(image_realizer(15), catalog.find("D4S3")),
                {"realizer(15)", "D4S3"},
                {"Wit image contains 8*Delta^15 (minimal multiple at Delta^15)",
                 "pairing value k/3 must be an integer, so 3 | k"});
        case 12:
            return run_obstruction(
                12, product_witness(image_realizer(8), catalog.find("USPIN76")),
                {"realizer(8)", "USPIN76"},
                {"Wit image contains 3*Delta^8 (minimal multiple at Delta^8)",
                 "Wit_rel(USPIN76) = E2*Delta^3 mod MF_38",
                 "pairing value 3k/2 must be an integer, so 2 | k"});
        default:
            return std::nullopt;
    }
}

std::optional<ReductionExponents> reduction_exponents(long d) {
    if (d < 1 || d > 23) throw std::invalid_argument("reduction_exponents: d must be in [1, 23]");
    for (long n = 1; n <= 24; ++n) {
        if ((n * d + 12) % 24 == 0) return ReductionExponents{n, (n * d + 12) / 24};
    }
    return std::nullopt;
}

LowerBoundReport sqft_lower_bound(const Catalog& catalog) {
    LowerBoundReport report;
    report.statement =
        "no invertible element of the modular-form image in degrees not divisible by 576";

    CaseEntry grading;
    grading.d = 0;
    grading.method = "unit-grading";
    grading.citations = {
        "invertible weakly holomorphic modular forms are +-Delta^e, of degree 24e",
        "therefore any period of the image ring is a multiple of 24"};
    report.cases.push_back(std::move(grading));

    const ObstructionReport ob16 = *obstruct_delta_power(16, catalog);
    const ObstructionReport ob12 = *obstruct_delta_power(12, catalog);
    if (ob16.modulus <= 1)
        throw std::runtime_error("sqft_lower_bound: the Delta^-16 pairing gives no obstruction");
    if (ob12.modulus <= 1)
        throw std::runtime_error("sqft_lower_bound: the Delta^-12 pairing gives no obstruction");

    for (long d = 1; d <= 23; ++d) {
        CaseEntry entry;
        entry.d = d;
        if (d == 8 || d == 16) {
            entry.method = "obstruction";
            entry.n = 16 / d;
            entry.modulus = ob16.modulus;
            entry.pairing = ob16.pairing_coefficient;
            entry.citations.push_back("(Delta^-" + std::to_string(d) + ")^" +
                                      std::to_string(16 / d) + " = Delta^-16 with k = 1");
            for (const auto& name : ob16.witness_chain)
                entry.citations.push_back("witness " + name);
            entry.citations.push_back("pairing " + to_string(ob16.pairing_coefficient) +
                                      " is not an integer");
        } else {
            const auto red = reduction_exponents(d);
            if (!red)
                throw std::runtime_error("sqft_lower_bound: no reduction exponents for d = " +
                                         std::to_string(d));
            entry.method = "reduction";
            entry.n = red->n;
            entry.m = red->m;
            entry.modulus = ob12.modulus;
            entry.pairing = ob12.pairing_coefficient;
            entry.citations.push_back(
                "(Delta^-" + std::to_string(d) + ")^" + std::to_string(red->n) + " * (Delta^24)^" +
                std::to_string(red->m - 1) + " = Delta^-12 with k = 1, since " +
                std::to_string(red->n) + "*" + std::to_string(d) + " = -12 + 24*" +
                std::to_string(red->m));
            entry.citations.push_back("Delta^24 lies in the Witten image");
            for (const auto& name : ob12.witness_chain)
                entry.citations.push_back("witness " + name);
            entry.citations.push_back("pairing " + to_string(ob12.pairing_coefficient) +
                                      " is not an integer");
        }
        report.cases.push_back(std::move(entry));
    }
    // Unit grading forces 24 | period; the 23 excluded residues force 24 | d
    // in period = 24d.
    report.bound = 24 * 24;
    return report;
}

LowerBoundReport sqm_lower_bound(const Catalog& catalog) {
    LowerBoundReport report;
    report.statement = "no invertible element of the rational image in degrees not divisible by 8";

    const PairingResult half = pair_sqm(Rational(1), catalog.find("D2S1"));
    const Int modulus = denominator(half.value);
    if (modulus <= 1)
        throw std::runtime_error("sqm_lower_bound: the degree -4 pairing gives no obstruction");
    const Witness& bott = catalog.find("BOTT8");
    if (bott.dirac_index() != 1)
        throw std::runtime_error("sqm_lower_bound: the degree-8 shift class has index " +
                                 to_string(bott.dirac_index()) + ", expected 1");

    for (long n = 1; n <= 7; ++n) {
        CaseEntry entry;
        entry.d = n;
        if (n % 4 != 0) {
            entry.method = "unit-grading";
            entry.citations = {"degrees " + std::to_string(n) +
                               " mod 8 are off the 4Z grading, so the image vanishes there and "
                               "cannot contain a unit"};
        } else {
            entry.method = "obstruction";
            entry.modulus = modulus;
            entry.pairing = half.value;
            entry.citations = {
                "degrees 4 mod 8 shift to degree -4 by powers of BOTT8 (index 1)",
                "pairing x * " + to_string(half.value) + " must be an integer, so the image at "
                "degree -4 lies in 2Z",
                "a unit pair x*y = 1 with x, y in 2Z would put 1 in 4Z"};
        }
        report.cases.push_back(std::move(entry));
    }
    report.bound = 8;
    return report;
}

}  // namespace qmf
