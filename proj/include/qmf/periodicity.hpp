#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmf/pairing.hpp"

namespace qmf {

// Divisibility obstruction for k*Delta^-d: the pairing value at k = 1 is a
// rational c, integrality of c*k forces (denominator of c) | k.
struct ObstructionReport {
    long d = 0;
    std::string target;
    std::vector<std::string> witness_chain;
    Rational pairing_coefficient;  // pairing value at k = 1
    Int modulus;                   // denominator of the coefficient
    std::vector<std::string> citations;
};

// Runs the pairing on Delta^-d against the catalogued witness chain for
// d in {1, 16, 12}; empty for every other d (no witness chain applies; in
// particular Delta^-24 lies in the image).
std::optional<ObstructionReport> obstruct_delta_power(long d, const Catalog& catalog);

struct ReductionExponents {
    long n = 0;
    long m = 0;
};

// Minimal positive n with n*d = -12 + 24m; empty exactly when
// gcd(d, 24) does not divide 12, i.e. d in {8, 16}.
std::optional<ReductionExponents> reduction_exponents(long d);

struct CaseEntry {
    long d = 0;
    std::string method;  // "obstruction" | "reduction" | "unit-grading"
    std::optional<long> n;
    std::optional<long> m;
    std::optional<Int> modulus;
    std::optional<Rational> pairing;
    std::vector<std::string> citations;
};

struct LowerBoundReport {
    long bound = 0;
    std::string statement;
    std::vector<CaseEntry> cases;
};

// Excludes units of the modular-form image in every degree not divisible by
// 576: degrees off 24Z by the unit grading, and each residue 24d
// (1 <= d <= 23) by reaching Delta^-16 (d = 8, 16) or Delta^-12 (all other d)
// with k = 1 and recomputing the pairing obstruction.
LowerBoundReport sqft_lower_bound(const Catalog& catalog);

// Excludes units of the rational image in every degree not divisible by 8:
// degrees off 4Z carry zero image, and degrees 4 mod 8 shift to -4 through
// the index-1 degree-8 class, where the recomputed pairing forces the image
// into 2Z; a unit pair inside 2Z would put 1 into 4Z.
LowerBoundReport sqm_lower_bound(const Catalog& catalog);

}  // namespace qmf
