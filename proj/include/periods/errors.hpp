#pragma once

#include <stdexcept>
#include <string>

namespace periods {

// Exact arithmetic never degrades silently: every contract violation in the
// engine surfaces as one of these named errors.

struct MismatchedField : std::domain_error {
    explicit MismatchedField(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct IrrationalBeyondBound : std::domain_error {
    explicit IrrationalBeyondBound(const std::string& what) : std::domain_error(what) {}
};

struct NonUnitDivisor : std::domain_error {
    explicit NonUnitDivisor(const std::string& what) : std::domain_error(what) {}
};

struct NonPolynomialResult : std::domain_error {
    explicit NonPolynomialResult(const std::string& what) : std::domain_error(what) {}
};

struct OddHalfPower : std::domain_error {
    explicit OddHalfPower(const std::string& what) : std::domain_error(what) {}
};

struct OddWeight : std::domain_error {
    explicit OddWeight(const std::string& what) : std::domain_error(what) {}
};

struct LaurentTailPresent : std::domain_error {
    explicit LaurentTailPresent(const std::string& what) : std::domain_error(what) {}
};

struct QuasimodularWeightTwo : std::domain_error {
    explicit QuasimodularWeightTwo(const std::string& what) : std::domain_error(what) {}
};

struct LaurentResidueNonzero : std::logic_error {
    explicit LaurentResidueNonzero(const std::string& what) : std::logic_error(what) {}
};

struct UnsupportedLevel : std::domain_error {
    explicit UnsupportedLevel(const std::string& what) : std::domain_error(what) {}
};

struct SingularBasisChange : std::logic_error {
    explicit SingularBasisChange(const std::string& what) : std::logic_error(what) {}
};

struct RankTooHigh : std::domain_error {
    int rank;
    explicit RankTooHigh(int r, const std::string& what) : std::domain_error(what), rank(r) {}
};

struct NotRankOne : std::domain_error {
    explicit NotRankOne(const std::string& what) : std::domain_error(what) {}
};

struct NoSolution : std::domain_error {
    explicit NoSolution(const std::string& what) : std::domain_error(what) {}
};

} // namespace periods
