#ifndef HYPERJAC_ERRORS_HPP
#define HYPERJAC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperjac {

// Every failure surfaced by the library carries exactly one of these codes.
// The CLI prints the code name and maps it to an exit status.
enum class errc {
    division_by_zero,
    field_mismatch,
    singular_system,
    duplicate_x_coordinate,
    involution_pair,
    branch_point_multiplicity,
    x_collision,
    not_on_curve,
    curve_mismatch,
    singular_curve,
    bad_characteristic,
    bad_degree,
    no_point_found,
    degenerate_leading_coefficient,
    branch_point_duplication,
    branch_point,
    not_divisible,
    non_coprime_gamma_h,
    x_collision_with_state,
    special_divisor,
    non_coprime_support,
    parse_error,
};

constexpr std::string_view errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::singular_system: return "SingularSystem";
        case errc::duplicate_x_coordinate: return "DuplicateXCoordinate";
        case errc::involution_pair: return "InvolutionPair";
        case errc::branch_point_multiplicity: return "BranchPointMultiplicity";
        case errc::x_collision: return "XCollision";
        case errc::not_on_curve: return "NotOnCurve";
        case errc::curve_mismatch: return "CurveMismatch";
        case errc::singular_curve: return "SingularCurve";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::bad_degree: return "BadDegree";
        case errc::no_point_found: return "NoPointFound";
        case errc::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
        case errc::branch_point_duplication: return "BranchPointDuplication";
        case errc::branch_point: return "BranchPoint";
        case errc::not_divisible: return "NotDivisible";
        case errc::non_coprime_gamma_h: return "NonCoprimeGammaH";
        case errc::x_collision_with_state: return "XCollisionWithState";
        case errc::special_divisor: return "SpecialDivisor";
        case errc::non_coprime_support: return "NonCoprimeSupport";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace hyperjac

#endif
