#pragma once

#include <stdexcept>
#include <string>

namespace consq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CONSQ_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                          \
        Name() : Error(#Name) {}                                   \
        explicit Name(const std::string& msg) : Error(std::string(#Name) + ": " + msg) {} \
    }

CONSQ_DEFINE_ERROR(DivisionByZero);
CONSQ_DEFINE_ERROR(ParseError);
CONSQ_DEFINE_ERROR(ZeroHeightInput);
CONSQ_DEFINE_ERROR(NotMonic);
CONSQ_DEFINE_ERROR(OddDegree);
CONSQ_DEFINE_ERROR(NoRationalRoot);
CONSQ_DEFINE_ERROR(DegreeBoundExceeded);
CONSQ_DEFINE_ERROR(SingularQuartic);
CONSQ_DEFINE_ERROR(NoRationalPoint);
CONSQ_DEFINE_ERROR(NoRationalTwoTorsion);
CONSQ_DEFINE_ERROR(LeadingCoefficientNotSquare);
CONSQ_DEFINE_ERROR(SingularCurve);
CONSQ_DEFINE_ERROR(PrecisionNotReached);
CONSQ_DEFINE_ERROR(TorsionInput);
CONSQ_DEFINE_ERROR(DegenerateSequence);
CONSQ_DEFINE_ERROR(SingularSpecialization);
CONSQ_DEFINE_ERROR(SingularSystem);
CONSQ_DEFINE_ERROR(NotAPerfectSquare);
CONSQ_DEFINE_ERROR(PointIsTorsion);
CONSQ_DEFINE_ERROR(ExhaustedMultiples);
CONSQ_DEFINE_ERROR(InternalIdentityFailure);
CONSQ_DEFINE_ERROR(NoKillingSubstitution);

#undef CONSQ_DEFINE_ERROR

}  // namespace consq
