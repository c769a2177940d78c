#pragma once

#include <stdexcept>
#include <string>

namespace qz
{

    // Every failure raised by the engine derives from qz::Error so callers can
    // catch engine errors separately from std library exceptions.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

#define QZ_DEFINE_ERROR(Name)                                   \
    class Name : public Error                                   \
    {                                                           \
    public:                                                     \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {} \
    }

    QZ_DEFINE_ERROR(IndexOutOfRange);
    QZ_DEFINE_ERROR(AmbientMismatch);
    QZ_DEFINE_ERROR(SizeMismatch);
    QZ_DEFINE_ERROR(Inhomogeneous);
    QZ_DEFINE_ERROR(OddAmbient);
    QZ_DEFINE_ERROR(OddSubset);
    QZ_DEFINE_ERROR(DivisionByZero);
    QZ_DEFINE_ERROR(InexactDivision);
    QZ_DEFINE_ERROR(NonzeroRemainder);
    QZ_DEFINE_ERROR(EigenvalueCollision);
    QZ_DEFINE_ERROR(NotOneDimensional);
    QZ_DEFINE_ERROR(ComponentTooLarge);
    QZ_DEFINE_ERROR(NoConventionMatches);
    QZ_DEFINE_ERROR(SubstitutionSingular);
    QZ_DEFINE_ERROR(ParseError);

#undef QZ_DEFINE_ERROR

} // namespace qz
