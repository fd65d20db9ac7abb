#ifndef SU21_TYPES_HPP
#define SU21_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace su21 {

// Scalar configuration.  Define SU21_EXTENDED_PRECISION at configure time to
// rerun the numerical stack with long double scalars.
#ifdef SU21_EXTENDED_PRECISION
using real = long double;
inline constexpr const char* precision_name = "extended";
#else
using real = double;
inline constexpr const char* precision_name = "double";
#endif

using cplx = std::complex<real>;

inline constexpr real PI = real(3.141592653589793238462643383279502884L);
inline const cplx I_UNIT = cplx(0, 1);

// Error hierarchy. Every failure mode raised by the library derives from
// Error and carries a stable code string for CLI/JSON reporting.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
private:
    std::string code_;
};

#define SU21_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

SU21_DEFINE_ERROR(NotInGroup);
SU21_DEFINE_ERROR(NotUnitary);
SU21_DEFINE_ERROR(DegenerateHeight);
SU21_DEFINE_ERROR(BadParameter);
SU21_DEFINE_ERROR(TruncationFailure);
SU21_DEFINE_ERROR(PolePoint);
SU21_DEFINE_ERROR(NonConvergence);
SU21_DEFINE_ERROR(NotRepresented);
SU21_DEFINE_ERROR(PrecisionLoss);
SU21_DEFINE_ERROR(InvariantIncomplete);
SU21_DEFINE_ERROR(CapExceeded);
SU21_DEFINE_ERROR(BadIndex);
SU21_DEFINE_ERROR(OutOfRange);
SU21_DEFINE_ERROR(MixedOrbit);
SU21_DEFINE_ERROR(Mismatch);
SU21_DEFINE_ERROR(Unclassifiable);
SU21_DEFINE_ERROR(OutsideConvergence);
SU21_DEFINE_ERROR(QuadratureUnconverged);

#undef SU21_DEFINE_ERROR

} // namespace su21

#endif
