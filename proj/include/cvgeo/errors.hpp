#ifndef CVGEO_ERRORS_HPP
#define CVGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvgeo {

struct GeomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CVGEO_DEFINE_ERROR(Name)                \
  struct Name : GeomError {                     \
    explicit Name(const std::string& msg = #Name) : GeomError(msg) {} \
  }

CVGEO_DEFINE_ERROR(DegenerateInput);
CVGEO_DEFINE_ERROR(OriginNotInterior);
CVGEO_DEFINE_ERROR(InvalidSplit);
CVGEO_DEFINE_ERROR(NoIntersection);
CVGEO_DEFINE_ERROR(SingularMatrix);
CVGEO_DEFINE_ERROR(ClassViolation);
CVGEO_DEFINE_ERROR(EmptyDirections);
CVGEO_DEFINE_ERROR(ParamOutOfDomain);
CVGEO_DEFINE_ERROR(NonSmoothPoint);
CVGEO_DEFINE_ERROR(NotEven);
CVGEO_DEFINE_ERROR(NotUnimodular);
CVGEO_DEFINE_ERROR(ZeroBaseline);
CVGEO_DEFINE_ERROR(SingularFittingSystem);
CVGEO_DEFINE_ERROR(UnionNotConvex);
CVGEO_DEFINE_ERROR(NotConverging);
CVGEO_DEFINE_ERROR(InsufficientTriples);
CVGEO_DEFINE_ERROR(PreconditionViolated);
CVGEO_DEFINE_ERROR(FitDegenerate);
CVGEO_DEFINE_ERROR(UnknownSuite);
CVGEO_DEFINE_ERROR(InvalidBody);
CVGEO_DEFINE_ERROR(InvalidConcFn);

#undef CVGEO_DEFINE_ERROR

} // namespace cvgeo

#endif
