#ifndef HILBSQ_ERRORS_HPP
#define HILBSQ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hilbsq {

// Domain errors carry a stable machine-readable code next to the human
// message; the CLI maps them to exit code 2.
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

#define HILBSQ_DOMAIN_ERROR(Name)                                          \
    class Name : public DomainError {                                      \
      public:                                                              \
        explicit Name(const std::string& message)                          \
            : DomainError(#Name, message) {}                               \
    }

HILBSQ_DOMAIN_ERROR(MismatchedAmbient);
HILBSQ_DOMAIN_ERROR(ZeroClass);
HILBSQ_DOMAIN_ERROR(OddSquare);
HILBSQ_DOMAIN_ERROR(NotNef);
HILBSQ_DOMAIN_ERROR(NonIntegralRestriction);
HILBSQ_DOMAIN_ERROR(RankUnsupported);
HILBSQ_DOMAIN_ERROR(NotBig);
HILBSQ_DOMAIN_ERROR(UnsupportedDivisibility);
HILBSQ_DOMAIN_ERROR(NonPositiveSquare);
HILBSQ_DOMAIN_ERROR(BidegreeMismatch);
HILBSQ_DOMAIN_ERROR(VerificationFailed);

#undef HILBSQ_DOMAIN_ERROR

}  // namespace hilbsq

#endif
