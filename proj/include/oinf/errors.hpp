#ifndef OINF_ERRORS_HPP
#define OINF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oinf {

// Domain failures carry a stable machine-readable code so the CLI can
// report them and exit 2.  Parse/usage failures use std::invalid_argument.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what_arg)
      : std::runtime_error(code + ": " + what_arg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline DomainError singular_orbit(const std::string& msg) {
  return DomainError("SingularOrbit", msg);
}
inline DomainError not_almost_antidominant(const std::string& msg) {
  return DomainError("NotAlmostAntidominant", msg);
}
inline DomainError infinite_inversion_set(const std::string& msg) {
  return DomainError("InfiniteInversionSet", msg);
}
inline DomainError indeterminate_tail(const std::string& msg) {
  return DomainError("IndeterminateTail", msg);
}
inline DomainError not_shortening(const std::string& msg) {
  return DomainError("NotShortening", msg);
}
inline DomainError not_reflection(const std::string& msg) {
  return DomainError("NotReflection", msg);
}
inline DomainError type_mismatch(const std::string& msg) {
  return DomainError("TypeMismatch", msg);
}
inline DomainError window_limit(const std::string& msg) {
  return DomainError("WindowLimitExceeded", msg);
}
inline DomainError infinite_interval(const std::string& msg) {
  return DomainError("InfiniteInterval", msg);
}
inline DomainError unbounded_window(const std::string& msg) {
  return DomainError("UnboundedWindow", msg);
}
inline DomainError inconsistent_character(const std::string& msg) {
  return DomainError("InconsistentCharacter", msg);
}

}  // namespace oinf

#endif
