#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conjcheck {

  // Base class of every error raised by the library. Law failures are not
  // errors (they are reported as Verdicts); these are precondition and input
  // failures. Some of them carry a witness, rendered element by element.
  class Error : public std::runtime_error {
   public:
    explicit Error(std::string const& what, std::vector<std::string> witness = {})
        : std::runtime_error(what), _witness(std::move(witness)) {}

    std::vector<std::string> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::vector<std::string> _witness;
  };

#define CONJCHECK_DEFINE_ERROR(NAME)       \
  class NAME : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

  CONJCHECK_DEFINE_ERROR(ParseError)
  CONJCHECK_DEFINE_ERROR(PlanError)
  CONJCHECK_DEFINE_ERROR(DimensionError)
  CONJCHECK_DEFINE_ERROR(TableError)
  CONJCHECK_DEFINE_ERROR(KindMismatch)
  CONJCHECK_DEFINE_ERROR(NotHomomorphism)
  CONJCHECK_DEFINE_ERROR(NotSplit)
  CONJCHECK_DEFINE_ERROR(NotKernel)
  CONJCHECK_DEFINE_ERROR(NotSchreier)
  CONJCHECK_DEFINE_ERROR(ActionLawFailure)
  CONJCHECK_DEFINE_ERROR(CompatibilityFailure)
  CONJCHECK_DEFINE_ERROR(CancellationFailure)
  CONJCHECK_DEFINE_ERROR(PrecrossedConditionFailed)
  CONJCHECK_DEFINE_ERROR(CrossedConditionFailed)
  CONJCHECK_DEFINE_ERROR(GroupoidConditionFailed)
  CONJCHECK_DEFINE_ERROR(DiagramError)
  CONJCHECK_DEFINE_ERROR(CarrierTooLarge)
  CONJCHECK_DEFINE_ERROR(NotSchreierRelation)
  CONJCHECK_DEFINE_ERROR(HuqFailed)
  CONJCHECK_DEFINE_ERROR(IoError)
  CONJCHECK_DEFINE_ERROR(DomainError)

#undef CONJCHECK_DEFINE_ERROR

}  // namespace conjcheck
