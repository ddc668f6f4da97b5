#pragma once

#include <stdexcept>
#include <string>

namespace nov {

// Error classes map onto CLI exit codes: hypothesis-class 1, assertion-class 2,
// input/format-class 3.
enum class ErrorClass { Hypothesis = 1, Assertion = 2, Input = 3 };

class Error : public std::runtime_error {
public:
    Error(std::string kind, ErrorClass cls, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), cls_(cls) {}
    const std::string& kind() const { return kind_; }
    ErrorClass error_class() const { return cls_; }

private:
    std::string kind_;
    ErrorClass cls_;
};

#define NOV_DEFINE_ERROR(Name, Cls)                                          \
    struct Name : Error {                                                    \
        explicit Name(const std::string& w) : Error(#Name, ErrorClass::Cls, w) {} \
    };

NOV_DEFINE_ERROR(NotAUnit, Assertion)
NOV_DEFINE_ERROR(ValuationOrder, Assertion)
NOV_DEFINE_ERROR(AssertionFailure, Assertion)
NOV_DEFINE_ERROR(PrecisionExhausted, Hypothesis)
NOV_DEFINE_ERROR(HypothesisFailure, Hypothesis)
NOV_DEFINE_ERROR(SeparationFailure, Hypothesis)
NOV_DEFINE_ERROR(NonFiltered, Hypothesis)
NOV_DEFINE_ERROR(MismatchedMaslov, Hypothesis)
NOV_DEFINE_ERROR(NotChainMap, Input)
NOV_DEFINE_ERROR(ValidationError, Input)
NOV_DEFINE_ERROR(FormatError, Input)

#undef NOV_DEFINE_ERROR

} // namespace nov
