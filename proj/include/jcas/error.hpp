#ifndef JCAS_ERROR_HPP
#define JCAS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jcas {

// Base class of every error raised by the library. The category string is
// stable and appears in CLI/JSON error output.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string &what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string &category() const noexcept { return category_; }

    // Precondition-type failures map to CLI exit code 1, internal
    // inconsistencies to exit code 2.
    virtual bool is_inconsistency() const noexcept { return false; }

private:
    std::string category_;
};

#define JCAS_DEFINE_ERROR(Name, tag)                                                                \
    class Name : public Error {                                                                     \
    public:                                                                                         \
        explicit Name(const std::string &what) : Error(tag, what) {}                                \
    };

JCAS_DEFINE_ERROR(ContextError, "context")
JCAS_DEFINE_ERROR(SubstitutionError, "substitution")
JCAS_DEFINE_ERROR(RootError, "root")
JCAS_DEFINE_ERROR(TruncationError, "truncation")
JCAS_DEFINE_ERROR(DomainError, "domain")
JCAS_DEFINE_ERROR(GradingError, "grading")
JCAS_DEFINE_ERROR(HomogenizationError, "homogenization")
JCAS_DEFINE_ERROR(ParameterError, "parameter")
JCAS_DEFINE_ERROR(NormalizationError, "normalization")
JCAS_DEFINE_ERROR(FieldExtensionError, "field-extension")
JCAS_DEFINE_ERROR(PreconditionError, "precondition")
JCAS_DEFINE_ERROR(LatticeError, "lattice")
JCAS_DEFINE_ERROR(ParseError, "parse")

#undef JCAS_DEFINE_ERROR

// Raised when an exact identity that must hold fails (for example a Magnus
// residual that is not a multiple of the required root power).
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string &what) : Error("inconsistency", what) {}
    bool is_inconsistency() const noexcept override { return true; }
};

} // namespace jcas

#endif
