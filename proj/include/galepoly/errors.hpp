#ifndef GALEPOLY_ERRORS_HPP
#define GALEPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galepoly {

/** Base of every error the library throws on bad input or failed preconditions. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GALEPOLY_DEFINE_ERROR(Name)                                          \
    class Name : public Error                                                \
    {                                                                        \
        public:                                                              \
            explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    };

GALEPOLY_DEFINE_ERROR(ParseError)
GALEPOLY_DEFINE_ERROR(EmptySelection)
GALEPOLY_DEFINE_ERROR(DimensionMismatch)
GALEPOLY_DEFINE_ERROR(DegenerateInput)
GALEPOLY_DEFINE_ERROR(NotTwoSpanning)
GALEPOLY_DEFINE_ERROR(UnknownVertex)
GALEPOLY_DEFINE_ERROR(InvalidPolytope)
GALEPOLY_DEFINE_ERROR(NotAFacet)
GALEPOLY_DEFINE_ERROR(NotASimplexFacet)
GALEPOLY_DEFINE_ERROR(BadParameters)
GALEPOLY_DEFINE_ERROR(TooLargeForBruteForce)
GALEPOLY_DEFINE_ERROR(NotASupportedSimplex)
GALEPOLY_DEFINE_ERROR(NoEpsilonFound)
GALEPOLY_DEFINE_ERROR(NoCoverFound)

#undef GALEPOLY_DEFINE_ERROR

/**
 * A certificate in a construction pipeline did not verify. Unlike the other
 * errors this is a verdict about the object, so the CLI maps it to exit 1.
 */
class CertificateFailure : public Error
{
    public:
        CertificateFailure(const std::string& check, const std::string& detail)
            : Error("CertificateFailure: " + check + ": " + detail), check_(check), detail_(detail) {}

        const std::string& check() const { return check_; }
        const std::string& detail() const { return detail_; }

    private:
        std::string check_;
        std::string detail_;
};

}  // namespace galepoly

#endif  // GALEPOLY_ERRORS_HPP
