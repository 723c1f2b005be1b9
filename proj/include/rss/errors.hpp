#pragma once

#include <stdexcept>
#include <string>

namespace rss {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RSS_ERROR(Name)                                              \
    struct Name : Error {                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

// spec-file and input errors
RSS_ERROR(SyntaxError);
RSS_ERROR(UnknownLetter);
RSS_ERROR(EmptyImage);
RSS_ERROR(InvalidArgument);
RSS_ERROR(IndexOutOfRange);

// structural preconditions
RSS_ERROR(SizeLimit);
RSS_ERROR(NotCompatible);
RSS_ERROR(NotPrimitive);
RSS_ERROR(NotConstantLength);
RSS_ERROR(NotLegal);
RSS_ERROR(NotRecognisable);
RSS_ERROR(GapUnbounded);

// code construction and application
RSS_ERROR(LengthChangingPermutation);
RSS_ERROR(RootMismatch);
RSS_ERROR(OverlapConflict);
RSS_ERROR(InsufficientContext);
RSS_ERROR(TooShort);
RSS_ERROR(IllegalInput);

#undef RSS_ERROR

} // namespace rss
