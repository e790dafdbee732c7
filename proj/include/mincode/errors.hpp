#pragma once

#include <stdexcept>
#include <string>

namespace mincode {

struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateColumn : std::runtime_error {
    explicit DegenerateColumn(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimePower : std::runtime_error {
    explicit NotPrimePower(const std::string& what) : std::runtime_error(what) {}
};

struct NoCrossing : std::runtime_error {
    explicit NoCrossing(const std::string& what) : std::runtime_error(what) {}
};

struct BlockMismatch : std::runtime_error {
    explicit BlockMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteFamily : std::runtime_error {
    explicit IncompleteFamily(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mincode
