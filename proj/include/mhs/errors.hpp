#pragma once

#include <stdexcept>
#include <string>

namespace mhs {

// Base for every recoverable domain failure; code() is the stable identifier
// surfaced by the command line tool.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define MHS_DEFINE_ERROR(Name)                                            \
  class Name : public DomainError {                                       \
   public:                                                                \
    explicit Name(const std::string& detail) : DomainError(#Name, detail) {} \
  };

MHS_DEFINE_ERROR(NonPolynomialResult)
MHS_DEFINE_ERROR(InexactDivision)
MHS_DEFINE_ERROR(DependentVectors)
MHS_DEFINE_ERROR(NotComparable)
MHS_DEFINE_ERROR(NotEulerian)
MHS_DEFINE_ERROR(CellNotInSubdivision)
MHS_DEFINE_ERROR(InvalidHeights)
MHS_DEFINE_ERROR(NotFullDimensional)
MHS_DEFINE_ERROR(NotConvenient)
MHS_DEFINE_ERROR(NotAffineOnCell)
MHS_DEFINE_ERROR(NonUnimodalDecomposition)
MHS_DEFINE_ERROR(InvalidInput)
MHS_DEFINE_ERROR(Overflow)

#undef MHS_DEFINE_ERROR

// Raised for malformed text or JSON (exit code 2 in the CLI).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& detail) : std::runtime_error(detail) {}
};

}  // namespace mhs
