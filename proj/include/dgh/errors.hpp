#pragma once

#include <stdexcept>
#include <string>

namespace dgh {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define DGH_ERROR(Name)                                                   \
    struct Name : Error {                                                 \
        explicit Name(const std::string& w) : Error(#Name, w) {}          \
    };

DGH_ERROR(SpaceMismatch)
DGH_ERROR(DegreeError)
DGH_ERROR(WindowOverflow)
DGH_ERROR(WindowError)
DGH_ERROR(NotABialgebra)
DGH_ERROR(NotHopf)
DGH_ERROR(NotGroupElement)
DGH_ERROR(NotTangential)
DGH_ERROR(NotConilpotent)
DGH_ERROR(FlavorMismatch)
DGH_ERROR(NotAlgebraMorphism)
DGH_ERROR(NotModuleMorphism)
DGH_ERROR(NotRepresentation)
DGH_ERROR(ReferenceError)
DGH_ERROR(DimensionError)

#undef DGH_ERROR

struct ParseError : Error {
    ParseError(const std::string& w, std::size_t line, std::size_t col)
        : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + w),
          line(line), column(col) {}
    std::size_t line, column;
};

}  // namespace dgh
