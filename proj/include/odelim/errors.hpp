#ifndef ODELIM_ERRORS_HPP
#define ODELIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace odelim {

// Base class for every failure the library reports. Subclasses exist so
// callers can catch a specific condition without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error(what) {}
};

struct UnboundConstant : Error {
    explicit UnboundConstant(const std::string& name)
        : Error("no value bound for constant '" + name + "'") {}
};

struct EvaluationSingular : Error {
    explicit EvaluationSingular(const std::string& what = "denominator vanishes under assignment")
        : Error(what) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("variable '" + name + "' is not declared in the ranking") {}
};

struct NoLeader : Error {
    explicit NoLeader(const std::string& what = "polynomial has no derivative term")
        : Error(what) {}
};

struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& what)
        : Error(what) {}
};

struct NotSolvable : Error {
    explicit NotSolvable(const std::string& what)
        : Error(what) {}
};

struct NoRelationFound : Error {
    explicit NoRelationFound(const std::string& what)
        : Error(what) {}
};

struct UnknownCircuit : Error {
    explicit UnknownCircuit(const std::string& name)
        : Error("unknown circuit '" + name + "'") {}
};

struct UnsupportedTranscendental : Error {
    explicit UnsupportedTranscendental(const std::string& what)
        : Error(what) {}
};

struct NestedTranscendental : Error {
    explicit NestedTranscendental(const std::string& what)
        : Error(what) {}
};

struct InconsistentIC : Error {
    explicit InconsistentIC(const std::string& what)
        : Error(what) {}
};

struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& what)
        : Error(what) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
          line(line_), column(col_) {}
};

struct UndeclaredSymbol : ParseError {
    UndeclaredSymbol(int line_, int col_, const std::string& name)
        : ParseError(line_, col_, "undeclared symbol '" + name + "'") {}
};

}  // namespace odelim

#endif  // ODELIM_ERRORS_HPP
