#pragma once

#include <stdexcept>
#include <string>

namespace riskcone {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A partition fails to refine its predecessor.
class RefinementError : public Error { using Error::Error; };

/// A partition contains an empty atom, or atoms do not cover the states.
class EmptyAtomError : public Error { using Error::Error; };

/// Density against a measure with a zero mass point.
class DivisionByZero : public Error { using Error::Error; };

/// Incompatible shapes or levels.
class ShapeError : public Error { using Error::Error; };
class LevelOutOfRange : public Error { using Error::Error; };

/// Double-description refused: instance exceeds the row/generator budget.
class RepresentationUnavailable : public Error { using Error::Error; };

/// Search budget exhausted (distinct from "no witness exists").
class BudgetExhausted : public Error { using Error::Error; };

/// A value lies outside its admissible interval (market module).
class RangeError : public Error { using Error::Error; };

/// No strictly positive consistent price process exists.
class NoCPPError : public Error { using Error::Error; };

/// Input file violates the scenario schema; message carries a JSON-pointer-ish path.
class SchemaError : public Error { using Error::Error; };

}  // namespace riskcone
