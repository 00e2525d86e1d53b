#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepclust {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (ranges, sizes, NaNs).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
  public:
    DimensionMismatch(std::size_t expected, std::size_t got)
      : InvalidArgument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                        std::to_string(got)) {}
};

class EmptySet : public InvalidArgument {
  public:
    explicit EmptySet(const std::string& what)
      : InvalidArgument(what + ": empty point set") {}
};

/// Closest pair distance is zero, so the ratio diameter / closest pair is undefined.
class InfiniteSpread : public Error {
  public:
    InfiniteSpread()
      : Error("infinite spread: point set contains duplicate points") {}
};

/// Clustering with invalid, repeated or out-of-range indices.
class InvalidClustering : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// An extraction algorithm could not produce k clusters at the requested size.
class InfeasibleExtraction : public Error {
  public:
    using Error::Error;
};

class InsufficientPoints : public InfeasibleExtraction {
  public:
    InsufficientPoints(std::size_t iteration, std::size_t alpha)
      : InfeasibleExtraction("insufficient points: fewer than " + std::to_string(alpha) +
                             " survivors at iteration " + std::to_string(iteration))
      , iteration_(iteration) {}

    std::size_t iteration() const noexcept { return iteration_; }

  private:
    std::size_t iteration_;
};

class InstanceTooSeparationHostile : public InfeasibleExtraction {
  public:
    using InfeasibleExtraction::InfeasibleExtraction;
};

class ColorExhausted : public InfeasibleExtraction {
  public:
    explicit ColorExhausted(std::size_t color)
      : InfeasibleExtraction("color " + std::to_string(color) + " has no remaining candidate balls")
      , color_(color) {}

    std::size_t color() const noexcept { return color_; }

  private:
    std::size_t color_;
};

/// Exact oracle asked to run beyond its configured instance size.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class EmbeddingFailed : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what)
      , line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace sepclust
