#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwps3 {

// Mismatched vector length against the ambient space.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (negative degree, bad weights, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation produced a value that contradicts an internal invariant
// (non-integral genus, classification count != 14, ...).
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Some weight does not divide the weight sum.
struct NotGorensteinError : std::runtime_error {
  std::int64_t offending_weight;
  explicit NotGorensteinError(std::int64_t w)
      : std::runtime_error("not Gorenstein: weight " + std::to_string(w) +
                           " does not divide the weight sum"),
        offending_weight(w) {}
};

// Veronese image has codimension != 1; carries the generator target weights.
struct NotHypersurfaceError : std::runtime_error {
  std::vector<std::int64_t> generator_weights;
  explicit NotHypersurfaceError(std::vector<std::int64_t> tw)
      : std::runtime_error("Veronese image is not a hypersurface (" +
                           std::to_string(tw.size()) + " generators)"),
        generator_weights(std::move(tw)) {}
};

// Generator search bound exhausted without a closure certificate.
struct IncompleteSearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Substitution or map input breaks weighted homogeneity.
struct HomogeneityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Monomial map composition with mismatched graded coordinate lists.
struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reference-data parse failure; message carries source name and line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& source, int line_, const std::string& what_)
      : std::runtime_error(source + ":" + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

}  // namespace gwps3
