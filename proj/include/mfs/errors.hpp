#ifndef MFS_ERRORS_HPP
#define MFS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfs {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error("DimensionMismatch: " + what) {}
};

struct InvalidSpec : std::runtime_error {
  explicit InvalidSpec(const std::string& what) : std::runtime_error("InvalidSpec: " + what) {}
};

struct InvalidSparsity : std::runtime_error {
  explicit InvalidSparsity(const std::string& what) : std::runtime_error("InvalidSparsity: " + what) {}
};

struct EmptyGrid : std::runtime_error {
  explicit EmptyGrid(const std::string& what) : std::runtime_error("EmptyGrid: " + what) {}
};

struct GridTooCoarse : std::runtime_error {
  explicit GridTooCoarse(const std::string& what) : std::runtime_error("GridTooCoarse: " + what) {}
};

struct NonUniformSamples : std::runtime_error {
  explicit NonUniformSamples(const std::string& what) : std::runtime_error("NonUniformSamples: " + what) {}
};

struct SolverBreakdown : std::runtime_error {
  explicit SolverBreakdown(const std::string& what) : std::runtime_error("SolverBreakdown: " + what) {}
};

struct ZeroEstimate : std::runtime_error {
  explicit ZeroEstimate(const std::string& what) : std::runtime_error("ZeroEstimate: " + what) {}
};

struct ZeroVector : std::runtime_error {
  explicit ZeroVector(const std::string& what) : std::runtime_error("ZeroVector: " + what) {}
};

struct BadDimensions : std::runtime_error {
  explicit BadDimensions(const std::string& what) : std::runtime_error("BadDimensions: " + what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error("ConfigError: " + what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error("IoError: " + what) {}
};

}  // namespace mfs

#endif
