#include "mfs/model.hpp"

#include <cmath>
#include <string>

#include "mfs/errors.hpp"

namespace mfs {

Index SparseSignal::nnz() const {
  Index count = 0;
  for (Index i = 0; i < values.size(); ++i)
    if (values[i] != 0.0) ++count;
  return count;
}

double ToneGrid::final_resolution() const {
  return coarse_resolution() * std::pow(static_cast<double>(refine_factor), -refine_rounds);
}

void validate(const SensingOperator& op, const SparseSignal& signal) {
  if (op.q() <= 0 || op.n() <= 0)
    throw DimensionMismatch("inner matrix is empty (q=" + std::to_string(op.q()) +
                            ", n=" + std::to_string(op.n()) + ")");
  if (op.k() <= 0) throw DimensionMismatch("operator has k=0 blocks; m = k*q = 0 is disallowed");
  if (op.blocks.cols() != op.q())
    throw DimensionMismatch("block diagonals have " + std::to_string(op.blocks.cols()) +
                            " entries, expected q=" + std::to_string(op.q()));
  if (signal.n() != op.n())
    throw DimensionMismatch("signal length " + std::to_string(signal.n()) +
                            " != inner matrix columns n=" + std::to_string(op.n()));
  if (!op.inner.allFinite()) throw DimensionMismatch("inner matrix has non-finite entries");
  if (!op.blocks.allFinite()) throw DimensionMismatch("block diagonals have non-finite entries");
  if (signal.sparsity > 0 && signal.nnz() > signal.sparsity)
    throw DimensionMismatch("signal has " + std::to_string(signal.nnz()) +
                            " nonzeros, declared sparsity s=" + std::to_string(signal.sparsity));
}

const char* link_name(LinkType link) {
  return link == LinkType::ComplexExp ? "complex_exp" : "real_sine";
}

LinkType link_from_name(const std::string& name) {
  if (name == "complex_exp") return LinkType::ComplexExp;
  if (name == "real_sine") return LinkType::RealSine;
  throw ConfigError("unknown link type: " + name);
}

}  // namespace mfs
