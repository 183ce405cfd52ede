#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edr/matrix.hpp"
#include "edr/ring.hpp"

namespace edr {

/// One CLI-level request. `args` are the raw positional arguments: element
/// texts, a matrix literal, or for "transform" the source kind followed by
/// the witness elements, for "demo" the demo name.
struct DocumentRequest {
  std::string command;
  Ring ring = Ring::Int;
  std::vector<std::string> args;
  std::size_t cap = kDefaultPassCap;
};

struct Document {
  std::string json;  // pretty-printed, newline-terminated
  bool verified = false;
};

/// Runs the library operation and serializes the result. "verified" is
/// recomputed from the outputs. Library errors propagate as edr::Error.
Document build_document(const DocumentRequest& request);

}  // namespace edr
