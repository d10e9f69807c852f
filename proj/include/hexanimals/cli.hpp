#pragma once

#include <hexanimals/transfer_grammar.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hexanimals::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInvalidInput = 3,
  kOutOfEnvelope = 4,
};

/// Malformed or inconsistent input document.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document with fields version, vertices [{id, weight}],
/// edges [{from, to, mult}], start and accept. Vertex ids are the indices.
std::string write_cmp_file(const Cmp& c);

/// Ids may be integers or strings. Parallel edges are merged by adding their
/// multiplicities. Throws InvalidInput.
Cmp read_cmp_file(std::string_view text);

/// Runs one command line (program name excluded). Data goes to `out`,
/// diagnostics to `err`; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexanimals::cli
