#pragma once

// The `hahn` command-line surface, callable in-process for tests.
//
// Exit codes: 0 success, 1 property failure, 2 input or verification error,
// 64 usage error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hahn/autalg.hpp"

namespace hahn::cli {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUsage = 64;

enum class OutputFormat { Text, KeyValue };

struct SessionConfig {
  FieldDescriptor field = FieldDescriptor::rationals();
  GroupDescriptor group = GroupDescriptor::integers(1);
  Exponent cutoff;  // strictly positive
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Text;

  Bound bound() const { return Bound(cutoff); }
};

// "q" or "qsqrt:<m>".
FieldDescriptor parse_field_flag(const std::string& text);
// "z:<n>" or "q:<d>:<L>".
GroupDescriptor parse_group_flag(const std::string& text);
// Empty cutoff text means 8 in the leading coordinate. Throws InvalidArgument
// for a cutoff that is not strictly positive.
SessionConfig make_session(const std::string& field, const std::string& group,
                           const std::string& cutoff, std::uint64_t seed, const std::string& format);

// An automorphism file: `key = value` lines, `#` comments.
//
//   rho    = conj | id
//   tau    = [[1, -2], [0, 1]]
//   x      = [(1+1r), 1/3]
//   u      = ["1 + 2*t^[1,-1]", "1 + O(t^[8,0])"]
//   level  = 2
//   images = ["t + t^2", ...]      images of the lattice generators
//
// Missing keys default to the identity. With `images`, the file describes a
// substitution known only by its action, to be brought into normal form.
struct AutConfig {
  AutNormalForm nf;
  std::optional<std::vector<Series>> images;
};

AutConfig parse_aut_config(const std::string& text, const SessionConfig& session);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hahn::cli
