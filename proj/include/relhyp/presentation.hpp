#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relhyp {

// Configured limits for factor parameters.
inline constexpr int kMaxAbelianRank = 8;
inline constexpr long kMaxCyclicOrder = 1000000;
inline constexpr int kMaxFreeRank = 8;

enum class FactorKind { FreeAbelian, FiniteCyclic, Free };

/// One free-product factor: Z^d, Z/m or F_r, with a peripheral flag.
struct FactorSpec {
  FactorKind kind = FactorKind::Free;
  long param = 1;  // rank d, order m, or rank r
  bool peripheral = false;
  std::string label;

  bool operator==(const FactorSpec&) const = default;
};

/// A free product of FactorSpecs; the generating set is the union of the
/// standard factor generators. Peripheral factors carry the relatively
/// hyperbolic structure.
struct GroupSpec {
  std::string name;
  std::vector<FactorSpec> factors;

  std::vector<int> peripheral_indices() const;
  int factor_by_label(std::string_view label) const;  // -1 if absent

  bool operator==(const GroupSpec&) const = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool accepted() const { return errors.empty(); }
};

/// Parse failure in a group-spec file or an element string. `line` is
/// 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computation exceeded a configured guard (census radius, enumeration
/// count, ...).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-based format:
//   name = <string>
//   factor = abelian rank=<d> peripheral=<yes|no>
//   factor = cyclic order=<m> peripheral=<yes|no>
//   factor = free rank=<r> peripheral=<yes|no>
// '#' starts a comment; whitespace around '=' is ignored. An optional
// label=<id> key overrides the auto-assigned label (A, C, F, A2, ...).
// peripheral defaults to yes for abelian/cyclic and no for free.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec load_group_spec(const std::string& path);
std::string serialize_group_spec(const GroupSpec& spec);

ValidationReport validate(const GroupSpec& spec);

}  // namespace relhyp
