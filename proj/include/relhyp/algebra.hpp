#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relhyp/presentation.hpp"

namespace relhyp {

using AbelianVec = std::vector<std::int64_t>;   // length d, not all zero
using Residue = std::int64_t;                   // 1..m-1
using FreeWord = std::vector<std::int32_t>;     // +-(i+1) letters, freely reduced

/// One maximal factor block of a normal form. The payload is never the
/// factor identity.
struct Syllable {
  int factor = 0;
  std::variant<AbelianVec, Residue, FreeWord> payload;

  bool operator==(const Syllable&) const = default;
};

/// Alternating syllable normal form; adjacent syllables lie in distinct
/// factors. The empty sequence is the identity. Equality of elements is
/// equality of normal forms.
struct Element {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  int size() const { return static_cast<int>(syllables.size()); }
  bool operator==(const Element&) const = default;
};

// --- construction helpers ----------------------------------------------

Syllable abelian_syllable(int factor, AbelianVec v);
Syllable cyclic_syllable(int factor, Residue r);
Syllable free_syllable(int factor, FreeWord w);

/// Collapse a raw syllable sequence to normal form: merge adjacent
/// same-factor syllables, drop identity payloads, repeat to fixpoint.
/// Throws std::invalid_argument for payloads outside the factor carrier.
Element normalize(const GroupSpec& spec, std::vector<Syllable> raw);

// --- group operations ---------------------------------------------------

Element multiply(const GroupSpec& spec, const Element& a, const Element& b);
Element inverse(const GroupSpec& spec, const Element& a);
Element power(const GroupSpec& spec, const Element& a, std::int64_t k);

/// |g|_X: geodesic length over the standard generators; factor blocks
/// contribute L1 norm / min(res, m-res) / letter count.
std::int64_t word_length(const GroupSpec& spec, const Element& g);

/// |g|_{X u H}: peripheral syllables cost 1, everything else full length.
std::int64_t relative_length(const GroupSpec& spec, const Element& g);

bool commutes(const GroupSpec& spec, const Element& a, const Element& b);

// --- conjugacy normal form ----------------------------------------------

/// g = conjugator . core . conjugator^-1 with core cyclically reduced
/// (empty, a single syllable -- word-level reduced for free factors -- or
/// distinct end factors) and the conjugator of minimal word length; ties
/// are broken by shortlex on the serialized conjugator.
struct CyclicReduction {
  Element core;
  Element conjugator;
};
CyclicReduction cyclic_reduce(const GroupSpec& spec, const Element& g);

bool is_cyclically_reduced(const GroupSpec& spec, const Element& g);

// --- classification ------------------------------------------------------

enum class ElementClass { Identity, Parabolic, Hyperbolic };

struct Classification {
  ElementClass tag = ElementClass::Identity;
  std::optional<int> peripheral;              // set iff tag == Parabolic
  std::optional<std::int64_t> finite_order;   // set iff the order is finite
};

/// Identity / conjugate into a peripheral factor / everything else.
/// finite_order is reported whenever it exists, i.e. for the identity and
/// conjugates of finite-cyclic factor elements.
Classification classify(const GroupSpec& spec, const Element& g);

// --- roots and centralizers ----------------------------------------------

struct RootPower {
  Element root;            // g = root^exponent, exponent maximal
  std::int64_t exponent = 1;
};

/// Maximal root of an infinite-order hyperbolic element, transported back
/// through the conjugator so that root^exponent == g. Rejects identity,
/// parabolic and finite-order input.
RootPower primitive_root(const GroupSpec& spec, const Element& g);

struct CentralizerDescriptor {
  enum class Kind { WholeGroup, ConjugatedFactor, ConjugateCyclic };
  Kind kind = Kind::WholeGroup;
  Element conjugator;                        // c
  int factor = -1;                           // ConjugatedFactor: C = c F c^-1
  Element root;                              // ConjugateCyclic: C = c <root> c^-1
  std::optional<std::int64_t> root_order;    // finite root order, if any
};

/// Structural description of C_G(g): the whole group for g = 1, a
/// conjugated abelian/cyclic factor, or a conjugate cyclic group generated
/// by a cyclically reduced primitive root.
CentralizerDescriptor centralizer_descriptor(const GroupSpec& spec, const Element& g);

/// Membership test for the subgroup a descriptor describes.
bool centralizer_contains(const GroupSpec& spec, const CentralizerDescriptor& d,
                          const Element& x);

// --- canonical serialization ----------------------------------------------

/// `A(1,0)·F(t)·A(-1,0)`; the identity is `e`. Free-factor payloads use
/// letters t (rank 1) or x1..xr with ^e exponent runs joined by '*'.
std::string to_string(const GroupSpec& spec, const Element& g);

/// Inverse of to_string; also accepts '.' as the syllable separator.
Element parse_element(const GroupSpec& spec, std::string_view text);

/// Shortlex on the canonical serialization (length first, then bytes).
bool shortlex_less(const GroupSpec& spec, const Element& a, const Element& b);

}  // namespace relhyp
