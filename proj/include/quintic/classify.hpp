#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "quintic/abelian.hpp"
#include "quintic/constructions.hpp"
#include "quintic/graph.hpp"

namespace quintic {

/// Which of the two assignments of the +- pairs to (s, s') is in use.
/// AsGiven takes the pairs in order of first appearance in S.
enum class Orientation { AsGiven, Swapped };

/// Position of the involution s0 relative to <s, s'>.
enum class S0Category {
  Outside,     // s0 not in <s, s'>
  HalfS,       // s0 == (o(s)/2) s
  HalfSp,      // s0 == (o(s')/2) s'
  HalfSum,     // s0 == (o(s)/2) s + (o(s')/2) s'
  OtherInSpan  // s0 in <s, s'> but none of the above
};

std::string_view to_string(Orientation o);
std::string_view to_string(S0Category c);

/// S = {+-s, +-s', s0} together with its grid parameters.
struct NormalizedSet {
  Element s;
  Element sp;
  Element s0;
  std::int64_t m = 0;  // o(s)
  std::int64_t l = 0;  // least l >= 1 with l s' in <s>
  std::int64_t h = 0;  // h in [0, m) with h s + l s' == 0
  S0Category category = S0Category::Outside;
  Orientation orientation = Orientation::AsGiven;
};

/// Terminal verdict: S carries three or five involutions, so no perfect
/// code exists.
struct TooManyInvolutions {
  int involution_count = 0;
};

using Normalization =
    std::variant<std::array<NormalizedSet, 2>, TooManyInvolutions>;

/// Splits a quintic connection set. Throws NotQuintic, NotInverseClosed,
/// ContainsIdentity or NotGenerating when S is not a valid connected
/// quintic connection set.
Normalization normalize(const GroupSpec &g, std::span<const Element> s);

/// (o(s), l, h) for the pair (s, s'). Requires o(s), o(s') > 2.
GridParams derive_hl(const GroupSpec &g, const Element &s, const Element &sp);

/// Coset count of the identity-code enumeration: gcd(l - ah, m)/3 or /6.
enum class CosetRange { Third, Sixth };

std::string_view to_string(CosetRange r);

/// How the verdict was reached.
enum class Route {
  Direct,       // case dispatch on the structure of S
  Isomorphism,  // s0 uncategorised; matched a canonical form by isomorphism
  Involutions,  // three or five involutions in S
  None          // no case applies
};

std::string_view to_string(Route r);

/// One (orientation, sign) combination satisfying a case of the
/// classification, with the elements needed to build D^a cosets.
struct Witness {
  Orientation orientation = Orientation::AsGiven;
  int a = 1;
  GraphCase case_tag = GraphCase::I;
  GridParams params;
  CosetRange range = CosetRange::Third;
  Element s;
  Element sp;
  Element s0;
};

struct Classification {
  bool admits = false;
  std::optional<GraphCase> case_tag;
  std::optional<GridParams> params;
  /// Signs a in {-1, 1} valid for the reported orientation/parameters.
  std::vector<int> sign_set;
  std::optional<Orientation> orientation;
  std::optional<CosetRange> coset_range;
  Route route = Route::None;
  int involution_count = 0;
  /// Every direct witness across both orientations.
  std::vector<Witness> witnesses;
  /// Isomorphism route only: the matched canonical form and a vertex map
  /// from its Cayley graph onto the instance fixing the identity.
  std::optional<CayleyForm> canonical;
  std::vector<int> canonical_to_instance;
};

/// Decides whether the connected quintic Cayley graph Cay(G, S) admits a
/// perfect code.
Classification admits_perfect_code(const GroupSpec &g,
                                   std::span<const Element> s);

/// All perfect codes containing the identity, each sorted, list sorted.
/// Every returned code is checked against Cay(G, S); a failure raises
/// InternalAssertion.
std::vector<std::vector<Element>> enumerate_identity_codes(
    const GroupSpec &g, std::span<const Element> s);

std::vector<std::vector<Element>> enumerate_identity_codes(
    const GroupSpec &g, std::span<const Element> s,
    const Classification &verdict);

struct CodeStructureReport {
  /// Signs a with d + a s + s' + s0 in D for every d in D.
  std::vector<int> diagonal_signs;
  /// d - 3s or d - 3s - s0 in D for every d in D.
  bool step3_along_s = false;
  /// d - 3s' or d - 3s' - s0 in D for every d in D.
  bool step3_along_sp = false;
  /// 2 | o(s) o(s').
  bool order_product_even = false;
  NormalizedSet basis;
};

/// Structural facts every perfect code containing the identity satisfies,
/// measured against the as-given orientation of S. Throws NotAPerfectCode
/// unless D is a perfect code of Cay(G, S) containing the identity.
CodeStructureReport code_structure_report(const GroupSpec &g,
                                          std::span<const Element> s,
                                          std::span<const Element> d);

}  // namespace quintic
