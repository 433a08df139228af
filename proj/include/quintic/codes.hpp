#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quintic/abelian.hpp"
#include "quintic/constructions.hpp"
#include "quintic/graph.hpp"

namespace quintic {

enum class CodeFamily { Prism, Antipodal, HalfTurn };

std::string_view to_string(CodeFamily f);
/// Accepts the to_string names and the numeric CLI names "2.3", "2.7", "2.10".
std::optional<CodeFamily> parse_code_family(std::string_view name);

/// Graph family each code lives on: gamma x K2, gamma-prime, gamma-dprime.
Family host_family(CodeFamily f);

/// Inputs of every explicit code family. b, alpha(l) and beta are derived.
struct CodeFamilyParams {
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t h = 0;
  int a = 1;
  /// One bit t_r per coset index r.
  std::vector<int> t;

  /// gcd(|l - a*h|, m), with gcd(0, m) = m.
  std::int64_t b() const;
  std::int64_t alpha_l() const;
  /// 1 when sigma(m) == 1, 2 when sigma(m) > 1.
  std::int64_t beta() const;
};

/// Whether the family's hypotheses hold for (m, l, h, a). The t vector is
/// not consulted.
bool code_hypotheses_hold(CodeFamily f, const CodeFamilyParams &p);

/// Number of t bits (the union bound over r) the family expects.
/// Throws HypothesisViolation when the hypotheses fail.
std::size_t t_length(CodeFamily f, const CodeFamilyParams &p);

/// Perfect code of gamma(m,l,h) x K2 from the congruence description.
/// Vertex indices follow cartesian_k2(gamma(...)).
VertexSet prism_code(const CodeFamilyParams &p);
/// Perfect code of gamma_prime(m,l,h).
VertexSet antipodal_code(const CodeFamilyParams &p);
/// Perfect code of gamma_dprime(m,l,h).
VertexSet half_turn_code(const CodeFamilyParams &p);

VertexSet generate_code(CodeFamily f, const CodeFamilyParams &p);

/// The set-builder form {(3r + a j, ...) : j in Z} evaluated with plain
/// modular arithmetic. Diagnostic only; it is not a perfect code in
/// general.
VertexSet parametric_code(CodeFamily f, const CodeFamilyParams &p);

struct ParametricComparison {
  VertexSet congruence;
  VertexSet parametric;
  bool agrees = false;
};

ParametricComparison compare_parametric(CodeFamily f,
                                        const CodeFamilyParams &p);

/// D^a(i, j) = {(3i + a r) s + r s' + (r + j) s0 : r in Z}, sorted.
/// Throws InvalidInvolution unless s0 has order 2.
std::vector<Element> d_coset(const GroupSpec &g, const Element &s,
                             const Element &sp, const Element &s0, int a,
                             std::int64_t i, int j);

}  // namespace quintic
