#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quintic/abelian.hpp"
#include "quintic/graph.hpp"

namespace quintic {

/// The (m, l, h) triple shared by every grid construction. h is reduced
/// modulo m on entry to each constructor.
struct GridParams {
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t h = 0;

  bool operator==(const GridParams &) const = default;
};

/// Grid vertex (a, b) of Z_m x Z_l, with an optional K2 layer k.
struct GridVertex {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::optional<std::int64_t> k;
};

enum class Family { Gamma, GammaK2, GammaPrime, GammaDPrime };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Twisted torus on Z_m x Z_l: row cycles, column paths and the wrap edges
/// (a, l-1) ~ (a-h, 0). Vertex (a, b) has index a*l + b. Throws
/// DegenerateParameters unless the result is simple and 4-regular.
Graph gamma(std::int64_t m, std::int64_t l, std::int64_t h);

/// gamma plus the row-antipodal matching (a, b) ~ (a + m/2, b). Requires
/// 2 | m; the result must be 5-regular.
Graph gamma_prime(std::int64_t m, std::int64_t l, std::int64_t h);

/// gamma plus the matching (a, b) ~ (a + c, b + l/2) with
/// c = (m + h - lcm0(h, m)) / 2, where stepping past row l-1 applies the
/// same h-twist as the wrap edges. Requires sigma(h) >= sigma(m) >= 1 and
/// sigma(l) >= 1; the result must be 5-regular.
Graph gamma_dprime(std::int64_t m, std::int64_t l, std::int64_t h);

Graph construct(Family family, const GridParams &p);

/// Shift c of the gamma_dprime matching.
std::int64_t dprime_shift(std::int64_t m, std::int64_t h);

/// A Cayley presentation (group, connection set).
struct CayleyForm {
  GroupSpec group;
  std::vector<Element> set;
};

/// phi(a, b) = ((l*a - h*b) / tau(h, l) mod ml/tau, b mod tau), landing in
/// Z_{ml/tau} x Z_tau (the second factor is dropped when tau == 1). Only
/// defined when tau(h, l) divides h.
class PhiMap {
 public:
  /// Throws NotIntegral when tau(h, l) does not divide h.
  PhiMap(std::int64_t m, std::int64_t l, std::int64_t h);

  std::int64_t tau() const { return tau_; }
  const GridParams &params() const { return params_; }
  /// Z_{ml/tau} (x Z_tau), optionally followed by a Z2 layer factor.
  GroupSpec target_group(bool with_layer) const;
  /// Image of a grid vertex; the layer, when present, is carried unchanged.
  Element operator()(const GridVertex &v) const;
  /// Build an element of the target group from (first, second[, layer])
  /// coordinates, dropping the second coordinate when tau == 1.
  Element target_element(std::int64_t first, std::int64_t second,
                         std::optional<std::int64_t> layer) const;

 private:
  GridParams params_;
  std::int64_t tau_ = 1;
};

/// Cayley form of a grid family via phi: the four grid generators
/// (+-l/tau, 0), +-(-h/tau, 1) plus the family's extra generator
/// (none for Gamma; the layer generator for GammaK2; (ml/2tau, 0) for
/// GammaPrime; (l(m + lcm0(m,h))/2tau, l/2) for GammaDPrime).
CayleyForm cayley_form(Family family, std::int64_t m, std::int64_t l,
                       std::int64_t h);

/// Vertex map from construct(family, p) to cayley(cayley_form(...)) given by
/// phi (times the identity on the layer).
std::vector<int> phi_vertex_map(Family family, const GridParams &p);

/// True iff phi_vertex_map is an isomorphism between the grid construction
/// and its Cayley form.
bool verify_phi(Family family, const GridParams &p);

enum class GraphCase { I, II, III };

std::string_view to_string(GraphCase c);
Family family_of(GraphCase c);

/// Divisibility and 2-adic conditions of the classification for a given
/// sign a: 0 <= h < m, l > 0, 6 | m, 3 | (l - a*h) and the case condition.
bool case_conditions_hold(GraphCase c, std::int64_t m, std::int64_t l,
                          std::int64_t h, int a);

/// Signs a in {-1, +1} for which case_conditions_hold.
std::vector<int> valid_signs(GraphCase c, std::int64_t m, std::int64_t l,
                             std::int64_t h);

/// The explicit Cayley graph of the classification for the given case.
/// Throws HypothesisViolation when no sign satisfies the case conditions,
/// plus the errors of cayley_form.
CayleyForm canonical_form(GraphCase c, std::int64_t m, std::int64_t l,
                          std::int64_t h);

}  // namespace quintic
