#include "quintic/constructions.hpp"

#include <set>

#include "quintic/error.hpp"
#include "quintic/numtheory.hpp"

namespace quintic {

namespace {

using Edge = std::pair<int, int>;

struct Grid {
  std::int64_t m, l, h;

  int index(std::int64_t a, std::int64_t b) const {
    return static_cast<int>(mod(a, m) * l + mod(b, l));
  }
  std::vector<Label> labels() const {
    std::vector<Label> out;
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < l; ++b) out.push_back({a, b});
    return out;
  }
};

[[noreturn]] void degenerate(std::string_view what, std::int64_t m,
                             std::int64_t l, std::int64_t h) {
  throw Error(ErrorKind::DegenerateParameters,
              std::string(what) + " with (m,l,h)=(" + std::to_string(m) + "," +
                  std::to_string(l) + "," + std::to_string(h) + ")");
}

Grid make_grid(std::int64_t m, std::int64_t l, std::int64_t h) {
  if (m < 1 || l < 1) degenerate("m and l must be positive", m, l, h);
  if (m * l > (std::int64_t{1} << 24)) degenerate("grid too large", m, l, h);
  return Grid{m, l, mod(h, m)};
}

// Edges of the twisted torus; loops are reported by returning false.
std::vector<Edge> gamma_edges(const Grid &g) {
  std::vector<Edge> edges;
  for (std::int64_t a = 0; a < g.m; ++a) {
    for (std::int64_t b = 0; b < g.l; ++b) {
      edges.emplace_back(g.index(a, b), g.index(a + 1, b));
      if (b != g.l - 1) edges.emplace_back(g.index(a, b), g.index(a, b + 1));
    }
    edges.emplace_back(g.index(a, g.l - 1), g.index(a - g.h, 0));
  }
  return edges;
}

Graph finish(const Grid &g, const std::vector<Edge> &edges, int degree,
             std::string_view name) {
  for (auto [u, v] : edges)
    if (u == v) degenerate(std::string(name) + " has a self-loop", g.m, g.l, g.h);
  auto graph = Graph::from_edges(static_cast<int>(g.m * g.l), edges, g.labels());
  if (graph.regular_degree() != degree)
    degenerate(std::string(name) + " is not " + std::to_string(degree) +
                   "-regular",
               g.m, g.l, g.h);
  return graph;
}

bool dprime_preconditions(std::int64_t m, std::int64_t l, std::int64_t h) {
  const auto sm = sigma2(m);
  return sigma2(h) >= sm && sm >= 1 && sigma2(l) >= 1;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Gamma: return "gamma";
    case Family::GammaK2: return "gamma-k2";
    case Family::GammaPrime: return "gamma-prime";
    case Family::GammaDPrime: return "gamma-dprime";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::Gamma, Family::GammaK2, Family::GammaPrime,
                 Family::GammaDPrime})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

Graph gamma(std::int64_t m, std::int64_t l, std::int64_t h) {
  const auto g = make_grid(m, l, h);
  return finish(g, gamma_edges(g), 4, "gamma");
}

Graph gamma_prime(std::int64_t m, std::int64_t l, std::int64_t h) {
  const auto g = make_grid(m, l, h);
  if (m % 2 != 0) degenerate("gamma-prime needs even m", m, l, h);
  auto edges = gamma_edges(g);
  for (std::int64_t a = 0; a < m / 2; ++a)
    for (std::int64_t b = 0; b < l; ++b)
      edges.emplace_back(g.index(a, b), g.index(a + m / 2, b));
  return finish(g, edges, 5, "gamma-prime");
}

std::int64_t dprime_shift(std::int64_t m, std::int64_t h) {
  h = mod(h, m);
  return (m + h - lcm0(h, m)) / 2;
}

Graph gamma_dprime(std::int64_t m, std::int64_t l, std::int64_t h) {
  const auto g = make_grid(m, l, h);
  if (!dprime_preconditions(m, l, g.h))
    degenerate("gamma-dprime needs sigma(h) >= sigma(m) >= 1 and sigma(l) >= 1",
               m, l, h);
  auto edges = gamma_edges(g);
  const auto c = dprime_shift(m, g.h);
  const auto half = l / 2;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < l; ++b) {
      if (b + half < l)
        edges.emplace_back(g.index(a, b), g.index(a + c, b + half));
      else
        edges.emplace_back(g.index(a, b), g.index(a + c - g.h, b + half - l));
    }
  }
  return finish(g, edges, 5, "gamma-dprime");
}

Graph construct(Family family, const GridParams &p) {
  switch (family) {
    case Family::Gamma: return gamma(p.m, p.l, p.h);
    case Family::GammaK2: return cartesian_k2(gamma(p.m, p.l, p.h));
    case Family::GammaPrime: return gamma_prime(p.m, p.l, p.h);
    case Family::GammaDPrime: return gamma_dprime(p.m, p.l, p.h);
  }
  throw Error(ErrorKind::InvalidInput, "unknown family");
}

PhiMap::PhiMap(std::int64_t m, std::int64_t l, std::int64_t h) {
  if (m < 1 || l < 1) degenerate("m and l must be positive", m, l, h);
  params_ = GridParams{m, l, mod(h, m)};
  tau_ = quintic::tau(params_.h, l);
  if (params_.h % tau_ != 0)
    throw Error(ErrorKind::NotIntegral,
                "tau(h,l)=" + std::to_string(tau_) + " does not divide h=" +
                    std::to_string(params_.h));
}

GroupSpec PhiMap::target_group(bool with_layer) const {
  std::vector<std::int64_t> factors{params_.m * params_.l / tau_};
  if (tau_ > 1) factors.push_back(tau_);
  if (with_layer) factors.push_back(2);
  for (auto d : factors)
    if (d < 2)
      throw Error(ErrorKind::DegenerateParameters,
                  "Cayley form has a trivial first factor");
  return GroupSpec(std::move(factors));
}

Element PhiMap::target_element(std::int64_t first, std::int64_t second,
                               std::optional<std::int64_t> layer) const {
  std::vector<std::int64_t> values{first};
  if (tau_ > 1) values.push_back(second);
  if (layer) values.push_back(*layer);
  return target_group(layer.has_value()).make(values);
}

Element PhiMap::operator()(const GridVertex &v) const {
  const auto a = mod(v.a, params_.m);
  const auto b = mod(v.b, params_.l);
  return target_element((params_.l * a - params_.h * b) / tau_, b, v.k);
}

CayleyForm cayley_form(Family family, std::int64_t m, std::int64_t l,
                       std::int64_t h) {
  const PhiMap phi(m, l, h);
  h = phi.params().h;
  const auto t = phi.tau();
  const bool layer = family == Family::GammaK2;
  const std::optional<std::int64_t> zero =
      layer ? std::optional<std::int64_t>(0) : std::nullopt;
  const auto group = phi.target_group(layer);

  std::vector<Element> set{
      phi.target_element(l / t, 0, zero),
      phi.target_element(-l / t, 0, zero),
      phi.target_element(-h / t, 1, zero),
      phi.target_element(h / t, -1, zero),
  };
  switch (family) {
    case Family::Gamma: break;
    case Family::GammaK2: set.push_back(phi.target_element(0, 0, 1)); break;
    case Family::GammaPrime:
      if (m % 2 != 0) degenerate("gamma-prime needs even m", m, l, h);
      set.push_back(phi.target_element(m * l / (2 * t), 0, std::nullopt));
      break;
    case Family::GammaDPrime:
      if (!dprime_preconditions(m, l, h))
        degenerate(
            "gamma-dprime needs sigma(h) >= sigma(m) >= 1 and sigma(l) >= 1",
            m, l, h);
      set.push_back(phi.target_element(l * (m + lcm0(m, h)) / (2 * t), l / 2,
                                       std::nullopt));
      break;
  }
  const auto report = validate_connection_set(group, set);
  if (report.distinct_count != static_cast<int>(set.size()) ||
      !report.excludes_identity || !report.inverse_closed)
    degenerate("Cayley form is not a valid connection set", m, l, h);
  return CayleyForm{group, std::move(set)};
}

std::vector<int> phi_vertex_map(Family family, const GridParams &p) {
  const PhiMap phi(p.m, p.l, p.h);
  const bool layer = family == Family::GammaK2;
  const auto group = phi.target_group(layer);
  std::vector<int> map;
  for (std::int64_t a = 0; a < p.m; ++a) {
    for (std::int64_t b = 0; b < p.l; ++b) {
      if (layer) {
        for (std::int64_t k = 0; k < 2; ++k)
          map.push_back(static_cast<int>(group.index_of(phi({a, b, k}))));
      } else {
        map.push_back(
            static_cast<int>(group.index_of(phi({a, b, std::nullopt}))));
      }
    }
  }
  return map;
}

bool verify_phi(Family family, const GridParams &p) {
  const auto grid = construct(family, p);
  const auto form = cayley_form(family, p.m, p.l, p.h);
  const auto target = cayley(form.group, form.set);
  return is_isomorphism(grid, target, phi_vertex_map(family, p));
}

std::string_view to_string(GraphCase c) {
  switch (c) {
    case GraphCase::I: return "I";
    case GraphCase::II: return "II";
    case GraphCase::III: return "III";
  }
  return "?";
}

Family family_of(GraphCase c) {
  switch (c) {
    case GraphCase::I: return Family::GammaK2;
    case GraphCase::II: return Family::GammaPrime;
    case GraphCase::III: return Family::GammaDPrime;
  }
  return Family::Gamma;
}

bool case_conditions_hold(GraphCase c, std::int64_t m, std::int64_t l,
                          std::int64_t h, int a) {
  if (!(0 <= h && h < m) || l <= 0 || m % 6 != 0 || mod(l - a * h, 3) != 0)
    return false;
  const auto sh = sigma2(h), sl = sigma2(l), sm = sigma2(m),
             sd = sigma2(l - a * h);
  const bool both_nonzero = sh.nonzero() && sl.nonzero();
  switch (c) {
    case GraphCase::I: return both_nonzero || sm > sd;
    case GraphCase::II:
      return (sl == 0 && sm == sd + 1) || (both_nonzero && sm <= sd);
    case GraphCase::III:
      return (sh >= sm && sm > sl && sl >= 1) ||
             (sh >= sm && sm == 1 && sl == 1);
  }
  return false;
}

std::vector<int> valid_signs(GraphCase c, std::int64_t m, std::int64_t l,
                             std::int64_t h) {
  std::vector<int> out;
  for (int a : {-1, 1})
    if (case_conditions_hold(c, m, l, h, a)) out.push_back(a);
  return out;
}

CayleyForm canonical_form(GraphCase c, std::int64_t m, std::int64_t l,
                          std::int64_t h) {
  if (valid_signs(c, m, l, h).empty())
    throw Error(ErrorKind::HypothesisViolation,
                "no sign a satisfies the case " + std::string(to_string(c)) +
                    " conditions for (m,l,h)=(" + std::to_string(m) + "," +
                    std::to_string(l) + "," + std::to_string(h) + ")");
  return cayley_form(family_of(c), m, l, h);
}

}  // namespace quintic
