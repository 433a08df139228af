#include "quintic/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quintic/error.hpp"
#include "quintic/numtheory.hpp"

namespace quintic {

namespace {

GraphCase case_of(CodeFamily f) {
  switch (f) {
    case CodeFamily::Prism: return GraphCase::I;
    case CodeFamily::Antipodal: return GraphCase::II;
    case CodeFamily::HalfTurn: return GraphCase::III;
  }
  return GraphCase::I;
}

void require(CodeFamily f, const CodeFamilyParams &p) {
  if (p.a != 1 && p.a != -1)
    throw Error(ErrorKind::InvalidInput, "a must be -1 or 1");
  if (!code_hypotheses_hold(f, p))
    throw Error(ErrorKind::HypothesisViolation,
                "hypotheses of family " + std::string(to_string(f)) +
                    " fail for (m,l,h,a)=(" + std::to_string(p.m) + "," +
                    std::to_string(p.l) + "," + std::to_string(p.h) + "," +
                    std::to_string(p.a) + ")");
  const auto expected = t_length(f, p);
  if (p.t.size() != expected)
    throw Error(ErrorKind::InvalidInput,
                "t must have exactly " + std::to_string(expected) +
                    " entries, got " + std::to_string(p.t.size()));
  for (int bit : p.t)
    if (bit != 0 && bit != 1)
      throw Error(ErrorKind::InvalidInput, "t entries must be 0 or 1");
}

// Index of (i, j) in gamma(m, l, h).
int grid_index(const CodeFamilyParams &p, std::int64_t i, std::int64_t j) {
  return static_cast<int>(mod(i, p.m) * p.l + mod(j, p.l));
}

}  // namespace

std::string_view to_string(CodeFamily f) {
  switch (f) {
    case CodeFamily::Prism: return "prism";
    case CodeFamily::Antipodal: return "antipodal";
    case CodeFamily::HalfTurn: return "half-turn";
  }
  return "?";
}

std::optional<CodeFamily> parse_code_family(std::string_view name) {
  for (auto f : {CodeFamily::Prism, CodeFamily::Antipodal, CodeFamily::HalfTurn})
    if (to_string(f) == name) return f;
  // Numeric names accepted by the command line.
  if (name == "2.3") return CodeFamily::Prism;
  if (name == "2.7") return CodeFamily::Antipodal;
  if (name == "2.10") return CodeFamily::HalfTurn;
  return std::nullopt;
}

Family host_family(CodeFamily f) { return family_of(case_of(f)); }

std::int64_t CodeFamilyParams::b() const { return gcd0(l - a * h, m); }

std::int64_t CodeFamilyParams::alpha_l() const { return alpha(l); }

std::int64_t CodeFamilyParams::beta() const {
  return sigma2(m) > 1 ? 2 : 1;
}

bool code_hypotheses_hold(CodeFamily f, const CodeFamilyParams &p) {
  return case_conditions_hold(case_of(f), p.m, p.l, p.h, p.a);
}

std::size_t t_length(CodeFamily f, const CodeFamilyParams &p) {
  if (!code_hypotheses_hold(f, p))
    throw Error(ErrorKind::HypothesisViolation,
                "hypotheses of family " + std::string(to_string(f)) + " fail");
  const auto b = p.b();
  switch (f) {
    case CodeFamily::Prism: return static_cast<std::size_t>(b / 3);
    case CodeFamily::Antipodal:
      return static_cast<std::size_t>(b / (3 * p.alpha_l()));
    case CodeFamily::HalfTurn:
      return static_cast<std::size_t>(sigma2(p.m) == 1 && sigma2(p.l) == 1
                                          ? b / 3
                                          : b / 6);
  }
  return 0;
}

VertexSet prism_code(const CodeFamilyParams &p) {
  require(CodeFamily::Prism, p);
  const auto b = p.b();
  const auto range = static_cast<std::int64_t>(p.t.size());
  std::vector<int> members;
  for (std::int64_t i = 0; i < p.m; ++i) {
    for (std::int64_t j = 0; j < p.l; ++j) {
      for (std::int64_t k = 0; k < 2; ++k) {
        bool in = false;
        for (std::int64_t r = 0; r < range && !in; ++r) {
          const std::int64_t t = p.t[r];
          if (p.l % 2 == 0)
            in = mod(i - 3 * r - p.a * j, b) == 0 && mod(k - j - t, 2) == 0;
          else
            in = mod(p.a * (i - 3 * r) - b * (k - t) - (b + 1) * j, 2 * b) == 0;
        }
        if (in) members.push_back(2 * grid_index(p, i, j) + static_cast<int>(k));
      }
    }
  }
  return VertexSet(std::move(members));
}

VertexSet antipodal_code(const CodeFamilyParams &p) {
  require(CodeFamily::Antipodal, p);
  const auto step = p.b() / p.alpha_l();  // b / alpha(l)
  const auto range = static_cast<std::int64_t>(p.t.size());
  std::vector<int> members;
  for (std::int64_t i = 0; i < p.m; ++i) {
    for (std::int64_t j = 0; j < p.l; ++j) {
      for (std::int64_t r = 0; r < range; ++r) {
        if (mod(i - 3 * r - step * p.t[r] - (step + p.a) * j, 2 * step) == 0) {
          members.push_back(grid_index(p, i, j));
          break;
        }
      }
    }
  }
  return VertexSet(std::move(members));
}

VertexSet half_turn_code(const CodeFamilyParams &p) {
  require(CodeFamily::HalfTurn, p);
  const auto b = p.b();
  const auto range = static_cast<std::int64_t>(p.t.size());
  const bool deep = sigma2(p.l) >= 2;
  const auto modulus = b / p.beta();
  std::vector<int> members;
  for (std::int64_t i = 0; i < p.m; ++i) {
    for (std::int64_t j = 0; j < p.l; ++j) {
      for (std::int64_t r = 0; r < range; ++r) {
        const std::int64_t t = p.t[r];
        const bool in =
            deep ? mod(p.a * (i - 3 * r) - (b / 2 + 1) * j - b * t / 2, b) == 0
                 : mod(j - t, 2) == 0 && mod(i - 3 * r - p.a * j, modulus) == 0;
        if (in) {
          members.push_back(grid_index(p, i, j));
          break;
        }
      }
    }
  }
  return VertexSet(std::move(members));
}

VertexSet generate_code(CodeFamily f, const CodeFamilyParams &p) {
  switch (f) {
    case CodeFamily::Prism: return prism_code(p);
    case CodeFamily::Antipodal: return antipodal_code(p);
    case CodeFamily::HalfTurn: return half_turn_code(p);
  }
  throw Error(ErrorKind::InvalidInput, "unknown code family");
}

VertexSet parametric_code(CodeFamily f, const CodeFamilyParams &p) {
  require(f, p);
  const auto period = 2 * p.m * p.l;
  const auto shift = dprime_shift(p.m, p.h);
  std::vector<int> members;
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(p.t.size()); ++r) {
    const std::int64_t t = p.t[r];
    for (std::int64_t j = 0; j < period; ++j) {
      const auto i = 3 * r + p.a * j;
      switch (f) {
        case CodeFamily::Prism:
          members.push_back(2 * grid_index(p, i, j) +
                            static_cast<int>(mod(j + t, 2)));
          break;
        case CodeFamily::Antipodal:
          members.push_back(grid_index(p, i + (j + t) * (p.m / 2), j));
          break;
        case CodeFamily::HalfTurn:
          members.push_back(
              grid_index(p, i + (j + t) * shift, j + (j + t) * (p.l / 2)));
          break;
      }
    }
  }
  return VertexSet(std::move(members));
}

ParametricComparison compare_parametric(CodeFamily f,
                                        const CodeFamilyParams &p) {
  ParametricComparison out;
  out.congruence = generate_code(f, p);
  out.parametric = parametric_code(f, p);
  out.agrees = out.congruence == out.parametric;
  return out;
}

std::vector<Element> d_coset(const GroupSpec &g, const Element &s,
                             const Element &sp, const Element &s0, int a,
                             std::int64_t i, int j) {
  if (order_of(g, s0) != 2)
    throw Error(ErrorKind::InvalidInvolution,
                "s0 = " + format_element(s0) + " is not an involution");
  const auto period =
      std::lcm(std::lcm(order_of(g, s), order_of(g, sp)), std::int64_t{2});
  std::set<Element> out;
  for (std::int64_t r = 0; r < period; ++r) {
    auto x = add(g, scale(g, 3 * i + a * r, s), scale(g, r, sp));
    out.insert(add(g, x, scale(g, r + j, s0)));
  }
  return {out.begin(), out.end()};
}

}  // namespace quintic
