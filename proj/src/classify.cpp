#include "quintic/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "quintic/codes.hpp"
#include "quintic/error.hpp"
#include "quintic/numtheory.hpp"

namespace quintic {

std::string_view to_string(Orientation o) {
  return o == Orientation::AsGiven ? "as-given" : "swapped";
}

std::string_view to_string(S0Category c) {
  switch (c) {
    case S0Category::Outside: return "OUTSIDE";
    case S0Category::HalfS: return "HALF_S";
    case S0Category::HalfSp: return "HALF_SP";
    case S0Category::HalfSum: return "HALF_SUM";
    case S0Category::OtherInSpan: return "OTHER_IN_SPAN";
  }
  return "?";
}

std::string_view to_string(CosetRange r) {
  return r == CosetRange::Third ? "third" : "sixth";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Direct: return "direct";
    case Route::Isomorphism: return "isomorphism";
    case Route::Involutions: return "involutions";
    case Route::None: return "none";
  }
  return "?";
}

GridParams derive_hl(const GroupSpec &g, const Element &s, const Element &sp) {
  const auto m = order_of(g, s);
  const auto n = order_of(g, sp);
  if (m <= 2 || n <= 2)
    throw Error(ErrorKind::InvalidInput,
                "derive_hl needs elements of order greater than 2");
  const std::array<Element, 1> gen{s};
  const auto cyclic = span(g, gen);
  for (std::int64_t l = 1; l <= n; ++l) {
    const auto target = negate(g, scale(g, l, sp));
    if (!std::binary_search(cyclic.begin(), cyclic.end(), target)) continue;
    for (std::int64_t h = 0; h < m; ++h)
      if (scale(g, h, s) == target) return GridParams{m, l, h};
  }
  throw Error(ErrorKind::InternalAssertion, "derive_hl found no relation");
}

namespace {

void validate_quintic(const GroupSpec &g, std::span<const Element> s) {
  for (const auto &x : s)
    if (x.residues.size() != g.rank())
      throw Error(ErrorKind::DimensionMismatch,
                  "element " + format_element(x) + " does not match " +
                      g.to_string());
  const auto report = validate_connection_set(g, s);
  if (s.size() != 5 || report.distinct_count != 5)
    throw Error(ErrorKind::NotQuintic,
                "connection set must have exactly 5 distinct elements");
  if (!report.excludes_identity)
    throw Error(ErrorKind::ContainsIdentity, "connection set contains 0");
  if (!report.inverse_closed)
    throw Error(ErrorKind::NotInverseClosed,
                "connection set is not inverse-closed");
  if (!report.generates)
    throw Error(ErrorKind::NotGenerating,
                "connection set does not generate " + g.to_string());
}

S0Category categorize(const GroupSpec &g, const Element &s, const Element &sp,
                      const Element &s0) {
  const std::array<Element, 2> gens{s, sp};
  const auto plane = span(g, gens);
  if (!std::binary_search(plane.begin(), plane.end(), s0))
    return S0Category::Outside;
  const auto m = order_of(g, s);
  const auto n = order_of(g, sp);
  if (m % 2 == 0 && s0 == scale(g, m / 2, s)) return S0Category::HalfS;
  if (n % 2 == 0 && s0 == scale(g, n / 2, sp)) return S0Category::HalfSp;
  if (m % 2 == 0 && n % 2 == 0 &&
      s0 == add(g, scale(g, m / 2, s), scale(g, n / 2, sp)))
    return S0Category::HalfSum;
  return S0Category::OtherInSpan;
}

NormalizedSet make_normalized(const GroupSpec &g, const Element &s,
                              const Element &sp, const Element &s0,
                              Orientation o) {
  NormalizedSet ns;
  ns.s = s;
  ns.sp = sp;
  ns.s0 = s0;
  const auto p = derive_hl(g, s, sp);
  ns.m = p.m;
  ns.l = p.l;
  ns.h = p.h;
  ns.category = categorize(g, s, sp, s0);
  ns.orientation = o;
  return ns;
}

CosetRange range_for(GraphCase c, const GridParams &p) {
  switch (c) {
    case GraphCase::I: return CosetRange::Third;
    case GraphCase::II:
      return sigma2(p.l) == 0 ? CosetRange::Third : CosetRange::Sixth;
    case GraphCase::III:
      return sigma2(p.m) == 1 && sigma2(p.l) == 1 ? CosetRange::Third
                                                  : CosetRange::Sixth;
  }
  return CosetRange::Third;
}

std::optional<GraphCase> case_for(const GroupSpec &g, const NormalizedSet &ns) {
  switch (ns.category) {
    case S0Category::Outside: return GraphCase::I;
    case S0Category::HalfS: return GraphCase::II;
    case S0Category::HalfSum:
      if (sigma2(ns.m) >= sigma2(order_of(g, ns.sp))) return GraphCase::III;
      return std::nullopt;
    case S0Category::HalfSp:
    case S0Category::OtherInSpan: return std::nullopt;
  }
  return std::nullopt;
}

// BFS layer sizes from vertex 0; equal for isomorphic vertex-transitive graphs.
std::vector<int> distance_profile(const Graph &graph) {
  const int n = graph.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<int> queue{0};
  dist[0] = 0;
  std::vector<int> profile{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : graph.neighbors(u)) {
      if (dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      if (static_cast<int>(profile.size()) <= dist[v]) profile.push_back(0);
      ++profile[dist[v]];
      queue.push_back(v);
    }
  }
  return profile;
}

struct CatalogEntry {
  GraphCase case_tag;
  GridParams params;
  CayleyForm form;
  Graph graph;
  std::vector<int> profile;
};

// Every canonical form of the classification with |G| == order, in
// (case, m, h) order.
const std::vector<CatalogEntry> &catalog(std::int64_t order) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<CatalogEntry>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> entries;
  for (auto c : {GraphCase::I, GraphCase::II, GraphCase::III}) {
    const std::int64_t vertices_per_grid = c == GraphCase::I ? order / 2 : order;
    if (c == GraphCase::I && order % 2 != 0) continue;
    for (std::int64_t m = 6; m <= vertices_per_grid; m += 6) {
      if (vertices_per_grid % m != 0) continue;
      const auto l = vertices_per_grid / m;
      for (std::int64_t h = 0; h < m; ++h) {
        if (valid_signs(c, m, l, h).empty()) continue;
        try {
          auto form = cayley_form(family_of(c), m, l, h);
          auto graph = cayley(form.group, form.set);
          auto profile = distance_profile(graph);
          entries.push_back(CatalogEntry{c, GridParams{m, l, h}, std::move(form),
                                         std::move(graph), std::move(profile)});
        } catch (const Error &) {
          // Non-integral or degenerate parameters have no Cayley form.
        }
      }
    }
  }
  return cache.emplace(order, std::move(entries)).first->second;
}

void summarize(Classification &out) {
  if (out.witnesses.empty()) return;
  const auto &first = out.witnesses.front();
  out.admits = true;
  out.route = Route::Direct;
  out.case_tag = first.case_tag;
  out.params = first.params;
  out.orientation = first.orientation;
  out.coset_range = first.range;
  for (const auto &w : out.witnesses)
    if (w.orientation == first.orientation) out.sign_set.push_back(w.a);
  std::sort(out.sign_set.begin(), out.sign_set.end());
}

}  // namespace

Normalization normalize(const GroupSpec &g, std::span<const Element> s) {
  validate_quintic(g, s);
  std::vector<Element> invs;
  std::vector<Element> reps;
  for (const auto &x : s) {
    if (order_of(g, x) == 2) {
      invs.push_back(x);
      continue;
    }
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Element &r) {
      return r == x || negate(g, r) == x;
    });
    if (!seen) reps.push_back(x);
  }
  if (invs.size() != 1)
    return TooManyInvolutions{static_cast<int>(invs.size())};
  const auto &s0 = invs.front();
  return std::array<NormalizedSet, 2>{
      make_normalized(g, reps[0], reps[1], s0, Orientation::AsGiven),
      make_normalized(g, reps[1], reps[0], s0, Orientation::Swapped)};
}

Classification admits_perfect_code(const GroupSpec &g,
                                   std::span<const Element> s) {
  Classification out;
  const auto normalized = normalize(g, s);
  if (const auto *many = std::get_if<TooManyInvolutions>(&normalized)) {
    out.route = Route::Involutions;
    out.involution_count = many->involution_count;
    return out;
  }
  out.involution_count = 1;
  const auto &pair = std::get<std::array<NormalizedSet, 2>>(normalized);
  bool uncategorised = true;
  for (const auto &ns : pair) {
    if (ns.category != S0Category::OtherInSpan) uncategorised = false;
    const auto c = case_for(g, ns);
    if (!c) continue;
    const GridParams p{ns.m, ns.l, ns.h};
    for (int a : {-1, 1}) {
      if (!case_conditions_hold(*c, p.m, p.l, p.h, a)) continue;
      out.witnesses.push_back(Witness{ns.orientation, a, *c, p, range_for(*c, p),
                                      ns.s, ns.sp, ns.s0});
    }
  }
  summarize(out);
  if (out.admits || !uncategorised) return out;

  // s0 lies in <s, s'> but is none of the three standard involutions. The
  // case dispatch does not reach this configuration, so decide it by
  // comparing Cay(G, S) against every canonical form of the same order.
  const auto instance = cayley(g, s);
  const auto profile = distance_profile(instance);
  for (const auto &entry : catalog(g.order())) {
    if (entry.profile != profile) continue;
    auto map = find_isomorphism(entry.graph, instance, std::pair{0, 0});
    if (!map) continue;
    out.admits = true;
    out.route = Route::Isomorphism;
    out.case_tag = entry.case_tag;
    out.params = entry.params;
    out.sign_set = valid_signs(entry.case_tag, entry.params.m, entry.params.l,
                               entry.params.h);
    out.coset_range = range_for(entry.case_tag, entry.params);
    out.canonical = entry.form;
    out.canonical_to_instance = std::move(*map);
    return out;
  }
  return out;
}

std::vector<std::vector<Element>> enumerate_identity_codes(
    const GroupSpec &g, std::span<const Element> s) {
  return enumerate_identity_codes(g, s, admits_perfect_code(g, s));
}

std::vector<std::vector<Element>> enumerate_identity_codes(
    const GroupSpec &g, std::span<const Element> s,
    const Classification &verdict) {
  if (!verdict.admits) return {};
  const auto graph = cayley(g, s);
  std::set<VertexSet> codes;

  if (verdict.route == Route::Isomorphism) {
    const auto &form = *verdict.canonical;
    const auto inner = admits_perfect_code(form.group, form.set);
    if (inner.route != Route::Direct)
      throw Error(ErrorKind::InternalAssertion,
                  "canonical form is not classified directly");
    for (const auto &code : enumerate_identity_codes(form.group, form.set, inner)) {
      std::vector<int> mapped;
      for (const auto &x : code)
        mapped.push_back(
            verdict.canonical_to_instance[form.group.index_of(x)]);
      codes.insert(VertexSet(std::move(mapped)));
    }
  } else {
    for (const auto &w : verdict.witnesses) {
      const auto b = gcd0(w.params.l - w.a * w.params.h, w.params.m);
      const auto cosets = w.range == CosetRange::Third ? b / 3 : b / 6;
      if (cosets < 1)
        throw Error(ErrorKind::InternalAssertion, "empty coset range");
      if (cosets - 1 > 24)
        throw Error(ErrorKind::InvalidInput,
                    "too many j-vectors to enumerate (" + std::to_string(cosets) +
                        " cosets)");
      // coset_members[i][j]: vertex indices of D^a(i, j)
      std::vector<std::array<std::vector<int>, 2>> coset_members(cosets);
      for (std::int64_t i = 0; i < cosets; ++i)
        for (int j = 0; j < 2; ++j)
          for (const auto &x : d_coset(g, w.s, w.sp, w.s0, w.a, i, j))
            coset_members[i][j].push_back(static_cast<int>(g.index_of(x)));
      const std::uint64_t combos = std::uint64_t{1} << (cosets - 1);
      for (std::uint64_t bits = 0; bits < combos; ++bits) {
        std::vector<int> members = coset_members[0][0];
        for (std::int64_t i = 1; i < cosets; ++i) {
          const auto &part = coset_members[i][(bits >> (i - 1)) & 1];
          members.insert(members.end(), part.begin(), part.end());
        }
        codes.insert(VertexSet(std::move(members)));
      }
    }
  }

  std::vector<std::vector<Element>> out;
  for (const auto &code : codes) {
    if (!code.contains(0) || !is_perfect_code(graph, code))
      throw Error(ErrorKind::InternalAssertion,
                  "identity-code enumeration produced a set that is not a "
                  "perfect code containing 0");
    std::vector<Element> elems;
    for (int v : code) elems.push_back(g.element_at(static_cast<std::size_t>(v)));
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CodeStructureReport code_structure_report(const GroupSpec &g,
                                          std::span<const Element> s,
                                          std::span<const Element> d) {
  const auto graph = cayley(g, s);
  std::vector<int> members;
  for (const auto &x : d) {
    if (!g.contains(x))
      throw Error(ErrorKind::NotAPerfectCode,
                  format_element(x) + " is not an element of " + g.to_string());
    members.push_back(static_cast<int>(g.index_of(x)));
  }
  const VertexSet code(members);
  if (!code.contains(0) || !is_perfect_code(graph, code))
    throw Error(ErrorKind::NotAPerfectCode,
                "D is not a perfect code containing the identity");
  const auto normalized = normalize(g, s);
  const auto *pair = std::get_if<std::array<NormalizedSet, 2>>(&normalized);
  if (!pair)
    throw Error(ErrorKind::InternalAssertion,
                "perfect code found although S has several involutions");

  CodeStructureReport report;
  report.basis = (*pair)[0];
  const auto &b = report.basis;
  const std::set<Element> in_d(d.begin(), d.end());
  auto all = [&](auto &&pred) {
    return std::all_of(in_d.begin(), in_d.end(), pred);
  };
  for (int a : {-1, 1}) {
    const auto step = add(g, add(g, scale(g, a, b.s), b.sp), b.s0);
    if (all([&](const Element &x) { return in_d.contains(add(g, x, step)); }))
      report.diagonal_signs.push_back(a);
  }
  auto step3 = [&](const Element &dir) {
    const auto back = scale(g, -3, dir);
    const auto back_flip = add(g, back, b.s0);
    return all([&](const Element &x) {
      return in_d.contains(add(g, x, back)) || in_d.contains(add(g, x, back_flip));
    });
  };
  report.step3_along_s = step3(b.s);
  report.step3_along_sp = step3(b.sp);
  report.order_product_even = (order_of(g, b.s) * order_of(g, b.sp)) % 2 == 0;
  return report;
}

}  // namespace quintic
