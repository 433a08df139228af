#include "quintic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "quintic/classify.hpp"
#include "quintic/constructions.hpp"
#include "quintic/error.hpp"
#include "quintic/graph.hpp"
#include "quintic/numtheory.hpp"
#include "quintic/oracle.hpp"

namespace quintic {

std::optional<InvolutionFilter> parse_involution_filter(std::string_view text) {
  if (text == "1") return InvolutionFilter::One;
  if (text == "3") return InvolutionFilter::Three;
  if (text == "5") return InvolutionFilter::Five;
  if (text == "all") return InvolutionFilter::All;
  return std::nullopt;
}

std::string_view to_string(InvolutionFilter f) {
  switch (f) {
    case InvolutionFilter::One: return "1";
    case InvolutionFilter::Three: return "3";
    case InvolutionFilter::Five: return "5";
    case InvolutionFilter::All: return "all";
  }
  return "?";
}

namespace {

void factor_into(std::int64_t n, std::int64_t least,
                 std::vector<std::int64_t> &prefix,
                 std::vector<std::vector<std::int64_t>> &out) {
  if (n == 1) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (std::int64_t f = least; f <= n; ++f) {
    if (n % f != 0) continue;
    prefix.push_back(f);
    factor_into(n / f, f, prefix, out);
    prefix.pop_back();
  }
}

bool filter_accepts(InvolutionFilter f, int count) {
  switch (f) {
    case InvolutionFilter::One: return count == 1;
    case InvolutionFilter::Three: return count == 3;
    case InvolutionFilter::Five: return count == 5;
    case InvolutionFilter::All: return true;
  }
  return false;
}

// Runs job(i) for i in [0, count) on a small pool; results are indexed, so
// the interleaving never shows up in the output.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  for (auto &th : pool) th.join();
}

std::string format_codes(const std::vector<VertexSet> &codes) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) os << ' ';
    os << '{';
    bool first = true;
    for (int v : codes[i]) {
      os << (first ? "" : ",") << v;
      first = false;
    }
    os << '}';
  }
  os << ']';
  return os.str();
}

struct InstanceOutcome {
  bool admits = false;
  Route route = Route::None;
  bool two_sign = false;
  bool equivalence_ok = true;
  bool completeness_checked = false;
  bool completeness_ok = true;
  bool involution_checked = false;
  bool involution_ok = true;
  bool parity_checked = false;
  bool parity_ok = true;
  std::vector<Counterexample> problems;
};

InstanceOutcome check_instance(const Instance &inst, const SweepOptions &opt) {
  InstanceOutcome out;
  const auto name = describe(inst);
  try {
    const auto graph = cayley(inst.group, inst.set);
    const auto verdict = admits_perfect_code(inst.group, inst.set);
    out.admits = verdict.admits;
    out.route = verdict.route;
    out.two_sign = verdict.sign_set.size() == 2;
    const bool oracle_has = find_perfect_code(graph).has_value();
    if (oracle_has != verdict.admits) {
      out.equivalence_ok = false;
      out.problems.push_back({"equivalence", name,
                              std::string("classifier ") +
                                  (verdict.admits ? "admits" : "rejects") +
                                  ", oracle " +
                                  (oracle_has ? "finds a code" : "finds none")});
    }
    if (inst.involution_count != 1 &&
        inst.group.order() <= opt.involution_max_order) {
      out.involution_checked = true;
      if (oracle_has) {
        out.involution_ok = false;
        out.problems.push_back({"involutions", name,
                                "oracle finds a code although S has " +
                                    std::to_string(inst.involution_count) +
                                    " involutions"});
      }
    }
    if (verdict.admits && inst.involution_count == 1) {
      const auto normalized = normalize(inst.group, inst.set);
      const auto &pair = std::get<std::array<NormalizedSet, 2>>(normalized);
      out.parity_checked = true;
      const auto product = order_of(inst.group, pair[0].s) *
                           order_of(inst.group, pair[0].sp);
      if (product % 2 != 0) {
        out.parity_ok = false;
        out.problems.push_back({"parity", name, "o(s) o(s') is odd"});
      }
    }
    // Checked whenever a code exists, so an instance the classifier misses
    // also counts against completeness.
    if (opt.check_completeness && (verdict.admits || oracle_has) &&
        inst.involution_count == 1) {
      out.completeness_checked = true;
      std::vector<VertexSet> mine;
      for (const auto &code :
           enumerate_identity_codes(inst.group, inst.set, verdict)) {
        std::vector<int> members;
        for (const auto &x : code)
          members.push_back(static_cast<int>(inst.group.index_of(x)));
        mine.emplace_back(std::move(members));
      }
      std::sort(mine.begin(), mine.end());
      const auto oracle = enumerate_perfect_codes(graph, 0);
      if (mine != oracle) {
        out.completeness_ok = false;
        out.problems.push_back({"completeness", name,
                                "enumerated " + format_codes(mine) +
                                    ", oracle " + format_codes(oracle)});
      }
    }
  } catch (const Error &e) {
    out.equivalence_ok = false;
    out.problems.push_back({"error", name,
                            std::string(to_string(e.kind())) + ": " + e.what()});
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> factorizations(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  if (n >= 2) factor_into(n, 2, prefix, out);
  return out;
}

std::string describe(const Instance &inst) {
  std::string out = inst.group.to_string() + " {";
  for (std::size_t i = 0; i < inst.set.size(); ++i) {
    if (i) out += ';';
    out += format_element(inst.set[i]);
  }
  return out + "}";
}

std::vector<Instance> quintic_instances(const GroupSpec &g,
                                        InvolutionFilter filter) {
  const auto n = static_cast<int>(g.order());
  std::vector<int> invs;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) {
    const auto x = g.element_at(i);
    const auto j = static_cast<int>(g.index_of(negate(g, x)));
    if (j == i)
      invs.push_back(i);
    else if (i < j)
      pairs.emplace_back(i, j);
  }

  std::vector<std::vector<int>> candidates;
  auto choose = [](int total, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(pick.size()) == k) {
        out.push_back(pick);
        return;
      }
      for (int i = from; i < total; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    return out;
  };
  for (int pair_count : {2, 1, 0}) {
    const int inv_count = 5 - 2 * pair_count;
    if (!filter_accepts(filter, inv_count)) continue;
    const auto pair_picks = choose(static_cast<int>(pairs.size()), pair_count);
    const auto inv_picks = choose(static_cast<int>(invs.size()), inv_count);
    for (const auto &pp : pair_picks)
      for (const auto &ip : inv_picks) {
        std::vector<int> idx;
        for (int p : pp) {
          idx.push_back(pairs[p].first);
          idx.push_back(pairs[p].second);
        }
        for (int i : ip) idx.push_back(invs[i]);
        std::sort(idx.begin(), idx.end());
        candidates.push_back(std::move(idx));
      }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<Instance> out;
  for (const auto &idx : candidates) {
    Instance inst{g, {}, 0};
    for (int i : idx) inst.set.push_back(g.element_at(i));
    if (static_cast<std::int64_t>(span(g, inst.set).size()) != g.order())
      continue;
    for (const auto &x : inst.set)
      if (order_of(g, x) == 2) ++inst.involution_count;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> all_instances(std::int64_t max_order,
                                    InvolutionFilter filter) {
  std::vector<Instance> out;
  for (std::int64_t n = 2; n <= max_order; ++n)
    for (const auto &factors : factorizations(n)) {
      auto batch = quintic_instances(GroupSpec(factors), filter);
      std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
  return out;
}

SweepReport run_sweep(const SweepOptions &options) {
  if (options.max_order < 1)
    throw Error(ErrorKind::InvalidInput, "max order must be positive");
  const auto instances = all_instances(options.max_order, options.filter);
  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_for(instances.size(), options.threads, [&](std::size_t i) {
    outcomes[i] = check_instance(instances[i], options);
  });

  SweepReport r;
  r.max_order = options.max_order;
  r.instances = instances.size();
  for (const auto &o : outcomes) {
    if (o.admits) ++r.admitting;
    switch (o.route) {
      case Route::Direct: ++r.direct_route; break;
      case Route::Isomorphism: ++r.isomorphism_route; break;
      case Route::Involutions: ++r.involution_route; break;
      case Route::None: break;
    }
    if (o.two_sign) ++r.two_sign;
    if (!o.equivalence_ok) ++r.equivalence_failures;
    if (o.completeness_checked) ++r.completeness_checked;
    if (!o.completeness_ok) ++r.completeness_failures;
    if (o.involution_checked) ++r.involution_checked;
    if (!o.involution_ok) ++r.involution_failures;
    if (o.parity_checked) ++r.parity_checked;
    if (!o.parity_ok) ++r.parity_failures;
    for (const auto &p : o.problems) {
      if (p.check == "error") ++r.errors;
      r.counterexamples.push_back(p);
    }
  }
  return r;
}

std::string format_summary(const SweepReport &r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << " sweep up to order " << r.max_order
     << "\n"
     << "instances: " << r.instances << "\n"
     << "admitting: " << r.admitting << " (direct " << r.direct_route
     << ", isomorphism " << r.isomorphism_route << ")\n"
     << "rejected by involution count: " << r.involution_route << "\n"
     << "both signs valid: " << r.two_sign << "\n"
     << "equivalence failures: " << r.equivalence_failures << "\n"
     << "completeness: " << r.completeness_checked << " checked, "
     << r.completeness_failures << " failed\n"
     << "involution check: " << r.involution_checked << " checked, "
     << r.involution_failures << " failed\n"
     << "parity check: " << r.parity_checked << " checked, "
     << r.parity_failures << " failed\n"
     << "errors: " << r.errors << "\n";
  for (const auto &c : r.counterexamples)
    os << "counterexample [" << c.check << "] " << c.instance << ": "
       << c.detail << "\n";
  return os.str();
}

GridSweepReport code_family_sweep(CodeFamily family,
                                  const std::vector<std::int64_t> &m_values,
                                  std::int64_t max_l) {
  GridSweepReport r;
  const bool doubled = family == CodeFamily::Prism;
  for (auto m : m_values)
    for (std::int64_t l = 1; l <= max_l; ++l)
      for (std::int64_t h = 0; h < m; ++h)
        for (int a : {-1, 1}) {
          CodeFamilyParams p{m, l, h, a, {}};
          if (!code_hypotheses_hold(family, p)) continue;
          ++r.parameter_sets;
          const auto host = construct(host_family(family), GridParams{m, l, h});
          const auto len = t_length(family, p);
          const auto expected = static_cast<std::size_t>(doubled ? m * l / 3 : m * l / 6);
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            p.t.assign(len, 0);
            for (std::size_t r_idx = 0; r_idx < len; ++r_idx)
              p.t[r_idx] = static_cast<int>((bits >> r_idx) & 1);
            ++r.checked;
            const auto code = generate_code(family, p);
            if (code.size() != expected || !is_perfect_code(host, code)) {
              ++r.failures;
              std::ostringstream os;
              os << to_string(family) << " m=" << m << " l=" << l << " h=" << h
                 << " a=" << a << " t=";
              for (int b : p.t) os << b;
              os << " size=" << code.size();
              r.counterexamples.push_back(os.str());
            }
          }
        }
  return r;
}

GridSweepReport phi_sweep(const std::vector<std::int64_t> &m_values,
                          std::int64_t max_l) {
  GridSweepReport r;
  for (auto family : {Family::Gamma, Family::GammaK2, Family::GammaPrime,
                      Family::GammaDPrime})
    for (auto m : m_values)
      for (std::int64_t l = 1; l <= max_l; ++l)
        for (std::int64_t h = 0; h < m; ++h) {
          ++r.parameter_sets;
          if (h % tau(h, l) != 0) {
            ++r.skipped;
            continue;
          }
          const GridParams p{m, l, h};
          try {
            construct(family, p);
            cayley_form(family, m, l, h);
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateParameters) throw;
            ++r.skipped;
            continue;
          }
          ++r.checked;
          if (!verify_phi(family, p)) {
            ++r.failures;
            r.counterexamples.push_back(std::string(to_string(family)) +
                                        " m=" + std::to_string(m) +
                                        " l=" + std::to_string(l) +
                                        " h=" + std::to_string(h));
          }
        }
  return r;
}

GridSweepReport oracle_consistency_sweep(int max_vertices) {
  GridSweepReport r;
  auto check = [&](const Graph &g, const std::string &name) {
    ++r.checked;
    if (enumerate_perfect_codes(g) != enumerate_perfect_codes_naive(g)) {
      ++r.failures;
      r.counterexamples.push_back(name);
    }
  };
  for (const auto &inst : all_instances(max_vertices, InvolutionFilter::All)) {
    ++r.parameter_sets;
    check(cayley(inst.group, inst.set), describe(inst));
  }
  for (auto family : {Family::Gamma, Family::GammaK2, Family::GammaPrime,
                      Family::GammaDPrime})
    for (std::int64_t m = 3; m <= max_vertices; ++m)
      for (std::int64_t l = 1; m * l <= max_vertices; ++l)
        for (std::int64_t h = 0; h < m; ++h) {
          const auto vertices = (family == Family::GammaK2 ? 2 : 1) * m * l;
          if (vertices > max_vertices) continue;
          ++r.parameter_sets;
          Graph g;
          try {
            g = construct(family, GridParams{m, l, h});
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateParameters) throw;
            ++r.skipped;
            continue;
          }
          check(g, std::string(to_string(family)) + " m=" + std::to_string(m) +
                       " l=" + std::to_string(l) + " h=" + std::to_string(h));
        }
  return r;
}

}  // namespace quintic
