#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quintic/abelian.hpp"
#include "quintic/codes.hpp"

namespace quintic {

enum class InvolutionFilter { One, Three, Five, All };

std::optional<InvolutionFilter> parse_involution_filter(std::string_view text);
std::string_view to_string(InvolutionFilter f);

/// Unordered factorizations of n into factors >= 2, each non-decreasing,
/// listed lexicographically. n = 1 yields nothing.
std::vector<std::vector<std::int64_t>> factorizations(std::int64_t n);

struct Instance {
  GroupSpec group;
  std::vector<Element> set;  // sorted by group index
  int involution_count = 0;
};

std::string describe(const Instance &inst);

/// Every inverse-closed generating 5-subset of G without the identity whose
/// involution count passes the filter, in lexicographic order of the
/// sorted index tuple.
std::vector<Instance> quintic_instances(const GroupSpec &g,
                                        InvolutionFilter filter);

/// quintic_instances over every factorization of every order up to
/// max_order.
std::vector<Instance> all_instances(std::int64_t max_order,
                                    InvolutionFilter filter);

struct Counterexample {
  std::string check;
  std::string instance;
  std::string detail;
};

struct SweepOptions {
  std::int64_t max_order = 24;
  InvolutionFilter filter = InvolutionFilter::All;
  /// Orders up to which instances with 3 or 5 involutions are checked
  /// against the oracle for the absence of codes.
  std::int64_t involution_max_order = 36;
  bool check_completeness = true;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SweepReport {
  std::int64_t max_order = 0;
  std::size_t instances = 0;
  std::size_t admitting = 0;
  std::size_t direct_route = 0;
  std::size_t isomorphism_route = 0;
  std::size_t involution_route = 0;
  /// Admitting instances where both signs are valid in one orientation.
  std::size_t two_sign = 0;
  std::size_t equivalence_failures = 0;
  std::size_t completeness_checked = 0;
  std::size_t completeness_failures = 0;
  std::size_t involution_checked = 0;
  std::size_t involution_failures = 0;
  std::size_t parity_checked = 0;
  std::size_t parity_failures = 0;
  std::size_t errors = 0;
  std::vector<Counterexample> counterexamples;

  bool equivalence_pass() const {
    return instances > 0 && equivalence_failures == 0 && errors == 0;
  }
  bool completeness_pass() const {
    return completeness_failures == 0 && errors == 0;
  }
  bool involution_pass() const { return involution_failures == 0; }
  bool pass() const {
    return equivalence_pass() && completeness_pass() && involution_pass() &&
           parity_failures == 0;
  }
};

/// Classifies every instance up to max_order and checks it against the
/// exact-cover oracle. Results are merged in instance order, so the report
/// does not depend on the thread count.
SweepReport run_sweep(const SweepOptions &options);

std::string format_summary(const SweepReport &report);

/// Outcome of a parameter sweep over the grid constructions.
struct GridSweepReport {
  std::size_t parameter_sets = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return checked > 0 && failures == 0; }
};

/// Every (m, l, h, a) with m in m_values, 1 <= l <= max_l, 0 <= h < m that
/// satisfies the family's hypotheses, with every t vector: the code must be
/// a perfect code of its host graph of size ml/3 (x K2 family) or ml/6.
GridSweepReport code_family_sweep(CodeFamily family,
                                  const std::vector<std::int64_t> &m_values,
                                  std::int64_t max_l);

/// For every family and every (m, l, h) in range with tau(h, l) | h and a
/// well-defined construction, phi must be an adjacency-preserving
/// bijection onto the Cayley form.
GridSweepReport phi_sweep(const std::vector<std::int64_t> &m_values,
                          std::int64_t max_l);

/// Backtracking enumeration against the naive subset check on every sweep
/// instance and grid construction with at most max_vertices vertices.
GridSweepReport oracle_consistency_sweep(int max_vertices);

}  // namespace quintic
