// Runs every acceptance criterion at zero tolerance and prints one
// PASS/FAIL line per criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/classify.hpp"
#include "quintic/codes.hpp"
#include "quintic/constructions.hpp"
#include "quintic/error.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sweep.hpp"

using namespace quintic;

namespace {

constexpr std::int64_t kMaxOrder = 48;
constexpr std::int64_t kInvolutionMaxOrder = 36;
const std::vector<std::int64_t> kGridM{6, 12, 18};
constexpr std::int64_t kGridMaxL = 6;
constexpr int kNaiveMaxVertices = 18;
constexpr std::size_t kShownCounterexamples = 10;

int failures = 0;

void report(int number, bool pass, const std::string &title,
            const std::string &detail) {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  "
            << title << " (" << detail << ")" << std::endl;
  if (!pass) ++failures;
}

void show(const std::vector<std::string> &lines) {
  for (std::size_t i = 0; i < lines.size() && i < kShownCounterexamples; ++i)
    std::cout << "    " << lines[i] << "\n";
  if (lines.size() > kShownCounterexamples)
    std::cout << "    ... " << lines.size() - kShownCounterexamples << " more\n";
}

std::vector<std::string> counterexamples_of(const SweepReport &r,
                                            const std::vector<std::string> &checks) {
  std::vector<std::string> out;
  for (const auto &c : r.counterexamples)
    if (std::find(checks.begin(), checks.end(), c.check) != checks.end())
      out.push_back("[" + c.check + "] " + c.instance + ": " + c.detail);
  return out;
}

std::string grid_detail(const GridSweepReport &r) {
  std::ostringstream os;
  os << r.checked << " checked, " << r.failures << " failed, " << r.skipped
     << " skipped of " << r.parameter_sets << " parameter sets";
  return os.str();
}

std::vector<std::vector<Element>> elements(const GroupSpec &g,
                                           const std::vector<VertexSet> &codes) {
  std::vector<std::vector<Element>> out;
  for (const auto &c : codes) {
    std::vector<Element> code;
    for (int v : c) code.push_back(g.element_at(v));
    out.push_back(code);
  }
  return out;
}

bool desk_fixtures(std::string &detail) {
  std::vector<std::string> failed;
  {
    const auto g = GroupSpec::parse("Z6");
    const auto s = g.parse_element_list("(1);(5);(2);(4);(3)");
    const auto verdict = admits_perfect_code(g, s);
    const std::vector<std::vector<Element>> expected{{g.make({0})}};
    if (!verdict.admits || enumerate_identity_codes(g, s) != expected ||
        elements(g, enumerate_perfect_codes(cayley(g, s), 0)) != expected)
      failed.push_back("complete graph on Z6");
  }
  {
    const auto g = GroupSpec::parse("Z6xZ2");
    const auto s = g.parse_element_list("(1,0);(5,0);(2,0);(4,0);(0,1)");
    const auto verdict = admits_perfect_code(g, s);
    const std::vector<std::vector<Element>> expected{{g.make({0, 0}), g.make({3, 1})}};
    if (!verdict.admits || enumerate_identity_codes(g, s) != expected ||
        elements(g, enumerate_perfect_codes(cayley(g, s), 0)) != expected)
      failed.push_back("prism on Z6xZ2");
  }
  {
    const auto host = gamma_dprime(6, 2, 4);
    const auto code = half_turn_code({6, 2, 4, -1, {0, 0}});
    const VertexSet expected({*host.find_label({0, 0}), *host.find_label({3, 0})});
    if (code != expected || !is_perfect_code(host, code))
      failed.push_back("twisted matching graph (6,2,4), a=-1, t=00");
  }
  detail = failed.empty() ? "3 fixtures reproduced" : "failed:";
  for (const auto &f : failed) detail += " " + f + ";";
  return failed.empty();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    SweepOptions opt;
    opt.max_order = kMaxOrder;
    opt.filter = InvolutionFilter::All;
    opt.involution_max_order = kInvolutionMaxOrder;
    const auto sweep = run_sweep(opt);
    std::cout << format_summary(SweepReport{
        sweep.max_order, sweep.instances, sweep.admitting, sweep.direct_route,
        sweep.isomorphism_route, sweep.involution_route, sweep.two_sign,
        sweep.equivalence_failures, sweep.completeness_checked,
        sweep.completeness_failures, sweep.involution_checked,
        sweep.involution_failures, sweep.parity_checked, sweep.parity_failures,
        sweep.errors, {}});

    report(1, sweep.equivalence_pass(),
           "classifier agrees with the oracle on every instance of order <= 48",
           std::to_string(sweep.instances) + " instances, " +
               std::to_string(sweep.equivalence_failures) + " disagreements");
    show(counterexamples_of(sweep, {"equivalence", "error"}));

    report(2, sweep.completeness_pass() && sweep.completeness_checked > 0,
           "identity-code enumeration equals the oracle on every instance with a code",
           std::to_string(sweep.completeness_checked) + " checked, " +
               std::to_string(sweep.completeness_failures) + " failed");
    show(counterexamples_of(sweep, {"completeness"}));

    const auto p23 = code_family_sweep(CodeFamily::Prism, kGridM, kGridMaxL);
    report(3, p23.pass(), "gamma x K2 code family is perfect with ml/3 vertices",
           grid_detail(p23));
    show(p23.counterexamples);

    const auto p27 = code_family_sweep(CodeFamily::Antipodal, kGridM, kGridMaxL);
    const auto p210 = code_family_sweep(CodeFamily::HalfTurn, kGridM, kGridMaxL);
    report(4, p27.pass() && p210.pass(),
           "gamma-prime and gamma-dprime code families are perfect with ml/6 vertices",
           "gamma-prime: " + grid_detail(p27) + "; gamma-dprime: " + grid_detail(p210));
    show(p27.counterexamples);
    show(p210.counterexamples);

    const auto phi = phi_sweep(kGridM, kGridMaxL);
    report(5, phi.pass(), "phi is an isomorphism onto the Cayley form whenever integral",
           grid_detail(phi));
    show(phi.counterexamples);

    report(6, sweep.involution_pass() && sweep.involution_checked > 0,
           "no perfect code when S has 3 or 5 involutions, order <= 36",
           std::to_string(sweep.involution_checked) + " checked, " +
               std::to_string(sweep.involution_failures) + " with a code");
    show(counterexamples_of(sweep, {"involutions"}));

    std::string desk;
    report(7, desk_fixtures(desk), "desk fixtures", desk);

    const auto naive = oracle_consistency_sweep(kNaiveMaxVertices);
    report(8, naive.pass(), "backtracking enumeration equals naive subsets, <= 18 vertices",
           grid_detail(naive));
    show(naive.counterexamples);
  } catch (const std::exception &e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << static_cast<int>(secs) << " s\n";
  return failures == 0 ? 0 : 1;
}
