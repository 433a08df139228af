#include "quintic/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "quintic/classify.hpp"
#include "quintic/codes.hpp"
#include "quintic/constructions.hpp"
#include "quintic/error.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sweep.hpp"

namespace quintic {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInternal = 2;

struct InstanceArgs {
  std::string group;
  std::string set;
};

void add_instance_options(CLI::App *cmd, InstanceArgs &args) {
  cmd->add_option("--group", args.group, "group, e.g. Z6xZ2")->required();
  cmd->add_option("--set", args.set, "elements separated by ';'")->required();
}

std::string join_codes(const std::vector<Element> &code) {
  std::string out = "{";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ';';
    out += format_element(code[i]);
  }
  return out + "}";
}

std::vector<Element> to_elements(const GroupSpec &g, const VertexSet &c) {
  std::vector<Element> out;
  for (int v : c) out.push_back(g.element_at(static_cast<std::size_t>(v)));
  return out;
}

json verdict_json(const Classification &c,
                  const std::vector<std::vector<Element>> &codes) {
  json j;
  j["admits"] = c.admits;
  j["case"] = c.case_tag ? json(std::string(to_string(*c.case_tag))) : json();
  j["m"] = c.params ? json(c.params->m) : json();
  j["l"] = c.params ? json(c.params->l) : json();
  j["h"] = c.params ? json(c.params->h) : json();
  j["a_set"] = c.sign_set;
  j["orientation"] =
      c.orientation ? json(std::string(to_string(*c.orientation))) : json();
  json list = json::array();
  for (const auto &code : codes) {
    json one = json::array();
    for (const auto &x : code) one.push_back(format_element(x));
    list.push_back(one);
  }
  j["codes_containing_identity"] = list;
  j["route"] = std::string(to_string(c.route));
  if (c.canonical) {
    j["canonical_group"] = c.canonical->group.to_string();
    json set = json::array();
    for (const auto &x : c.canonical->set) set.push_back(format_element(x));
    j["canonical_set"] = set;
  }
  return j;
}

void print_verdict(std::ostream &out, const Classification &c,
                   const std::vector<std::vector<Element>> &codes) {
  out << "admits: " << (c.admits ? "yes" : "no") << "\n";
  out << "route: " << to_string(c.route) << "\n";
  if (c.route == Route::Involutions)
    out << "involutions in S: " << c.involution_count << "\n";
  if (!c.admits) return;
  out << "case: " << to_string(*c.case_tag) << "\n";
  out << "m l h: " << c.params->m << ' ' << c.params->l << ' ' << c.params->h
      << "\n";
  out << "a:";
  for (int a : c.sign_set) out << ' ' << a;
  out << "\n";
  if (c.orientation) out << "orientation: " << to_string(*c.orientation) << "\n";
  if (c.canonical) {
    out << "canonical form: " << c.canonical->group.to_string() << ' '
        << join_codes(c.canonical->set) << "\n";
  }
  out << "codes containing identity: " << codes.size() << "\n";
  for (const auto &code : codes) out << "  " << join_codes(code) << "\n";
}

std::vector<int> parse_bits(const std::string &text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      bits.push_back(ch - '0');
    else if (ch != ',' && ch != ' ')
      throw Error(ErrorKind::InvalidInput,
                  "t must be a string of 0/1 bits, got '" + text + "'");
  }
  return bits;
}

json sweep_json(const SweepReport &r) {
  json j;
  j["pass"] = r.pass();
  j["max_order"] = r.max_order;
  j["instances"] = r.instances;
  j["admitting"] = r.admitting;
  j["direct_route"] = r.direct_route;
  j["isomorphism_route"] = r.isomorphism_route;
  j["involution_route"] = r.involution_route;
  j["both_signs_valid"] = r.two_sign;
  j["equivalence_failures"] = r.equivalence_failures;
  j["completeness_checked"] = r.completeness_checked;
  j["completeness_failures"] = r.completeness_failures;
  j["involution_checked"] = r.involution_checked;
  j["involution_failures"] = r.involution_failures;
  j["parity_checked"] = r.parity_checked;
  j["parity_failures"] = r.parity_failures;
  j["errors"] = r.errors;
  json list = json::array();
  for (const auto &c : r.counterexamples)
    list.push_back({{"check", c.check}, {"instance", c.instance}, {"detail", c.detail}});
  j["counterexamples"] = list;
  return j;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"perfect codes in quintic Cayley graphs on abelian groups",
               "quintic"};
  // --h is a parameter name, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  InstanceArgs classify_args;
  bool as_json = false;
  auto *classify_cmd = app.add_subcommand("classify", "decide whether Cay(G,S) has a perfect code");
  add_instance_options(classify_cmd, classify_args);
  classify_cmd->add_flag("--json", as_json, "print the verdict as JSON");

  InstanceArgs oracle_args;
  bool enumerate = false;
  std::string containing;
  auto *oracle_cmd = app.add_subcommand("oracle", "exact-cover search for perfect codes");
  add_instance_options(oracle_cmd, oracle_args);
  oracle_cmd->add_flag("--enumerate", enumerate, "list every perfect code");
  oracle_cmd->add_option("--containing", containing, "only codes containing this element");

  std::string family_name;
  std::string format_name = "edgelist";
  GridParams grid;
  auto *construct_cmd = app.add_subcommand("construct", "export a grid construction");
  construct_cmd->add_option("--family", family_name, "gamma|gamma-prime|gamma-dprime|gamma-k2")->required();
  construct_cmd->add_option("--m", grid.m)->required();
  construct_cmd->add_option("--l", grid.l)->required();
  construct_cmd->add_option("--h", grid.h)->required();
  construct_cmd->add_option("--format", format_name, "dot|edgelist");

  std::string prop_name;
  CodeFamilyParams code_params;
  std::string t_text;
  bool parametric = false;
  auto *codes_cmd = app.add_subcommand("codes", "generate an explicit perfect code");
  codes_cmd->add_option("--prop", prop_name, "2.3|2.7|2.10 (or prism|antipodal|half-turn)")->required();
  codes_cmd->add_option("--m", code_params.m)->required();
  codes_cmd->add_option("--l", code_params.l)->required();
  codes_cmd->add_option("--h", code_params.h)->required();
  codes_cmd->add_option("--a", code_params.a)->required();
  codes_cmd->add_option("--t", t_text, "bits t_0 t_1 ..., e.g. 01")->required();
  codes_cmd->add_flag("--parametric", parametric, "also compare with the set-builder form");

  std::int64_t max_order = 0;
  std::string involution_text = "all";
  std::string report_path;
  auto *sweep_cmd = app.add_subcommand("sweep", "check the classifier against the oracle");
  sweep_cmd->add_option("--max-order", max_order)->required();
  sweep_cmd->add_option("--involutions", involution_text, "1|3|5|all");
  sweep_cmd->add_option("--report", report_path, "write a JSON report");

  std::vector<std::string> argv_store{"quintic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*classify_cmd) {
      const auto g = GroupSpec::parse(classify_args.group);
      const auto s = g.parse_element_list(classify_args.set);
      const auto verdict = admits_perfect_code(g, s);
      const auto codes = enumerate_identity_codes(g, s, verdict);
      if (as_json)
        out << verdict_json(verdict, codes).dump(2) << "\n";
      else
        print_verdict(out, verdict, codes);
    } else if (*oracle_cmd) {
      const auto g = GroupSpec::parse(oracle_args.group);
      const auto s = g.parse_element_list(oracle_args.set);
      const auto graph = cayley(g, s);
      std::optional<int> pin;
      if (!containing.empty())
        pin = static_cast<int>(g.index_of(g.parse_element(containing)));
      if (enumerate || pin) {
        const auto codes = enumerate_perfect_codes(graph, pin);
        out << "perfect codes: " << codes.size() << "\n";
        for (const auto &c : codes) out << join_codes(to_elements(g, c)) << "\n";
      } else if (const auto code = find_perfect_code(graph)) {
        out << join_codes(to_elements(g, *code)) << "\n";
      } else {
        out << "none\n";
      }
    } else if (*construct_cmd) {
      const auto family = parse_family(family_name);
      if (!family)
        throw Error(ErrorKind::InvalidInput, "unknown family '" + family_name + "'");
      ExportFormat format;
      if (format_name == "dot")
        format = ExportFormat::Dot;
      else if (format_name == "edgelist")
        format = ExportFormat::EdgeList;
      else
        throw Error(ErrorKind::InvalidInput, "unknown format '" + format_name + "'");
      out << export_graph(construct(*family, grid), format);
    } else if (*codes_cmd) {
      const auto family = parse_code_family(prop_name);
      if (!family)
        throw Error(ErrorKind::InvalidInput, "unknown code family '" + prop_name + "'");
      code_params.t = parse_bits(t_text);
      const auto host = construct(host_family(*family),
                                  GridParams{code_params.m, code_params.l, code_params.h});
      const auto code = generate_code(*family, code_params);
      if (!is_perfect_code(host, code))
        throw Error(ErrorKind::InternalAssertion, "generated set is not a perfect code");
      out << "size: " << code.size() << "\n";
      for (int v : code) out << format_label(host.label(v)) << "\n";
      if (parametric) {
        const auto cmp = compare_parametric(*family, code_params);
        out << "parametric form: " << (cmp.agrees ? "agrees" : "differs")
            << " (" << cmp.parametric.size() << " vertices, perfect code: "
            << (is_perfect_code(host, cmp.parametric) ? "yes" : "no") << ")\n";
      }
    } else if (*sweep_cmd) {
      const auto filter = parse_involution_filter(involution_text);
      if (!filter)
        throw Error(ErrorKind::InvalidInput,
                    "--involutions must be 1, 3, 5 or all");
      SweepOptions options;
      options.max_order = max_order;
      options.filter = *filter;
      const auto report = run_sweep(options);
      out << format_summary(report);
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file)
          throw Error(ErrorKind::InvalidInput, "cannot write " + report_path);
        file << sweep_json(report).dump(2) << "\n";
      }
    }
  } catch (const Error &e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalAssertion ? kInternal : kInvalid;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace quintic
