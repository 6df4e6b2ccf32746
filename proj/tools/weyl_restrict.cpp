// weyl-restrict: run theorem checks and dump the underlying objects.
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/invariants.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/spectral.hpp"
#include "weylrestrict/suite.hpp"
#include "weylrestrict/weyl.hpp"

using nlohmann::json;
using namespace wr;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kDumpElementCap = 50'000;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// verify targets and the check ids they select.
const std::map<std::string, std::string>& targets() {
  static const std::map<std::string, std::string> m = {
      {"all", "*"},
      {"restriction", "restriction/*"},
      {"d-strictness", "d-strictness/*"},
      {"invariants", "invariants/*|pfaffian/*"},
      {"pfaffian", "pfaffian/*"},
      {"radius", "radius/*"},
      {"omega", "omega-*"},
      {"xi", "xi/*"},
      {"dims", "dimension/*"},
      {"branching", "branching/*"},
      {"pw", "pw-*"},
      {"sigma-equivariance", "sigma/*"},
      {"negative-example", "negative-example/*"},
      {"group-case", "group-case/*"},
  };
  return m;
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

RootSystem root_system_for(const std::string& type, int rank) {
  if (type.empty()) throw UsageError("--type is required");
  if (rank <= 0) throw UsageError("--rank is required");
  return build_root_system(parse_type(type), rank, true);
}

int do_dump(const std::string& entity, const std::string& type, int rank) {
  json out = {{"schema", kReportSchema}, {"entity", entity}};
  if (entity == "catalog") {
    out["catalog"] = catalog_resource();
  } else if (entity == "rootsys") {
    out["root_system"] = to_json(root_system_for(type, rank));
  } else if (entity == "weyl") {
    RootSystem rs = root_system_for(type, rank);
    WeylGroup w(rs);
    if (w.predicted_order() > kDumpElementCap)
      throw CapExceededError("Weyl group too large to dump", w.predicted_order());
    json els = json::array();
    for (const auto& g : w.elements()) els.push_back(to_json(g));
    json gens = json::array();
    for (const auto& g : w.generators()) gens.push_back(to_json(g));
    out["weyl"] = {{"type", type_name(rs.type)}, {"rank", rs.rank}, {"order", w.predicted_order()},
                   {"generators", gens}, {"elements", els}};
  } else if (entity == "invariants") {
    RootSystem rs = root_system_for(type, rank);
    out["invariants"] = to_json(char_poly_family(rs.type, rs.rank));
  } else if (entity == "xi") {
    RootSystem rs = root_system_for(type, rank);
    json xs = json::array();
    for (const auto& x : class_one_weights(rs)) xs.push_back(to_json(x));
    out["xi"] = {{"type", type_name(rs.type)}, {"rank", rs.rank}, {"vectors", xs}};
  } else {
    throw UsageError("unknown entity '" + entity + "'");
  }
  print_json(out);
  return 0;
}

int do_branch(const std::string& type, int n, int k, const std::string& weight, bool xi, bool as_json) {
  if (type.empty() || n <= 0 || k <= 0 || weight.empty()) throw UsageError("branch needs --type, --n, --k, --weight");
  PropagationPair pair = make_pair(parse_type(type), n, k);
  std::vector<long> w = parse_list(weight);
  CoordVector mu;
  if (xi) {
    if (static_cast<int>(w.size()) > k) throw UsageError("too many class-one coordinates");
    w.resize(static_cast<std::size_t>(k), 0);
    mu = class_one_weight(pair.large, w);
  } else {
    if (static_cast<int>(w.size()) != k) throw UsageError("--weight needs one Dynkin label per simple root");
    mu = weight_from_labels(pair.large, w);
  }
  BranchResult b = branch(pair, mu);
  if (as_json) {
    json out = {{"schema", kReportSchema}, {"entity", "branch"}, {"type", type}, {"n", n}, {"k", k},
                {"highest_weight", to_json(mu)}, {"branch", to_json(b)}};
    print_json(out);
  } else {
    std::cout << "dim " << b.large_dim << " = ";
    bool first = true;
    for (const auto& nu : b.order) {
      std::cout << (first ? "" : " + ") << b.components.at(nu) << " x V(";
      for (std::size_t i = 0; i < nu.size(); ++i) std::cout << (i ? "," : "") << to_short_string(nu[i]);
      std::cout << ")";
      first = false;
    }
    std::cout << "\nbookkeeping " << b.bookkeeping << (b.bookkeeping == b.large_dim ? " ok" : " MISMATCH") << "\n";
  }
  return b.bookkeeping == b.large_dim ? 0 : kExitFail;
}

int run(int argc, char** argv) {
  CLI::App app{"Restriction checks for classical Weyl groups, invariants and spherical transforms"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string type;
  int n = 0, k = 0, rank = 0, max_rank = 4, trials = 20;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string lambda;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_option("--type", type, "A, B, C or D");
    sub->add_option("--rank", rank, "rank");
  };

  auto* dump = app.add_subcommand("dump", "Serialize root systems, Weyl groups, invariants, the catalog, xi");
  std::string entity;
  dump->add_option("entity", entity, "rootsys, weyl, invariants, catalog or xi")->required();
  common(dump);

  auto* cat = app.add_subcommand("catalog", "Look up one row of the symmetric space table");
  std::string family;
  int p = 0, q = 0;
  cat->add_option("--family", family, "A, B, C, D, AI, AII, AIII, BDI, DIII, CI or CII")->required();
  cat->add_option("--p,--j", p, "first parameter")->required();
  cat->add_option("--q", q, "second parameter");
  cat->add_flag("--json", as_json, "JSON output");

  auto* br = app.add_subcommand("branch", "Branch an irreducible module along a propagation pair");
  std::string weight;
  bool xi = false;
  common(br);
  br->add_option("--n", n, "small rank");
  br->add_option("--k", k, "large rank");
  br->add_option("--weight", weight, "Dynkin labels, comma separated");
  br->add_flag("--xi", xi, "read --weight as class-one coordinates");

  auto* ver = app.add_subcommand("verify", "Run theorem checks");
  std::string target;
  bool all_types = false;
  ver->add_option("target", target, "all, restriction, d-strictness, invariants, pfaffian, radius, omega, xi, dims, "
                                    "branching, pw, sigma-equivariance, negative-example, group-case, or an id glob")
      ->required();
  common(ver);
  ver->add_option("--n", n, "small rank");
  ver->add_option("--k", k, "large rank");
  ver->add_option("--max-rank", max_rank, "largest rank of the grid")->check(CLI::PositiveNumber);
  ver->add_option("--samples", samples, "random points per geometry check");
  ver->add_option("--trials", trials, "random polynomials per PW check");
  ver->add_option("--seed", seed, "seed");
  ver->add_option("--threads", threads, "worker threads (0: all cores)");
  ver->add_option("--lambda", lambda, "sigma check weight, ambient coordinates");
  ver->add_flag("--all", all_types, "all types (the default without --type)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*dump) return do_dump(entity, type, rank);
  if (*cat) {
    CatalogEntry e = catalog_lookup(parse_family(family), p, q);
    json j = to_json(e);
    if (as_json) print_json({{"schema", kReportSchema}, {"entity", "catalog"}, {"entry", j}});
    else
      std::cout << j["label"].get<std::string>() << "  " << e.space << "  rank " << e.rank << "  dim " << e.dim
                << "  Sigma_1/2 " << type_name(e.sigma_half_type) << "  Sigma_2 " << type_name(e.sigma_two_type)
                << (e.nonreduced ? "  nonreduced" : "") << "\n";
    return 0;
  }
  if (*br) return do_branch(type, n, k, weight, xi, as_json);

  SuiteParams sp;
  sp.max_rank = max_rank;
  sp.samples = samples;
  sp.trials = trials;
  sp.seed = seed;
  sp.threads = threads;
  if (!type.empty() && !all_types) sp.type = parse_type(type);
  if (n > 0) sp.n = n;
  if (k > 0) sp.k = k;
  if (rank > 0) sp.rank = rank;
  if (!lambda.empty()) sp.lambda = parse_list(lambda);
  if (sp.n && sp.k && *sp.n >= *sp.k) throw UsageError("--n must be below --k");

  std::string filter;
  auto it = targets().find(target);
  if (it != targets().end()) filter = it->second;
  else if (target.find_first_of("/*?[") != std::string::npos) filter = target;
  else throw UsageError("unknown check '" + target + "'");

  auto reports = run_suite(filter, sp);
  if (as_json) print_json(suite_json(reports, sp, "verify " + target));
  else std::cout << suite_table(reports);
  return any_failed(reports) ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const UnknownCheckError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const CapExceededError& e) {
    std::cerr << "size cap: " << e.what() << " (order " << e.predicted_order << ")\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
