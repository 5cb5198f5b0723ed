// ellone: batch front end for the exact chain-complex, seminorm, group
// cohomology and covering computations.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ellone/chain.hpp"
#include "ellone/covering/degree_one.hpp"
#include "ellone/covering/theta.hpp"
#include "ellone/covering/transfer.hpp"
#include "ellone/error.hpp"
#include "ellone/groupcoh/cohomology.hpp"
#include "ellone/homology.hpp"
#include "ellone/io.hpp"
#include "ellone/seminorm/seminorm.hpp"
#include "ellone/simplicial/cone.hpp"
#include "ellone/simplicial/subdivision.hpp"
#include "report.hpp"

namespace {

using ellone::Chain;
using ellone::Cochain;
using ellone::OrientedComplex;
using ellone::Rational;
using ellone::cli::Json;
using ellone::cli::RunReport;
namespace io = ellone::io;
namespace sn = ellone::seminorm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

struct Options {
  std::string report_path;
  bool decimal = false;
  int degree = -1;
  int rounds = 1;
  int cap = -1;
  std::string mode = "l1";
  std::string pipeline = "both";
  std::string certificate_path;
  std::string complex_path;
  std::string second_path;
  int line = 0;
  int apex = -1;
  std::string weight = "hat";
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json parse_input(RunReport& report, const std::string& path) { return io::parse_json(report.add_input(path)); }

// Complex files whose content violates the complex invariants are malformed input.
OrientedComplex load_complex(RunReport& report, const std::string& path) {
  const Json j = parse_input(report, path);
  try {
    return io::complex_from_json(j);
  } catch (const ellone::PreconditionError& e) {
    throw ellone::ParseError(path + ": " + e.what());
  }
}

std::string q(const Rational& r) { return ellone::to_string(r); }

void pivot_metadata(RunReport& report, sn::PivotRule rule) { report.metadata()["pivot_rule"] = sn::to_string(rule); }

int emit(const RunReport& report, const Options& opt) {
  const std::string text = report.to_json(opt.decimal).dump(2);
  std::cout << text << '\n';
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path);
    if (!out) throw ellone::PreconditionError("cannot write report " + opt.report_path);
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_homology(const Options& opt) {
  RunReport report("homology");
  const auto start = Clock::now();
  const OrientedComplex k = load_complex(report, opt.complex_path);
  report.metadata()["index_assignment"] = io::index_report(k);
  Json ranks = Json::object();
  if (opt.degree >= 0) {
    ranks[std::to_string(opt.degree)] = ellone::homology_rank(k, opt.degree);
  } else {
    const auto all = ellone::homology_ranks(k);
    for (std::size_t n = 0; n < all.size(); ++n) ranks[std::to_string(n)] = all[n];
  }
  report.results()["ranks"] = ranks;
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

void require_cycle(const OrientedComplex& k, const Chain& z) {
  ellone::validate(k, z);
  if (z.degree() == 0) return;
  const Chain residual = ellone::boundary(k, z);
  if (!residual.is_zero()) {
    throw ellone::PreconditionError("input is not a cycle; residual boundary " + io::to_json(residual).dump());
  }
}

void require_cocycle(const OrientedComplex& k, const Cochain& f) {
  ellone::validate(k, f);
  const Cochain residual = ellone::coboundary(k, f);
  if (!residual.is_zero()) {
    throw ellone::PreconditionError("input is not a cocycle; residual coboundary " + io::to_json(residual).dump());
  }
}

void write_certificate(const Options& opt, const Json& cert) {
  if (opt.certificate_path.empty()) return;
  std::ofstream out(opt.certificate_path);
  if (!out) throw ellone::PreconditionError("cannot write certificate " + opt.certificate_path);
  out << cert.dump(2) << '\n';
}

Json duality_results(const OrientedComplex& k, const Chain& z, sn::PivotRule rule, Json& certificates) {
  const auto d = sn::duality_check(k, z, rule);
  Json r;
  r["model"] = "simplicial-model seminorm";
  r["l1"] = q(d.l1);
  std::string why;
  const bool primal_ok = sn::verify_certificate(d.primal.problem, d.primal.certificate, &why);
  certificates["primal"] = {{"problem", sn::to_json(d.primal.problem)}, {"certificate", sn::to_json(d.primal.certificate)}};
  if (d.status == sn::DualityStatus::kDegenerate) {
    r["status"] = "degenerate";
    r["nullhomologous"] = true;
    r["primal_certificate_verified"] = primal_ok;
    return r;
  }
  const bool dual_ok = sn::verify_certificate(d.dual_problem, d.dual_certificate, &why);
  certificates["dual"] = {{"problem", sn::to_json(d.dual_problem)}, {"certificate", sn::to_json(d.dual_certificate)}};
  r["status"] = "ok";
  r["dual_optimum"] = q(d.dual_optimum);
  r["sup_value"] = q(d.sup_value);
  r["equal"] = d.equal;
  r["optimal_cocycle"] = io::to_json(d.phi);
  r["primal_certificate_verified"] = primal_ok;
  r["dual_certificate_verified"] = dual_ok;
  if (!d.equal || !primal_ok || !dual_ok) throw std::runtime_error("duality check failed: " + why);
  return r;
}

int cmd_seminorm(const Options& opt, const std::string& mode) {
  RunReport report(mode == "duality" ? "duality" : "seminorm");
  const auto start = Clock::now();
  const auto rule = sn::pivot_rule_from_env();
  pivot_metadata(report, rule);
  const OrientedComplex k = load_complex(report, opt.complex_path);
  const Json input = parse_input(report, opt.second_path);
  report.metadata()["mode"] = mode;
  report.metadata()["model"] = "simplicial-model seminorm";
  Json certificates;
  if (mode == "l1") {
    const Chain z = io::chain_from_json(input);
    require_cycle(k, z);
    const auto r = sn::l1_seminorm(k, z, rule);
    std::string why;
    const bool ok = sn::verify_certificate(r.problem, r.certificate, &why);
    report.results()["value"] = q(r.value);
    report.results()["representative"] = io::to_json(r.representative);
    report.results()["certificate_verified"] = ok;
    certificates = {{"problem", sn::to_json(r.problem)}, {"certificate", sn::to_json(r.certificate)}};
    if (!ok) throw std::runtime_error("certificate check failed: " + why);
  } else if (mode == "linf") {
    const Cochain f = io::cochain_from_json(input);
    require_cocycle(k, f);
    const auto r = sn::linf_seminorm(k, f, rule);
    std::string why;
    const bool ok = sn::verify_certificate(r.problem, r.certificate, &why);
    report.results()["value"] = q(r.value);
    report.results()["representative"] = io::to_json(r.representative);
    report.results()["certificate_verified"] = ok;
    certificates = {{"problem", sn::to_json(r.problem)}, {"certificate", sn::to_json(r.certificate)}};
    if (!ok) throw std::runtime_error("certificate check failed: " + why);
  } else if (mode == "duality") {
    const Chain z = io::chain_from_json(input);
    require_cycle(k, z);
    report.results() = duality_results(k, z, rule, certificates);
  } else {
    throw ellone::ParseError("unknown mode " + mode);
  }
  write_certificate(opt, certificates);
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

int cmd_bench_subdivide(const Options& opt) {
  RunReport report("bench-subdivide");
  const OrientedComplex k = load_complex(report, opt.complex_path);
  const int cap = opt.cap >= 0 ? opt.cap : 6;
  report.metadata()["rounds"] = opt.rounds;
  report.metadata()["cap"] = cap;
  const auto rounds = ellone::simplicial::iterate_subdivision(k, opt.rounds, cap);
  const auto predicted = ellone::simplicial::predicted_top_counts(k, opt.rounds);
  Json per_round = Json::array();
  Json times = Json::array();
  bool match = true;
  std::size_t peak = 0;
  for (const auto& r : rounds) {
    std::size_t total = 0;
    for (auto c : r.counts) total += c;
    peak = std::max(peak, total);
    per_round.push_back({{"round", r.round}, {"counts", r.counts}});
    times.push_back({{"round", r.round}, {"seconds", r.seconds}});
  }
  const auto& last = rounds.back().counts;
  for (std::size_t d = 0; d < predicted.size(); ++d) {
    if (predicted[d] != 0 && (d >= last.size() || last[d] != predicted[d])) match = false;
  }
  report.results()["rounds"] = per_round;
  report.results()["predicted_top_counts"] = predicted;
  report.results()["counts_match_formula"] = match;
  // Rough footprint: each simplex of the last round stored as a vertex tuple plus an index entry.
  std::size_t bytes = 0;
  for (std::size_t d = 0; d < last.size(); ++d) bytes += last[d] * (2 * (d + 1) * sizeof(int) + 64);
  report.results()["peak_memory_estimate_bytes"] = bytes;
  report.results()["peak_simplices"] = peak;
  report.timing()["per_round"] = times;
  emit(report, opt);
  return match ? kExitOk : kExitFailure;
}

int cmd_groupcoh(const Options& opt) {
  namespace gc = ellone::groupcoh;
  RunReport report("groupcoh");
  const auto start = Clock::now();
  const auto rule = sn::pivot_rule_from_env();
  pivot_metadata(report, rule);
  const int cap = opt.cap >= 0 ? opt.cap : gc::kDefaultDegreeCap;
  const auto group = gc::FiniteGroup::from_json(parse_input(report, opt.complex_path));
  const int degree = opt.degree >= 0 ? opt.degree : 1;
  report.metadata()["homotopy"] = "insert identity: k(f)(g0..g_{n-1}) = f(e, g0, ..., g_{n-1})";
  report.metadata()["degree_cap"] = cap;
  report.results()["order"] = group.order();
  auto describe = [&](const gc::GroupCohomology& h) {
    Json j;
    j["rank"] = h.rank;
    Json norms = Json::array();
    for (const auto& s : h.seminorms) norms.push_back(q(s));
    j["seminorms"] = norms;
    return j;
  };
  Json pipelines = Json::object();
  std::optional<gc::GroupCohomology> orbit, bounded;
  if (opt.pipeline == "orbit" || opt.pipeline == "both") {
    orbit = gc::group_cohomology(group, degree, gc::Pipeline::kOrbit, cap, rule);
    pipelines["orbit"] = describe(*orbit);
  }
  if (opt.pipeline == "bounded" || opt.pipeline == "both") {
    bounded = gc::group_cohomology(group, degree, gc::Pipeline::kBounded, cap, rule);
    pipelines["bounded"] = describe(*bounded);
  }
  if (!orbit && !bounded) throw ellone::ParseError("unknown pipeline " + opt.pipeline);
  report.results()["degree"] = degree;
  report.results()["pipelines"] = pipelines;
  if (orbit && bounded) {
    bool agree = orbit->rank == bounded->rank;
    for (std::size_t i = 0; agree && i < orbit->basis.size(); ++i) {
      agree = gc::canonical_seminorm(group, orbit->basis[i], gc::Pipeline::kBounded, rule) == orbit->seminorms[i];
    }
    report.results()["pipelines_agree"] = agree;
  }
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

int cmd_transfer(const Options& opt) {
  namespace cv = ellone::covering;
  RunReport report("transfer");
  const auto start = Clock::now();
  const auto rule = sn::pivot_rule_from_env();
  pivot_metadata(report, rule);
  const auto datum = cv::IsometryGroupDatum::from_json(parse_input(report, opt.complex_path));
  const Cochain f = io::cochain_from_json(parse_input(report, opt.second_path));
  report.metadata()["weights"] = "uniform 1/|F| over right coset representatives";
  const Cochain t = cv::transfer(datum, f);
  report.results()["group_order"] = datum.group().order();
  report.results()["subgroup_order"] = datum.subgroup().size();
  report.results()["transfer"] = io::to_json(t);
  report.results()["transfer_is_g_invariant"] = datum.is_g_invariant(t);
  report.results()["norm_input"] = q(ellone::linf_norm(f));
  report.results()["norm_transfer"] = q(ellone::linf_norm(t));
  if (datum.is_g_invariant(f) && ellone::is_cocycle(datum.total(), f)) {
    const auto iso = cv::res_isometry_check(datum, f, rule);
    report.results()["restriction_isometry"] = {
        {"g_seminorm", q(iso.g_seminorm)}, {"gamma_seminorm", q(iso.gamma_seminorm)}, {"equal", iso.equal}};
  }
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

int cmd_theta(const Options& opt) {
  namespace cv = ellone::covering;
  RunReport report("theta");
  const auto start = Clock::now();
  Cochain result;
  Cochain f;
  if (opt.line > 0) {
    const auto weight = opt.weight == "indicator" ? cv::LineOverCircle::Weight::kIndicator
                                                  : cv::LineOverCircle::Weight::kHat;
    if (opt.weight != "hat" && opt.weight != "indicator") throw ellone::ParseError("unknown weight " + opt.weight);
    const cv::LineOverCircle line(opt.line, weight);
    f = io::cochain_from_json(parse_input(report, opt.second_path));
    report.metadata()["family"] = "Z acting on the line, quotient circle with " + std::to_string(opt.line) + " edges";
    report.metadata()["bruhat"] = opt.weight;
    result = line.theta(f);
    if (f.degree() >= 0 && f.degree() <= 1) {
      const Cochain diff = f - result;
      const auto eta = ellone::coboundary_primitive(line.base(), diff);
      report.results()["cohomologous"] = eta.has_value();
      if (eta) report.results()["primitive"] = io::to_json(*eta);
    }
  } else {
    if (opt.complex_path.empty() || opt.apex < 0) throw ellone::ParseError("theta needs --line K or --complex and --apex");
    const OrientedComplex k = load_complex(report, opt.complex_path);
    const auto cone = ellone::simplicial::ConeDatum::make(k, opt.apex);
    f = io::cochain_from_json(parse_input(report, opt.second_path));
    report.metadata()["family"] = "trivial group on a cone";
    report.metadata()["bruhat"] = "constant 1";
    result = cv::theta(cone, f);
  }
  report.results()["theta"] = io::to_json(result);
  report.results()["norm_input"] = q(ellone::linf_norm(f));
  report.results()["norm_theta"] = q(ellone::linf_norm(result));
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

int cmd_integrate1(const Options& opt) {
  RunReport report("integrate1");
  const auto start = Clock::now();
  const OrientedComplex k = load_complex(report, opt.complex_path);
  const Cochain f = io::cochain_from_json(parse_input(report, opt.second_path));
  const Cochain primitive = ellone::covering::integrate_degree1(k, f);
  report.metadata()["base_vertex"] = 0;
  report.results()["primitive"] = io::to_json(primitive);
  report.results()["norm_primitive"] = q(ellone::linf_norm(primitive));
  report.results()["norm_input"] = q(ellone::linf_norm(f));
  report.timing()["wall_seconds"] = seconds_since(start);
  return emit(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain complexes, seminorms, group cohomology and coverings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--report", opt.report_path, "Also write the JSON report to this path");
  app.add_flag("--decimal", opt.decimal, "Attach a display-only decimal rendering");

  auto* homology = app.add_subcommand("homology", "Homology ranks of a complex");
  homology->add_option("complex", opt.complex_path)->required();
  homology->add_option("--degree", opt.degree);

  auto* seminorm = app.add_subcommand("seminorm", "l1 / linf seminorm or duality check");
  seminorm->add_option("complex", opt.complex_path)->required();
  seminorm->add_option("input", opt.second_path, "Cycle (l1, duality) or cocycle (linf)")->required();
  seminorm->add_option("--mode", opt.mode)->check(CLI::IsMember({"l1", "linf", "duality"}));
  seminorm->add_option("--certificate", opt.certificate_path, "Write the LP certificate(s) here");

  auto* duality = app.add_subcommand("duality", "l1 seminorm against the dual sup-norm program");
  duality->add_option("complex", opt.complex_path)->required();
  duality->add_option("cycle", opt.second_path)->required();
  duality->add_option("--certificate", opt.certificate_path);

  auto* bench = app.add_subcommand("bench-subdivide", "Iterated barycentric subdivision counts");
  bench->add_option("complex", opt.complex_path)->required();
  bench->add_option("--rounds", opt.rounds)->check(CLI::NonNegativeNumber);
  bench->add_option("--cap", opt.cap);

  auto* groupcoh = app.add_subcommand("groupcoh", "Cohomology of a finite group with canonical seminorms");
  groupcoh->add_option("group", opt.complex_path)->required();
  groupcoh->add_option("--degree", opt.degree);
  groupcoh->add_option("--cap", opt.cap);
  groupcoh->add_option("--pipeline", opt.pipeline)->check(CLI::IsMember({"orbit", "bounded", "both"}));

  auto* transfer = app.add_subcommand("transfer", "Transfer of an invariant cochain");
  transfer->add_option("datum", opt.complex_path)->required();
  transfer->add_option("cochain", opt.second_path)->required();

  auto* theta = app.add_subcommand("theta", "Theta map on the line family or on a cone");
  theta->add_option("cochain", opt.second_path)->required();
  theta->add_option("--line", opt.line, "Edges of the quotient circle");
  theta->add_option("--weight", opt.weight)->check(CLI::IsMember({"hat", "indicator"}));
  theta->add_option("--complex", opt.complex_path);
  theta->add_option("--apex", opt.apex);

  auto* integrate = app.add_subcommand("integrate1", "Primitive of a 1-cochain vanishing on cycles");
  integrate->add_option("complex", opt.complex_path)->required();
  integrate->add_option("cochain", opt.second_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (homology->parsed()) return cmd_homology(opt);
    if (seminorm->parsed()) return cmd_seminorm(opt, opt.mode);
    if (duality->parsed()) return cmd_seminorm(opt, "duality");
    if (bench->parsed()) return cmd_bench_subdivide(opt);
    if (groupcoh->parsed()) return cmd_groupcoh(opt);
    if (transfer->parsed()) return cmd_transfer(opt);
    if (theta->parsed()) return cmd_theta(opt);
    if (integrate->parsed()) return cmd_integrate1(opt);
  } catch (const ellone::ParseError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
    std::cerr << '\n';
    return kExitParse;
  } catch (const ellone::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ellone::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
