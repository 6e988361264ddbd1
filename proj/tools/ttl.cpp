#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ttl/complex_examples.hpp"
#include "ttl/json_io.hpp"
#include "ttl/linear_thrackle.hpp"
#include "ttl/partitions.hpp"
#include "ttl/planar_witness.hpp"
#include "ttl/projective.hpp"
#include "ttl/svg.hpp"
#include "ttl/thrackle_examples.hpp"

// Exit codes: 0 verified / found, 1 falsified / counterexample / nothing
// found, 2 malformed input or usage. JSON report on stdout, human summary on
// stderr. All commands are deterministic for fixed flags and seeds.

namespace {

using ttl::Json;

int finish(const Json& report, const std::string& summary, int code) {
  std::cout << ttl::json_to_text(report);
  std::cerr << summary << "\n";
  return code;
}

ttl::SearchOptions search_options(unsigned jobs) {
  ttl::SearchOptions opts;
  opts.jobs = jobs == 0 ? 1 : jobs;
  if (const char* cap = std::getenv("TTL_MAX_PARTITIONS")) {
    try {
      opts.max_partitions = ttl::Int(std::string(cap));
    } catch (const std::exception&) {
      throw ttl::InvalidInput("TTL_MAX_PARTITIONS is not an integer: " + std::string(cap));
    }
    if (opts.max_partitions < 1) throw ttl::InvalidInput("TTL_MAX_PARTITIONS must be positive");
  }
  return opts;
}

Json transversal_to_json(const ttl::TransversalReport& tr) {
  Json out;
  out["ok"] = tr.ok;
  if (tr.violating_pair) {
    out["violating_pair"] = {tr.violating_pair->first, tr.violating_pair->second};
    out["violating_count"] = tr.violating_count;
  }
  return out;
}

const char* violation_kind_name(ttl::PairViolation::Kind kind) {
  switch (kind) {
    case ttl::PairViolation::Kind::disjoint: return "disjoint";
    case ttl::PairViolation::Kind::wrong_dimension: return "wrong_dimension";
    case ttl::PairViolation::Kind::t_configuration: return "t_configuration";
    case ttl::PairViolation::Kind::coplanar_overlap: return "coplanar_overlap";
  }
  return "unknown";
}

Json trace_to_json(const std::vector<ttl::ReductionStep>& trace) {
  Json steps = Json::array();
  for (const auto& step : trace) {
    Json js;
    js["ridge"] = step.ridge;
    js["incident"] = step.incident;
    js["removed"] = step.removed;
    js["positive_facet"] = step.positive_facet;
    js["negative_facet"] = step.negative_facet;
    steps.push_back(std::move(js));
  }
  return steps;
}

// A certificate replays when recomputing it from its embedded configuration
// reproduces every entry in the same canonical order.
bool certificate_replays(const ttl::WitnessCertificate& cert, const ttl::SearchOptions& opts) {
  auto fresh = ttl::verify_no_partition(cert.config, cert.r, cert.k, opts);
  if (!fresh.verified()) return false;
  const auto& entries = fresh.certificate->entries;
  if (entries.size() != cert.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].partition != cert.entries[i].partition) return false;
    if (entries[i].empty_subfamily != cert.entries[i].empty_subfamily) return false;
  }
  return true;
}

int run_generate(const std::string& kind, const Json& payload, const std::string& out_path,
                 const Json& stats) {
  ttl::write_json_file(out_path, payload);
  Json report;
  report["verdict"] = "generated";
  report["kind"] = kind;
  report["path"] = out_path;
  for (const auto& [key, value] : stats.items()) report[key] = value;
  return finish(report, "generated " + kind + " -> " + out_path, 0);
}

int run_verify_tverberg(const std::string& input, int r, int k, unsigned jobs) {
  auto config = ttl::config_from_json(ttl::read_json_file(input));
  auto result = ttl::verify_no_partition(config, r, k, search_options(jobs));
  if (result.verified()) {
    Json report;
    report["verdict"] = "verified";
    report["partitions_checked"] = result.certificate->entries.size();
    report["certificate"] = ttl::certificate_to_json(*result.certificate);
    return finish(report,
                  "no qualifying partition among " +
                      std::to_string(result.certificate->entries.size()) + " candidates",
                  0);
  }
  Json report;
  report["verdict"] = "falsified";
  report["counterexample"] = ttl::partition_witness_to_json(*result.counterexample);
  return finish(report, "found a qualifying partition, configuration is no witness", 1);
}

int run_verify_certificate(const std::string& input, unsigned jobs) {
  auto cert = ttl::certificate_from_json(ttl::read_json_file(input));
  bool ok = certificate_replays(cert, search_options(jobs));
  Json report;
  report["verdict"] = ok ? "verified" : "falsified";
  report["r"] = cert.r;
  report["k"] = cert.k;
  report["partitions_checked"] = cert.entries.size();
  if (ok) return finish(report, "certificate replays", 0);
  return finish(report, "certificate does not replay", 1);
}

int run_verify_thrackle(const std::string& input) {
  auto instance = ttl::thrackle_from_json(ttl::read_json_file(input));
  auto tr = ttl::check_transversal(instance);
  Json report;
  report["verdict"] = tr.ok ? "verified" : "falsified";
  report["dim"] = instance.dim;
  report["m"] = instance.body_count();
  report["n"] = instance.vertex_count();
  report["w_size"] = instance.W.size();
  report["transversal"] = transversal_to_json(tr);
  std::string note;
  if (tr.ok && instance.dim == 2) {
    try {
      auto selection = ttl::vertex_selection(instance);
      Json sel;
      for (const auto& [vertex, body] : selection.selected) sel[vertex] = body;
      report["selection"] = std::move(sel);
      report["selection_flags"] = selection.flags;
      report["surjective"] = ttl::selection_surjective(instance, selection);
    } catch (const ttl::PreconditionError& e) {
      report["selection_unavailable"] = e.what();
      note = " (selection unavailable)";
    }
  } else if (tr.ok) {
    report["selection_unavailable"] = "selection is defined for 2-dimensional instances";
  }
  if (tr.ok) return finish(report, "transversal verified" + note, 0);
  return finish(report,
                "transversal fails at body pair (" + std::to_string(tr.violating_pair->first) +
                    ", " + std::to_string(tr.violating_pair->second) + ")",
                1);
}

int run_verify_complex(const std::string& input) {
  auto [complex, realization] = ttl::complex_from_json(ttl::read_json_file(input));
  if (realization.empty())
    throw ttl::InvalidInput("complex verification needs a \"realization\" field");
  ttl::validate_realization(complex, realization);

  Json report;
  report["dim"] = complex.dim;
  auto verdict = ttl::facet_ridge_inequality(complex);
  report["facets"] = verdict.facets;
  report["vertices"] = complex.vertex_ids().size();
  report["ridges"] = verdict.ridges;
  Json ineq;
  ineq["lhs"] = verdict.d * verdict.facets;
  ineq["rhs"] = 2 * verdict.ridges;
  ineq["holds"] = verdict.holds;
  report["facet_ridge_inequality"] = std::move(ineq);

  auto check = ttl::verify_linear_thrackle(complex, realization);
  report["verdict"] = check.ok ? "verified" : "falsified";
  Json verification;
  verification["ok"] = check.ok;
  verification["degenerate_facets"] = check.degenerate_facets;
  Json violations = Json::array();
  for (const auto& v : check.violations) {
    Json jv;
    jv["a"] = v.a;
    jv["b"] = v.b;
    jv["kind"] = violation_kind_name(v.kind);
    jv["intersection_dim"] = v.intersection_dim;
    violations.push_back(std::move(jv));
  }
  verification["violations"] = std::move(violations);
  report["verification"] = std::move(verification);

  Json reduction;
  try {
    auto res = ttl::reduce_complex(complex, realization);
    reduction["steps"] = trace_to_json(res.trace);
    reduction["reduced_facets"] = res.reduced.facets;
    reduction["replays"] = ttl::replay_reduction(complex, realization, res);
  } catch (const ttl::InvalidInput& e) {
    reduction["error"] = e.what();
  }
  report["reduction"] = std::move(reduction);

  if (check.ok) return finish(report, "linear thrackle conditions verified", 0);
  return finish(report,
                "verification fails with " + std::to_string(check.violations.size()) +
                    " bad facet pair(s)",
                1);
}

int run_verify_abstract(const std::string& input) {
  auto abstract = ttl::abstract_from_json(ttl::read_json_file(input));
  auto bound = ttl::abstract_transversal_bound(abstract);
  Json report;
  bool ok = bound.transversal_ok && bound.bound_holds;
  report["verdict"] = ok ? "verified" : "falsified";
  report["m"] = bound.m;
  report["w_size"] = bound.w_size;
  report["transversal_ok"] = bound.transversal_ok;
  if (bound.violating_pair) {
    report["violating_pair"] = {bound.violating_pair->first, bound.violating_pair->second};
    report["violating_count"] = bound.violating_count;
  }
  report["cover_is_decomposition"] = bound.cover_is_decomposition;
  report["all_cliques_proper"] = bound.all_cliques_proper;
  report["bound_holds"] = bound.bound_holds;
  Json cover = Json::array();
  for (std::size_t c = 0; c < bound.cover.size(); ++c) {
    Json jc;
    jc["element"] = bound.cover_elements[c];
    jc["sets"] = bound.cover[c];
    cover.push_back(std::move(jc));
  }
  report["cover"] = std::move(cover);
  if (ok) return finish(report, "m <= |W| holds with a proper clique decomposition", 0);
  return finish(report, "clique-cover bound does not apply", 1);
}

int run_search_partition(const std::string& input, int r, int k, unsigned jobs) {
  auto config = ttl::config_from_json(ttl::read_json_file(input));
  auto witness = ttl::find_partition(config, r, k, search_options(jobs));
  if (witness) {
    Json report;
    report["verdict"] = "found";
    report["witness"] = ttl::partition_witness_to_json(*witness);
    return finish(report, "qualifying partition found", 0);
  }
  Json report;
  report["verdict"] = "none";
  report["exhaustive"] = true;
  return finish(report, "no qualifying partition exists", 1);
}

int run_search_planar_witness(int r, int k, std::uint64_t seed, std::uint64_t budget,
                              unsigned jobs, const std::string& out_path,
                              const std::string& cert_path) {
  if (k != 2) throw ttl::InvalidInput("planar-witness search supports k = 2 only");
  if (r < 2) throw ttl::InvalidInput("planar-witness search needs r >= 2");
  if (seed == 0) throw ttl::InvalidInput("seed must be positive");
  auto opts = search_options(jobs);
  int n = 3 * r - 3;
  for (std::uint64_t s = seed; s < seed + budget; ++s) {
    auto candidate = ttl::sample_generic_config(2, n, s);
    auto result = ttl::verify_no_partition(candidate, r, k, opts);
    if (!result.verified()) continue;
    Json report;
    report["verdict"] = "found";
    report["seed_used"] = s;
    report["points"] = n;
    report["partitions_checked"] = result.certificate->entries.size();
    report["config"] = ttl::config_to_json(candidate);
    report["certificate"] = ttl::certificate_to_json(*result.certificate);
    if (!out_path.empty()) ttl::write_json_file(out_path, ttl::config_to_json(candidate));
    if (!cert_path.empty())
      ttl::write_json_file(cert_path, ttl::certificate_to_json(*result.certificate));
    return finish(report,
                  "witness found at seed " + std::to_string(s) + " (" + std::to_string(n) +
                      " points, no partition among " +
                      std::to_string(result.certificate->entries.size()) + ")",
                  0);
  }
  Json report;
  report["verdict"] = "none";
  report["seeds_tried"] = budget;
  return finish(report, "no certified configuration within the seed budget", 1);
}

int run_search_rainbow(const std::string& input, int r, int k) {
  auto config = ttl::config_from_json(ttl::read_json_file(input));
  auto colored = ttl::colored_from_config(config, r, k);
  auto selection = ttl::find_rainbow_partition(colored, r, k);
  if (selection) {
    Json report;
    report["verdict"] = "found";
    Json blocks = Json::array();
    for (const auto& block : *selection) {
      Json jb = Json::array();
      for (const auto& [cls, member] : block)
        jb.push_back("c" + std::to_string(cls) + "_" + std::to_string(member + 1));
      blocks.push_back(std::move(jb));
    }
    report["selection"] = std::move(blocks);
    return finish(report, "rainbow partition found", 0);
  }
  Json report;
  report["verdict"] = "none";
  report["exhaustive"] = true;
  return finish(report, "no rainbow partition exists", 1);
}

int run_render(const std::string& input, const std::string& out_path) {
  auto j = ttl::read_json_file(input);
  std::string svg;
  std::string what;
  if (j.contains("bodies")) {
    int dim = j.value("dim", 0);
    if (dim != 2)
      throw ttl::InvalidInput("input is " + std::to_string(dim) +
                              "-dimensional; rendering is planar, use the JSON output instead");
    svg = ttl::render_thrackle_svg(ttl::thrackle_from_json(j));
    what = "thrackle instance";
  } else if (j.contains("points")) {
    int dim = j.value("dim", 0);
    if (dim != 2)
      throw ttl::InvalidInput("input is " + std::to_string(dim) +
                              "-dimensional; rendering is planar, use the JSON output instead");
    svg = ttl::render_config_svg(ttl::config_from_json(j));
    what = "point configuration";
  } else {
    throw ttl::InvalidInput(
        "input is not renderable; rendering covers 2-dimensional thrackle instances and point "
        "configurations, use the JSON output instead");
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ttl::InvalidInput("cannot write " + out_path);
  out << svg;
  out.close();
  Json report;
  report["verdict"] = "rendered";
  report["path"] = out_path;
  report["bytes"] = svg.size();
  return finish(report, "rendered " + what + " -> " + out_path, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit: Tverberg partitions and thrackle bounds"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- generate ----------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "write a built-in construction to a JSON file");
  generate->require_subcommand(1);
  struct {
    int d = 2, r = 2, k = 2, q = 2, n = 4, segments = 0;
    std::uint64_t seed = 1;
    std::string out;
  } gen;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", gen.out, "output JSON path")->required();
  };

  auto* g_config = generate->add_subcommand("generic-config", "seeded generic point configuration");
  g_config->add_option("--d", gen.d, "ambient dimension")->required();
  g_config->add_option("--n", gen.n, "number of points")->required();
  g_config->add_option("--seed", gen.seed, "sampling seed")->required();
  add_out(g_config);
  g_config->callback([&] {
    auto config = ttl::sample_generic_config(gen.d, gen.n, gen.seed);
    Json stats;
    stats["points"] = config.size();
    rc = run_generate("generic-config", ttl::config_to_json(config), gen.out, stats);
  });

  auto* g_lift = generate->add_subcommand("lift", "lift a witness one dimension up");
  std::string lift_input;
  g_lift->add_option("--input,-i", lift_input, "base configuration JSON")->required();
  g_lift->add_option("--k", gen.k, "subfamily size the witness targets")->required();
  add_out(g_lift);
  g_lift->callback([&] {
    auto base = ttl::config_from_json(ttl::read_json_file(lift_input));
    auto lifted = ttl::lift_witness(base, gen.k);
    Json stats;
    stats["points"] = lifted.size();
    stats["dim"] = lifted.dim;
    rc = run_generate("lift", ttl::config_to_json(lifted), gen.out, stats);
  });

  auto* g_colored = generate->add_subcommand("colored-witness", "colored lower-bound construction");
  g_colored->add_option("--d", gen.d, "ambient dimension")->required();
  g_colored->add_option("--r", gen.r, "number of blocks")->required();
  g_colored->add_option("--k", gen.k, "subfamily size")->required();
  add_out(g_colored);
  g_colored->callback([&] {
    auto colored = ttl::colored_witness(gen.d, gen.r, gen.k);
    auto flat = colored.flatten();
    Json stats;
    stats["points"] = flat.size();
    stats["classes"] = colored.classes.size();
    rc = run_generate("colored-witness", ttl::config_to_json(flat), gen.out, stats);
  });

  auto* g_proj = generate->add_subcommand("projective-thrackle",
                                          "plane thrackle from a projective plane of prime order");
  g_proj->add_option("--q", gen.q, "prime order")->required();
  add_out(g_proj);
  g_proj->callback([&] {
    auto instance = ttl::plane_thrackle_from_incidence(ttl::projective_plane(gen.q));
    Json stats;
    stats["bodies"] = instance.body_count();
    stats["vertices"] = instance.vertex_count();
    rc = run_generate("projective-thrackle", ttl::thrackle_to_json(instance), gen.out, stats);
  });

  auto add_fixed_thrackle = [&](const std::string& name, const std::string& help,
                                ttl::ThrackleInstance (*make)()) {
    auto* cmd = generate->add_subcommand(name, help);
    add_out(cmd);
    cmd->callback([&, name, make] {
      auto instance = make();
      Json stats;
      stats["bodies"] = instance.body_count();
      stats["vertices"] = instance.vertex_count();
      rc = run_generate(name, ttl::thrackle_to_json(instance), gen.out, stats);
    });
  };
  add_fixed_thrackle("heptagram", "seven tangent segments with a one-point transversal",
                     ttl::heptagram_example);
  add_fixed_thrackle("quad-apex", "quadrilateral with four apex segments",
                     ttl::quad_apex_example);
  add_fixed_thrackle("seven-gon", "all triangles on a 7-gon edge, transversal fails",
                     ttl::seven_gon_example);
  add_fixed_thrackle("octahedron", "spatial instance beating the planar body bound",
                     ttl::octahedron_example);

  auto* g_random = generate->add_subcommand("random-thrackle",
                                            "seeded segment thrackle satisfying the hypotheses");
  g_random->add_option("--seed", gen.seed, "construction seed")->required();
  g_random->add_option("--segments", gen.segments, "segment count (default seed-dependent 3..6)");
  add_out(g_random);
  g_random->callback([&] {
    auto instance = ttl::random_segment_thrackle(gen.seed, gen.segments);
    Json stats;
    stats["bodies"] = instance.body_count();
    stats["vertices"] = instance.vertex_count();
    rc = run_generate("random-thrackle", ttl::thrackle_to_json(instance), gen.out, stats);
  });

  auto add_fixed_complex = [&](const std::string& name, const std::string& help,
                               ttl::RealizedComplex (*make)()) {
    auto* cmd = generate->add_subcommand(name, help);
    add_out(cmd);
    cmd->callback([&, name, make] {
      auto rc_complex = make();
      Json stats;
      stats["facets"] = rc_complex.complex.facets.size();
      rc = run_generate(name, ttl::complex_to_json(rc_complex.complex, rc_complex.realization),
                        gen.out, stats);
    });
  };
  add_fixed_complex("pyramid", "four-sided pyramid with base triangulations and diagonals",
                    ttl::pyramid_example);
  add_fixed_complex("star-cone", "double cone over star chords of a 7-gon",
                    ttl::star_cone_example);
  add_fixed_complex("book", "three triangles sharing an edge", ttl::book_example);

  auto* g_simplex = generate->add_subcommand("simplex-boundary", "boundary of the d-simplex");
  g_simplex->add_option("--d", gen.d, "complex dimension (>= 2)")->required();
  add_out(g_simplex);
  g_simplex->callback([&] {
    auto rc_complex = ttl::simplex_boundary(gen.d);
    Json stats;
    stats["facets"] = rc_complex.complex.facets.size();
    rc = run_generate("simplex-boundary",
                      ttl::complex_to_json(rc_complex.complex, rc_complex.realization), gen.out,
                      stats);
  });

  // ---- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check an instance or certificate");
  verify->require_subcommand(1);
  struct {
    int r = 2, k = 2;
    unsigned jobs = 1;
    std::string input;
  } ver;

  auto* v_witness = verify->add_subcommand("tverberg-witness",
                                           "exhaustively certify that no partition qualifies");
  v_witness->add_option("--r", ver.r, "number of blocks")->required();
  v_witness->add_option("--k", ver.k, "subfamily size")->required();
  v_witness->add_option("--jobs", ver.jobs, "worker count (result is order-independent)");
  v_witness->add_option("input", ver.input, "point configuration JSON")->required();
  v_witness->callback([&] { rc = run_verify_tverberg(ver.input, ver.r, ver.k, ver.jobs); });

  auto* v_cert = verify->add_subcommand("certificate", "replay a stored no-partition certificate");
  v_cert->add_option("--jobs", ver.jobs, "worker count");
  v_cert->add_option("input", ver.input, "certificate JSON")->required();
  v_cert->callback([&] { rc = run_verify_certificate(ver.input, ver.jobs); });

  auto* v_thrackle = verify->add_subcommand("thrackle",
                                            "transversal counting plus vertex selection");
  v_thrackle->add_option("input", ver.input, "thrackle instance JSON")->required();
  v_thrackle->callback([&] { rc = run_verify_thrackle(ver.input); });

  auto* v_complex = verify->add_subcommand("complex",
                                           "linear thrackle conditions, counts, and reduction");
  v_complex->add_option("input", ver.input, "realized complex JSON")->required();
  v_complex->callback([&] { rc = run_verify_complex(ver.input); });

  auto* v_abstract = verify->add_subcommand("abstract-bound",
                                            "clique-cover size bound on abstract sets");
  v_abstract->add_option("input", ver.input, "abstract sets JSON")->required();
  v_abstract->callback([&] { rc = run_verify_abstract(ver.input); });

  // ---- search ------------------------------------------------------------
  auto* search = app.add_subcommand("search", "look for partitions or witnesses");
  search->require_subcommand(1);
  struct {
    int r = 2, k = 2;
    unsigned jobs = 1;
    std::uint64_t seed = 0, budget = 200;
    std::string input, out, cert_out;
  } se;

  auto* s_partition = search->add_subcommand("partition", "first qualifying partition if any");
  s_partition->add_option("--r", se.r, "number of blocks")->required();
  s_partition->add_option("--k", se.k, "subfamily size")->required();
  s_partition->add_option("--jobs", se.jobs, "worker count (result is order-independent)");
  s_partition->add_option("input", se.input, "point configuration JSON")->required();
  s_partition->callback([&] { rc = run_search_partition(se.input, se.r, se.k, se.jobs); });

  auto* s_planar = search->add_subcommand("planar-witness",
                                          "seeded search for a certified planar witness");
  s_planar->add_option("--r", se.r, "number of blocks")->required();
  s_planar->add_option("--k", se.k, "subfamily size (must be 2)")->required();
  s_planar->add_option("--seed", se.seed, "first sampling seed")->required();
  s_planar->add_option("--budget", se.budget, "number of seeds to try (default 200)");
  s_planar->add_option("--jobs", se.jobs, "worker count");
  s_planar->add_option("-o,--out", se.out, "write the found configuration here");
  s_planar->add_option("--certificate-out", se.cert_out, "write the certificate here");
  s_planar->callback([&] {
    rc = run_search_planar_witness(se.r, se.k, se.seed, se.budget, se.jobs, se.out, se.cert_out);
  });

  auto* s_rainbow = search->add_subcommand("rainbow",
                                           "exhaustive rainbow partition search on colored input");
  s_rainbow->add_option("--r", se.r, "number of blocks")->required();
  s_rainbow->add_option("--k", se.k, "subfamily size")->required();
  s_rainbow->add_option("input", se.input, "colored point configuration JSON")->required();
  s_rainbow->callback([&] { rc = run_search_rainbow(se.input, se.r, se.k); });

  // ---- render ------------------------------------------------------------
  auto* render = app.add_subcommand("render", "draw a 2-dimensional instance as SVG");
  struct {
    std::string input, out;
  } re;
  render->add_option("input", re.input, "thrackle or point configuration JSON")->required();
  render->add_option("-o,--out", re.out, "output SVG path")->required();
  render->callback([&] { rc = run_render(re.input, re.out); });

  // ---- oracle ------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
  oracle->require_subcommand(1);
  struct {
    int m = 3;
    std::uint64_t n = 1, r = 1;
  } ora;

  auto* o_clique = oracle->add_subcommand("clique-cover",
                                          "minimum proper clique edge cover of the complete graph");
  o_clique->add_option("--m", ora.m, "vertex count (3..6)")->required();
  o_clique->callback([&] {
    int cover = ttl::min_clique_cover_bruteforce(ora.m);
    Json report;
    report["m"] = ora.m;
    report["min_cover"] = cover;
    report["equals_m"] = cover == ora.m;
    rc = finish(report, "minimum proper clique cover of K_" + std::to_string(ora.m) + " is " +
                            std::to_string(cover),
                0);
  });

  auto* o_count = oracle->add_subcommand("partition-count",
                                         "number of partitions of n items into r nonempty blocks");
  o_count->add_option("--n", ora.n, "item count")->required();
  o_count->add_option("--r", ora.r, "block count")->required();
  o_count->callback([&] {
    ttl::Int count = ttl::stirling2(static_cast<std::size_t>(ora.n),
                                    static_cast<std::size_t>(ora.r));
    Json report;
    report["n"] = ora.n;
    report["r"] = ora.r;
    report["count"] = count.str();
    rc = finish(report, "S(" + std::to_string(ora.n) + ", " + std::to_string(ora.r) + ") = " +
                            count.str(),
                0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    Json report;
    report["verdict"] = "error";
    report["message"] = e.what();
    std::cout << ttl::json_to_text(report);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ttl::Error& e) {
    Json report;
    report["verdict"] = "error";
    report["message"] = e.what();
    std::cout << ttl::json_to_text(report);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
