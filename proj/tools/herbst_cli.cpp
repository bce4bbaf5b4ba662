// herbst: affine LG phases of a charge matrix.
//
//   herbst phases data/golden/two_lg.json
//   herbst --json orbifold --matrix "0,0,1,1,1,1,-4;1,1,0,0,0,-2,0" --chosen 5,6
//   herbst --seed 7 generate --r 2 --n 3 --count 5
//
// Exit codes: 0 phase found / check passed, 1 none found / check failed,
// 2 usage or parse error.

#include "herbst/herbst.hpp"
#include "herbst/io.hpp"
#include "herbst/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace herbst;
using nlohmann::json;

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 0;
};

struct InputArgs {
  std::string path;
  std::string matrix;
};

void add_input(CLI::App *sub, InputArgs &in) {
  sub->add_option("input", in.path, "matrix file (JSON or CSV), '-' for stdin");
  sub->add_option("--matrix,-m", in.matrix, "inline matrix, rows separated by ';'");
}

IntMatrix load_matrix(const InputArgs &in) {
  if (!in.matrix.empty() && !in.path.empty())
    throw Error(ErrorKind::InvalidArgument, "give either an input file or --matrix, not both");
  if (!in.matrix.empty()) return io::parse_matrix(in.matrix);
  if (in.path.empty()) throw Error(ErrorKind::InvalidArgument, "no input matrix");
  if (in.path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_matrix(text);
  }
  return io::parse_matrix(io::read_file(in.path));
}

json error_json(const Error &e) {
  json j = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (e.location()) {
    j["line"] = e.location()->first;
    j["column"] = e.location()->second;
  }
  return j;
}

// Criterion failures are answers, everything else is bad input.
int exit_code_for(ErrorKind k) {
  switch (k) {
  case ErrorKind::SingularChoice:
  case ErrorKind::NotNegativeCone:
  case ErrorKind::RankDeficientGaugeGroup:
  case ErrorKind::LevelNotInImage:
  case ErrorKind::NotInterior:
  case ErrorKind::RejectionBudgetExceeded:
    return kNotFound;
  default:
    return kInputError;
  }
}

void emit(const Globals &g, const json &j, const std::string &text) {
  if (g.quiet) return;
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int report_error(const Globals &g, const Error &e) {
  if (g.json && !g.quiet)
    std::cout << json{{"error", error_json(e)}}.dump(2) << "\n";
  else if (!g.quiet)
    std::cerr << "error: " << e.what() << "\n";
  return exit_code_for(e.kind());
}

// Groups of phase indices whose cones coincide (same primitive rays).
std::vector<std::vector<std::size_t>> cone_classes(const PhaseReport &rep) {
  std::map<std::vector<IntVector>, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < rep.phases.size(); ++k) {
    const IntMatrix &gens = rep.phases[k].cone_generators;
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      IntVector c = gens.column(j);
      BigInteger d = 0;
      for (const auto &x : c) d = gcd(d, x);
      for (auto &x : c) x /= d;
      rays.push_back(std::move(c));
    }
    std::sort(rays.begin(), rays.end());
    classes[rays].push_back(k);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto &[rays, idx] : classes) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

std::string index_list(const std::vector<std::size_t> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_phases(const Globals &g, const InputArgs &in, bool prune, bool dedup) {
  PhaseReport rep = build_phase_report(load_matrix(in), prune);
  json j = to_json(rep);
  std::string text = render_table(rep);
  if (dedup) {
    auto classes = cone_classes(rep);
    j["cone_classes"] = classes;
    text += "cone classes:";
    for (const auto &c : classes) text += " {" + index_list(c) + "}";
    text += "\n";
  }
  emit(g, j, text);
  return rep.phases.empty() ? kNotFound : kFound;
}

int cmd_orbifold(const Globals &g, const InputArgs &in, const std::string &chosen) {
  ChargeMatrix cm = make_charge_matrix(load_matrix(in));
  HerbstWitness w = check_witness(cm, io::parse_index_list(chosen));
  OrbifoldData od = orbifold_group(w);
  OrbifoldSection sec = orbifold_section(od);
  json j = {{"chosen", w.chosen},
            {"lg", w.remaining},
            {"R", io::matrix_to_json(w.R)},
            {"S", io::matrix_to_json(w.S)},
            {"smith", {{"U", io::matrix_to_json(od.smith.U)},
                       {"D", io::matrix_to_json(od.smith.D)},
                       {"V", io::matrix_to_json(od.smith.V)}}},
            {"orbifold", to_json(sec)}};
  std::ostringstream t;
  t << "chosen " << detail::list_inline(w.chosen) << ", LG coordinates "
    << detail::list_inline(w.remaining) << "\n";
  t << "Smith  U " << detail::matrix_inline(od.smith.U) << "  D "
    << detail::matrix_inline(od.smith.D) << "  V " << detail::matrix_inline(od.smith.V) << "\n";
  t << "factors " << detail::list_inline(sec.invariant_factors) << "  effective "
    << detail::list_inline(sec.effective_factors) << "  order " << to_string(sec.group_order)
    << "\n";
  for (std::size_t a = 0; a < sec.invariant_factors.size(); ++a) {
    if (sec.invariant_factors[a] == 1) continue;
    t << "  Z_" << to_string(sec.invariant_factors[a]) << " weights "
      << detail::list_inline(sec.action_exponents.row(a)) << "\n";
  }
  emit(g, j, t.str());
  return kFound;
}

int cmd_polytope(const Globals &g, const InputArgs &in, const std::string &chosen,
                 const std::string &level) {
  ChargeMatrix cm = make_charge_matrix(load_matrix(in));
  HerbstWitness w = check_witness(cm, io::parse_index_list(chosen));
  RatVector s = level.empty() ? phase_cone(w).interior_sample : io::parse_rational_list(level);
  if (s.size() != cm.gauge_rank())
    throw Error(ErrorKind::DimensionMismatch,
                "level has " + std::to_string(s.size()) + " entries, expected " +
                    std::to_string(cm.gauge_rank()));
  MomentPolyhedron p = moment_polyhedron(cm, s, &w);
  PhaseMembership where = is_in_phase_cone(w, s);
  const char *names[] = {"interior", "boundary", "outside"};
  std::optional<bool> simplicial;
  if (where == PhaseMembership::Interior) simplicial = verify_simplicial_cone(w, s);

  json hs = json::array();
  std::ostringstream t;
  t << "level " << detail::list_inline(s) << " (" << names[static_cast<int>(where)]
    << " to the phase cone)\n";
  t << "lift  " << detail::list_inline(p.lift) << "\n";
  for (std::size_t i = 0; i < p.half_spaces.size(); ++i) {
    const auto &h = p.half_spaces[i];
    hs.push_back({{"field", i}, {"normal", io::vector_to_json(h.normal)},
                  {"offset", to_string(h.offset)}});
    t << "  field " << i << ": " << detail::list_inline(h.normal) << " . m + "
      << to_string(h.offset) << " >= 0\n";
  }
  t << "simplicial cone: "
    << (simplicial ? (*simplicial ? "yes" : "no") : "not checked (level not interior)") << "\n";
  json j = {{"chosen", w.chosen},
            {"level", io::vector_to_json(s)},
            {"membership", names[static_cast<int>(where)]},
            {"A", io::matrix_to_json(p.A)},
            {"lift", io::vector_to_json(p.lift)},
            {"half_spaces", hs},
            {"kernel_block", io::matrix_to_json(kernel_block(cm, w.chosen, &p.A))},
            {"simplicial", simplicial ? json(*simplicial) : json(nullptr)}};
  emit(g, j, t.str());
  return simplicial.value_or(false) ? kFound : kNotFound;
}

int cmd_generate(const Globals &g, GeneratorConfig cfg, std::size_t count) {
  int status = kFound;
  for (std::size_t k = 0; k < count; ++k) {
    cfg.seed = g.seed + k;
    json line = {{"seed", cfg.seed}, {"r", cfg.r}, {"n", cfg.n}};
    try {
      IntMatrix q = random_lg_model(cfg);
      std::vector<std::size_t> chosen(cfg.r);
      for (std::size_t i = 0; i < cfg.r; ++i) chosen[i] = i;
      line["Q"] = io::matrix_to_json(q);
      line["witness"] = chosen;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::RejectionBudgetExceeded) throw;
      line["error"] = error_json(e);
      status = kNotFound;
    }
    if (!g.quiet) std::cout << line.dump() << "\n";
  }
  return status;
}

int cmd_check(const Globals &g, const InputArgs &in, const std::string &monomials) {
  ChargeMatrix cm = make_charge_matrix(load_matrix(in));
  auto ms = io::parse_monomials(io::read_file(monomials));
  bool ok = check_superpotential_invariance(cm, ms);
  json charges = json::array();
  for (const auto &m : ms) charges.push_back(io::vector_to_json(cm.charges() * m));
  emit(g, {{"invariant", ok}, {"charges", charges}},
       std::string(ok ? "invariant" : "not invariant") + "\n");
  return ok ? kFound : kNotFound;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Affine Landau-Ginzburg phases of a gauged linear sigma model"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--quiet,-q", g.quiet, "no output, exit code only");
  app.add_option("--seed", g.seed, "generator seed");

  InputArgs in;
  bool no_prune = false, dedup = false;
  std::string chosen, level, monomials;
  GeneratorConfig cfg;
  std::size_t count = 1;

  auto *phases = app.add_subcommand("phases", "enumerate affine LG phases");
  add_input(phases, in);
  phases->add_flag("--no-prune,!--prune", no_prune, "try every column subset");
  phases->add_flag("--table", "table output (default unless --json)");
  phases->add_flag("--dedup-cones", dedup, "group phases with the same cone");

  auto *orb = app.add_subcommand("orbifold", "orbifold group of one phase");
  add_input(orb, in);
  orb->add_option("--chosen,-c", chosen, "chosen columns, e.g. 5,6")->required();

  auto *poly = app.add_subcommand("polytope", "moment polyhedron at a level");
  add_input(poly, in);
  poly->add_option("--chosen,-c", chosen, "chosen columns")->required();
  poly->add_option("--level,-s", level, "level s_1,...,s_rho (default: interior sample)");

  auto *gen = app.add_subcommand("generate", "random charge matrices with an LG phase");
  gen->add_option("--r", cfg.r, "rank")->check(CLI::PositiveNumber);
  gen->add_option("--n", cfg.n, "number of LG fields");
  gen->add_option("--entry-bound", cfg.entry_bound, "max |entry| of R")->check(CLI::PositiveNumber);
  gen->add_option("--sample-bound", cfg.sample_bound, "box for S columns")
      ->check(CLI::PositiveNumber);
  gen->add_option("--pad", cfg.pad_dependent_rows, "dependent rows to append");
  gen->add_flag("--allow-zero", cfg.allow_zero_columns, "allow zero S columns");
  gen->add_option("--count", count, "number of models");

  auto *check = app.add_subcommand("check", "superpotential invariance");
  add_input(check, in);
  check->add_option("--monomials,-w", monomials, "JSON list of exponent vectors")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*phases) return cmd_phases(g, in, !no_prune, dedup);
    if (*orb) return cmd_orbifold(g, in, chosen);
    if (*poly) return cmd_polytope(g, in, chosen, level);
    if (*gen) return cmd_generate(g, cfg, count);
    if (*check) return cmd_check(g, in, monomials);
  } catch (const Error &e) {
    return report_error(g, e);
  } catch (const std::exception &e) {
    if (!g.quiet) std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
