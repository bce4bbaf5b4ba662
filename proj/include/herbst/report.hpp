#pragma once

#include "herbst/criterion.hpp"
#include "herbst/io.hpp"
#include "herbst/orbifold.hpp"
#include "herbst/polytope.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <type_traits>
#include <string>
#include <vector>

namespace herbst {

inline constexpr const char *kWarnRankDeficient = "rank_deficient_gauge_group";

struct OrbifoldSection {
  std::vector<BigInteger> invariant_factors;
  std::vector<BigInteger> effective_factors;
  IntMatrix action_exponents;
  BigInteger group_order;
  ActionLattice canonical_lattice;

  friend bool operator==(const OrbifoldSection &, const OrbifoldSection &) = default;
};

struct PhaseEntry {
  std::vector<std::size_t> chosen;
  IntMatrix R;
  RatMatrix reduced_q;
  IntMatrix cone_generators;
  RatVector interior_sample;
  std::vector<std::size_t> vev;
  std::vector<std::size_t> lg;
  std::optional<OrbifoldSection> orbifold;
  std::optional<std::string> warning;

  friend bool operator==(const PhaseEntry &, const PhaseEntry &) = default;
};

struct PhaseReport {
  IntMatrix charges;
  std::size_t rho = 0;
  std::size_t fields = 0;
  std::size_t rank = 0;
  IntMatrix reduced;
  bool prune = true;
  std::vector<std::size_t> candidates;
  std::vector<PhaseEntry> phases;
  std::optional<bool> all_actions_equivalent;
  std::vector<std::string> warnings;

  friend bool operator==(const PhaseReport &, const PhaseReport &) = default;
};

inline OrbifoldSection orbifold_section(const OrbifoldData &od) {
  return {od.invariant_factors, effective_factors(od), od.action_exponents, od.group_order,
          od.canonical_lattice};
}

/// The full pipeline: rank and reduction, phase enumeration, per-phase
/// orbifold data (skipped with a warning when the gauge action is not of
/// full rank), and the cross-phase action comparison.
inline PhaseReport build_phase_report(const IntMatrix &q, bool prune = true) {
  ChargeMatrix cm = make_charge_matrix(q);
  PhaseReport rep;
  rep.charges = q;
  rep.rho = cm.gauge_rank();
  rep.fields = cm.field_count();
  rep.rank = cm.rank();
  rep.reduced = cm.reduced();
  rep.prune = prune;
  rep.candidates = candidate_columns(cm);

  std::vector<ActionLattice> lattices;
  for (const auto &w : enumerate_phases(cm, prune)) {
    PhaseEntry e;
    e.chosen = w.chosen;
    e.R = w.R;
    e.reduced_q = w.reduced_q;
    auto cone = phase_cone(w);
    e.cone_generators = cone.generators;
    e.interior_sample = cone.interior_sample;
    auto split = vev_split(w);
    e.vev = split.vev;
    e.lg = split.lg;
    if (cm.full_rank()) {
      auto od = orbifold_group(w);
      lattices.push_back(od.canonical_lattice);
      e.orbifold = orbifold_section(od);
    } else {
      e.warning = kWarnRankDeficient;
    }
    rep.phases.push_back(std::move(e));
  }
  if (!cm.full_rank()) {
    rep.warnings.emplace_back(kWarnRankDeficient);
  } else if (!rep.phases.empty()) {
    bool same = true;
    for (const auto &l : lattices) same = same && l == lattices.front();
    rep.all_actions_equivalent = same;
  }
  return rep;
}

namespace detail {

using nlohmann::json;

inline RatVector rat_vector_from_json(const json &j) {
  RatVector out;
  for (const auto &x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

inline std::vector<BigInteger> int_vector_from_json(const json &j) {
  std::vector<BigInteger> out;
  for (const auto &x : j) out.push_back(parse_integer(x.get<std::string>()));
  return out;
}

inline IntMatrix sized_matrix_from_json(const json &j, std::size_t cols) {
  IntMatrix m = io::matrix_from_json(j);
  if (m.rows() == 0) return IntMatrix(0, cols);
  return m;
}

} // namespace detail

inline nlohmann::json to_json(const ActionLattice &l) {
  return {{"exponent", to_string(l.exponent)},
          {"coordinates", l.coordinates},
          {"basis", io::matrix_to_json(l.basis)}};
}

inline ActionLattice action_lattice_from_json(const nlohmann::json &j) {
  ActionLattice l;
  l.exponent = parse_integer(j.at("exponent").get<std::string>());
  l.coordinates = j.at("coordinates").get<std::vector<std::size_t>>();
  l.basis = detail::sized_matrix_from_json(j.at("basis"), l.coordinates.size());
  return l;
}

inline nlohmann::json to_json(const OrbifoldSection &o) {
  return {{"invariant_factors", io::vector_to_json(o.invariant_factors)},
          {"effective_factors", io::vector_to_json(o.effective_factors)},
          {"action_exponents", io::matrix_to_json(o.action_exponents)},
          {"group_order", to_string(o.group_order)},
          {"canonical_lattice", to_json(o.canonical_lattice)}};
}

inline nlohmann::json to_json(const PhaseReport &rep) {
  using nlohmann::json;
  json phases = json::array();
  for (const auto &p : rep.phases) {
    json e = {{"chosen", p.chosen},
              {"R", io::matrix_to_json(p.R)},
              {"reducedQ", io::matrix_to_json(p.reduced_q)},
              {"cone_generators", io::matrix_to_json(p.cone_generators)},
              {"interior_sample", io::vector_to_json(p.interior_sample)},
              {"vev", p.vev},
              {"lg", p.lg},
              {"orbifold", p.orbifold ? to_json(*p.orbifold) : json(nullptr)}};
    if (p.warning) e["warning"] = *p.warning;
    phases.push_back(std::move(e));
  }
  return {{"input",
           {{"Q", io::matrix_to_json(rep.charges)},
            {"rho", rep.rho},
            {"N", rep.fields},
            {"rank", rep.rank},
            {"reduced", io::matrix_to_json(rep.reduced)}}},
          {"prune", rep.prune},
          {"candidates", rep.candidates},
          {"phases", std::move(phases)},
          {"cross_phase",
           {{"all_actions_equivalent",
             rep.all_actions_equivalent ? json(*rep.all_actions_equivalent) : json(nullptr)}}},
          {"warnings", rep.warnings}};
}

inline PhaseReport phase_report_from_json(const nlohmann::json &j) {
  PhaseReport rep;
  const auto &in = j.at("input");
  rep.rho = in.at("rho").get<std::size_t>();
  rep.fields = in.at("N").get<std::size_t>();
  rep.rank = in.at("rank").get<std::size_t>();
  rep.charges = detail::sized_matrix_from_json(in.at("Q"), rep.fields);
  rep.reduced = detail::sized_matrix_from_json(in.at("reduced"), rep.fields);
  rep.prune = j.at("prune").get<bool>();
  rep.candidates = j.at("candidates").get<std::vector<std::size_t>>();
  const std::size_t n = rep.fields - rep.rank;
  for (const auto &p : j.at("phases")) {
    PhaseEntry e;
    e.chosen = p.at("chosen").get<std::vector<std::size_t>>();
    e.R = detail::sized_matrix_from_json(p.at("R"), rep.rank);
    e.reduced_q = io::rat_matrix_from_json(p.at("reducedQ"), rep.fields);
    e.cone_generators = detail::sized_matrix_from_json(p.at("cone_generators"), rep.rank);
    e.interior_sample = detail::rat_vector_from_json(p.at("interior_sample"));
    e.vev = p.at("vev").get<std::vector<std::size_t>>();
    e.lg = p.at("lg").get<std::vector<std::size_t>>();
    if (!p.at("orbifold").is_null()) {
      const auto &o = p.at("orbifold");
      OrbifoldSection s;
      s.invariant_factors = detail::int_vector_from_json(o.at("invariant_factors"));
      s.effective_factors = detail::int_vector_from_json(o.at("effective_factors"));
      s.action_exponents = detail::sized_matrix_from_json(o.at("action_exponents"), n);
      s.group_order = parse_integer(o.at("group_order").get<std::string>());
      s.canonical_lattice = action_lattice_from_json(o.at("canonical_lattice"));
      e.orbifold = std::move(s);
    }
    if (p.contains("warning")) e.warning = p.at("warning").get<std::string>();
    rep.phases.push_back(std::move(e));
  }
  const auto &eq = j.at("cross_phase").at("all_actions_equivalent");
  if (!eq.is_null()) rep.all_actions_equivalent = eq.get<bool>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  return rep;
}

namespace detail {

template <class M>
std::string matrix_inline(const M &m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
  }
  return s + ")";
}

template <class T>
std::string list_inline(const std::vector<T> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_integral_v<T>)
      s += std::to_string(v[i]);
    else
      s += to_string(v[i]);
  }
  return s + ")";
}

} // namespace detail

/// Human-readable rendering; same numbers as the JSON form.
inline std::string render_table(const PhaseReport &rep) {
  std::ostringstream out;
  out << "charge matrix " << rep.rho << "x" << rep.fields << ", rank " << rep.rank
      << "  Q = " << detail::matrix_inline(rep.charges) << "\n";
  out << "candidate columns " << detail::list_inline(rep.candidates)
      << (rep.prune ? "" : "  (pruning off)") << "\n";
  if (rep.phases.empty()) {
    out << "no affine LG point\n";
    return out.str();
  }
  out << rep.phases.size() << " affine phase" << (rep.phases.size() == 1 ? "" : "s") << "\n";
  for (std::size_t k = 0; k < rep.phases.size(); ++k) {
    const auto &p = rep.phases[k];
    out << "\nphase " << k << ": chosen " << detail::list_inline(p.chosen) << "\n";
    out << "  R            " << detail::matrix_inline(p.R) << "\n";
    out << "  R^-1 Q       " << detail::matrix_inline(p.reduced_q) << "\n";
    out << "  cone         " << detail::matrix_inline(p.cone_generators) << "  interior "
        << detail::list_inline(p.interior_sample) << "\n";
    out << "  vev          " << detail::list_inline(p.vev) << "\n";
    out << "  lg           " << detail::list_inline(p.lg) << "\n";
    if (p.orbifold) {
      const auto &o = *p.orbifold;
      out << "  factors      " << detail::list_inline(o.invariant_factors) << "  effective "
          << detail::list_inline(o.effective_factors) << "  order " << to_string(o.group_order)
          << "\n";
      out << "  action       " << detail::matrix_inline(o.action_exponents) << "\n";
    }
    if (p.warning) out << "  warning      " << *p.warning << "\n";
  }
  if (rep.all_actions_equivalent)
    out << "\nall actions equivalent: " << (*rep.all_actions_equivalent ? "yes" : "no") << "\n";
  for (const auto &w : rep.warnings) out << "warning: " << w << "\n";
  return out.str();
}

} // namespace herbst
