// Copyright the supergrade developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * Run configurations and the command dispatcher.  A RunConfig is a command
 * name plus key=value arguments; it can come from CLI flags, from a config
 * file in the same grammar, or both (earlier entries win, so CLI flags
 * placed before file contents override the file).  run() maps a config to a
 * Report and is the single entry point behind the CLI.
 *
 * Commands and their claim-catalog entries:
 *
 *   group       group=G                                   (info, always pass)
 *   grade       spec={<grading>}                          grading invariants
 *   involution  sig=n,m inv=osp|trp|exchange|transpose    axiom suite
 *   enumerate   group=G sig=n,m inv=osp|trp               Thm5.2 | Thm5.3
 *   falsify     lemma=5.1 spec={typeq ..} | thm=4.3 k=K   Lemma5.1 | Thm4.3
 *   verify      thm=5.2|5.3|6.5|6.8|7.1|7.2|7.3|7.4 ...   per catalog entry
 *   structure   kind=.. (group/theta/inv | spec={..})     Thm7.2/7.3/7.4
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/classify.hpp"
#include "supergrade/report.hpp"
#include "supergrade/specs.hpp"
#include "supergrade/super_structures.hpp"

namespace supergrade {

struct RunConfig {
  std::string command;
  std::vector<KeyValue> args;  // first occurrence of a key wins
  std::string format = "text";

  const KeyValue *find(const std::string &key) const {
    for (const auto &kv : args)
      if (kv.key == key) return &kv;
    return nullptr;
  }
  const KeyValue &require(const std::string &key) const {
    const KeyValue *kv = find(key);
    if (!kv) throw SpecError(1, 1, "command '" + command + "' needs " + key + "=");
    return *kv;
  }
};

/** Same token grammar as specs; the head token is the command. */
inline RunConfig parse_config(const std::string &text, long line = 1, long col = 1) {
  ParsedSpec spec = parse_spec_text(text, line, col);
  RunConfig cfg;
  cfg.command = spec.head;
  for (auto &kv : spec.pairs) {
    if (kv.key == "format") {
      if (kv.value != "text" && kv.value != "json")
        throw SpecError(kv.line, kv.col, "format must be text or json");
      cfg.format = kv.value;
      continue;
    }
    cfg.args.push_back(std::move(kv));
  }
  return cfg;
}

inline std::string render_config(const RunConfig &cfg) {
  std::string out = cfg.command;
  for (const auto &kv : cfg.args) {
    const bool needs_braces =
        kv.value.find_first_of(" \t\n") != std::string::npos && kv.value.front() != '{';
    out += " " + kv.key + "=" + (needs_braces ? "{" + kv.value + "}" : kv.value);
  }
  if (cfg.format != "text") out += " format=" + cfg.format;
  return out;
}

namespace detail {

inline bool parse_bool_flag(const KeyValue &kv) {
  if (kv.value == "0" || kv.value == "false") return false;
  if (kv.value == "1" || kv.value == "true") return true;
  throw SpecError(kv.line, kv.col, kv.key + " must be 0 or 1");
}

inline long parse_single_long(const KeyValue &kv) {
  std::size_t i = 0;
  const long v = parse_long_at(kv.value, i, kv.line, kv.col);
  if (i != kv.value.size()) throw SpecError(kv.line, kv.col, kv.key + ": trailing text");
  return v;
}

/** "Thm5.2" / "thm 5.2" / "5.2" all name the same catalog entry. */
inline std::string claim_numeral(const std::string &s) {
  std::size_t i = 0;
  while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline Superinvolution involution_by_name(const std::string &name, SuperSignature sig, long line,
                                          long col) {
  if (name == "osp") return Superinvolution::osp(sig);
  if (name == "trp") {
    if (sig.n != sig.m) throw SpecError(line, col, "inv=trp needs signature n,n");
    return Superinvolution::trp(sig.n);
  }
  if (name == "exchange") {
    if (sig.n % 2 != 0 || sig.m % 2 != 0)
      throw SpecError(line, col, "inv=exchange needs an even signature 2n,2m");
    return Superinvolution::exchange(sig.n / 2, sig.m / 2);
  }
  if (name == "transpose") return transpose_involution(sig);
  throw SpecError(line, col, "unknown involution '" + name + "' (osp | trp | exchange | transpose)");
}

inline void fill_checks(Report &report, const CheckList &checks) {
  for (const Check &c : checks.items()) report.checks.add(c.name, c.ok, c.note);
}

inline Report run_group(const RunConfig &cfg) {
  const KeyValue &g = cfg.require("group");
  const FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
  Report r;
  r.claim = "group-structure";
  r.instance = "group=" + render_group(G);
  r.verdict = "pass";
  r.count("order", G.order());
  r.count("exponent", G.exponent());
  r.count("invariant_factors", static_cast<long long>(G.invariant_factors().size()));
  if (G.order() <= 64) {
    for (const auto &e : G.elements()) r.witnesses.push_back(element_to_string(e));
  } else {
    r.notes.push_back("element list suppressed (order > 64)");
  }
  return r;
}

inline Report run_grade(const RunConfig &cfg) {
  const KeyValue &s = cfg.require("spec");
  const GradingSpec spec = parse_grading_spec(strip_braces(s.value), s.line, s.col);
  const Grading grading = build_grading(spec);
  Report r;
  r.claim = "grading";
  r.instance = render_grading_spec(spec);
  r.checks.add("multiplicative", grading.is_multiplicative());
  r.checks.add("super_compatible", grading.is_super_compatible());
  r.checks.add("components_total", [&] {
    long total = 0;
    for (const auto &g : grading.support()) total += grading.component_dim(g);
    return total == grading.flat_dim();
  }());
  r.verdict = r.checks.all_ok() ? "pass" : "fail";
  r.count("matrix_size", grading.signature().size());
  r.count("support_size", static_cast<long long>(grading.support().size()));
  r.count("fine", grading.is_fine() ? 1 : 0);
  for (const auto &g : grading.support())
    r.per_degree[element_to_string(g)] = grading.component_dim(g);
  return r;
}

inline Report run_involution(const RunConfig &cfg) {
  const KeyValue &sig_kv = cfg.require("sig");
  const SuperSignature sig = parse_signature(sig_kv.value, sig_kv.line, sig_kv.col);
  const KeyValue &inv_kv = cfg.require("inv");
  const Superinvolution inv = involution_by_name(inv_kv.value, sig, inv_kv.line, inv_kv.col);
  Report r;
  r.claim = "superinvolution-axioms";
  r.instance = "sig=" + render_signature(inv.signature()) + " inv=" + inv_kv.value;
  const auto axioms = inv.check_axioms();
  r.checks.add("axioms", axioms.ok, axioms.witness);
  if (axioms.ok) {
    const Subspace H = inv.H_space(), K = inv.K_space();
    const long N = inv.signature().size();
    r.checks.add("h_plus_k_is_ambient", (H + K) == Subspace::full(N * N));
    r.count("matrix_size", N);
    r.count("h_dim", static_cast<long long>(H.dim()));
    r.count("k_dim", static_cast<long long>(K.dim()));
  }
  r.verdict = r.checks.all_ok() ? "pass" : "fail";
  return r;
}

inline Report run_enumerate(const RunConfig &cfg) {
  const KeyValue &g = cfg.require("group");
  const FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
  const KeyValue &sig_kv = cfg.require("sig");
  const SuperSignature sig = parse_signature(sig_kv.value, sig_kv.line, sig_kv.col);
  const KeyValue &inv_kv = cfg.require("inv");
  InvolutionKind kind;
  if (inv_kv.value == "osp")
    kind = InvolutionKind::Osp;
  else if (inv_kv.value == "trp")
    kind = InvolutionKind::Trp;
  else
    throw SpecError(inv_kv.line, inv_kv.col, "enumerate: inv must be osp or trp");
  EnumerationOptions opts;
  if (const KeyValue *kv = cfg.find("dedup")) opts.dedup = parse_bool_flag(*kv);
  if (const KeyValue *kv = cfg.find("ignore_bounds")) opts.ignore_bounds = parse_bool_flag(*kv);
  const EnumerationResult res = enumerate_admissible(G, sig.n, sig.m, kind, opts);
  Report r;
  r.claim = kind == InvolutionKind::Osp ? "Thm5.2" : "Thm5.3";
  r.instance = "group=" + render_group(G) + " sig=" + render_signature(sig) +
               " inv=" + inv_kv.value + (opts.dedup ? "" : " dedup=0");
  r.checks.add("predicate_matches_direct", res.predicate_matches_direct);
  r.verdict = r.checks.all_ok() ? "pass" : "fail";
  r.count("domain_size", static_cast<long long>(res.domain_size));
  r.count("raw_admissible", static_cast<long long>(res.raw_admissible));
  if (opts.dedup) r.count("dedup_classes", static_cast<long long>(res.dedup_classes));
  r.count("disagreements", static_cast<long long>(res.disagreement_count));
  r.witnesses = res.disagreements;
  return r;
}

inline Report report_from_falsification(const FalsificationReport &rep, const std::string &claim,
                                        const std::string &instance) {
  Report r;
  r.claim = claim;
  r.instance = instance;
  r.evidence_kind = rep.evidence_kind;
  fill_checks(r, rep.checks);
  r.verdict = r.checks.all_ok() ? "pass" : "fail";
  r.count("family_size", static_cast<long long>(rep.family_size));
  r.count("superinvolutions_in_family", static_cast<long long>(rep.superinvolutions_in_family));
  r.count("graded_superinvolutions", static_cast<long long>(rep.graded_superinvolutions));
  r.notes.push_back(rep.claim);
  r.notes.push_back("family: " + rep.family);
  if (rep.graded_superinvolutions == 0)
    r.notes.push_back(
        "no compatible candidate in the bounded family; refutation holds at this size");
  return r;
}

inline Report run_falsify(const RunConfig &cfg) {
  ScanOptions opts;
  if (const KeyValue *kv = cfg.find("max_matrix_size")) opts.max_matrix_size = parse_single_long(*kv);
  if (const KeyValue *kv = cfg.find("include_box")) opts.include_box = parse_bool_flag(*kv);
  const KeyValue *lemma = cfg.find("lemma");
  const KeyValue *thm = cfg.find("thm");
  if (lemma && claim_numeral(lemma->value) == "5.1") {
    const KeyValue &s = cfg.require("spec");
    const TypeQSpec spec = parse_typeq_spec(s.value, s.line, s.col);
    return report_from_falsification(falsify_lemma51(spec, opts), "Lemma5.1",
                                     render_typeq_spec(spec));
  }
  if (thm && claim_numeral(thm->value) == "4.3") {
    const KeyValue &k = cfg.require("k");
    const long kk = parse_single_long(k);
    return report_from_falsification(falsify_thm43(kk, opts), "Thm4.3",
                                     "thm43 k=" + std::to_string(kk));
  }
  throw SpecError(1, 1, "falsify needs lemma=5.1 spec={typeq ..} or thm=4.3 k=K");
}

inline Report run_verify_instance(const RunConfig &cfg, bool thm53) {
  const KeyValue &s = cfg.require("spec");
  Report r;
  bool admissible = false, direct = false;
  // An instance whose twist blocks do not exist has no involution of this
  // form at all; that counts as "not graded" for the equivalence claim.
  if (thm53) {
    const Thm53Instance inst = parse_thm53_spec(s.value, s.line, s.col);
    r.claim = "Thm5.3";
    r.instance = render_thm53_spec(inst);
    admissible = thm53_admissible(inst);
    try {
      const MaterializedInstance mat = materialize(inst);
      direct = is_graded_superinvolution(mat.grading, mat.involution);
      if (admissible && direct) {
        r.checks.add("h_blockform_matches_eigenspace",
                     thm53_H_blockform(inst.n()) == mat.involution.H_space());
        r.checks.add("k_blockform_matches_eigenspace",
                     thm53_K_blockform(inst.n()) == mat.involution.K_space());
      }
    } catch (const std::invalid_argument &) {
      direct = false;
    }
  } else {
    const Thm52Instance inst = parse_thm52_spec(s.value, s.line, s.col);
    r.claim = "Thm5.2";
    r.instance = render_thm52_spec(inst);
    admissible = thm52_admissible(inst);
    try {
      const MaterializedInstance mat = materialize(inst);
      direct = is_graded_superinvolution(mat.grading, mat.involution);
      if (admissible && direct) {
        r.checks.add("h_blockform_matches_eigenspace",
                     thm52_H_blockform(inst) == mat.involution.H_space());
        r.checks.add("k_blockform_matches_eigenspace",
                     thm52_K_blockform(inst) == mat.involution.K_space());
      }
    } catch (const std::invalid_argument &) {
      direct = false;
    }
  }
  r.checks.add("predicate_matches_direct", admissible == direct,
               admissible == direct ? "" : "admissibility predicate disagrees with direct check");
  r.verdict = r.checks.all_ok() ? "pass" : "fail";
  r.count("admissible", admissible ? 1 : 0);
  r.count("graded_direct", direct ? 1 : 0);
  return r;
}

inline std::pair<Grading, Superinvolution> parse_instance_pair(const KeyValue &kv) {
  const ParsedSpec probe = parse_spec_text(strip_braces(kv.value), kv.line, kv.col);
  if (probe.head == "thm52") {
    const MaterializedInstance mat = materialize(parse_thm52_spec(kv.value, kv.line, kv.col));
    return {mat.grading, mat.involution};
  }
  if (probe.head == "thm53") {
    const MaterializedInstance mat = materialize(parse_thm53_spec(kv.value, kv.line, kv.col));
    return {mat.grading, mat.involution};
  }
  throw SpecError(kv.line, kv.col, "expected a thm52 or thm53 instance spec");
}

inline std::string render_instance_pair_source(const KeyValue &kv) {
  const ParsedSpec probe = parse_spec_text(strip_braces(kv.value), kv.line, kv.col);
  if (probe.head == "thm52") return render_thm52_spec(parse_thm52_spec(kv.value, kv.line, kv.col));
  return render_thm53_spec(parse_thm53_spec(kv.value, kv.line, kv.col));
}

inline PauliSpec parse_fine_pauli(const KeyValue &kv) {
  const GradingSpec spec = parse_grading_spec(strip_braces(kv.value), kv.line, kv.col);
  if (const auto *p = std::get_if<PauliSpec>(&spec)) return *p;
  throw SpecError(kv.line, kv.col, "fine factor must be a pauli grading spec");
}

inline Report run_verify(const RunConfig &cfg) {
  const KeyValue *which = cfg.find("thm");
  if (!which) which = cfg.find("lemma");
  if (!which) throw SpecError(1, 1, "verify needs thm= (or lemma=) naming a catalog entry");
  const std::string id = claim_numeral(which->value);

  if (id == "5.2") return run_verify_instance(cfg, /*thm53=*/false);
  if (id == "5.3") return run_verify_instance(cfg, /*thm53=*/true);

  if (id == "6.5") {
    const KeyValue &g = cfg.require("group");
    const FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
    const KeyValue &sig_kv = cfg.require("sig");
    const SuperSignature sig = parse_signature(sig_kv.value, sig_kv.line, sig_kv.col);
    const Lemma65Report rep = lemma65_exhaustive(G, sig);
    Report r;
    r.claim = "Lemma6.5";
    r.instance = "group=" + render_group(G) + " sig=" + render_signature(sig);
    fill_checks(r, rep.checks);
    r.verdict = r.checks.all_ok() ? "pass" : "fail";
    r.count("tuples_checked", static_cast<long long>(rep.tuples_checked));
    return r;
  }

  if (id == "6.8") {
    const KeyValue &elem = cfg.require("elem");
    const KeyValue &fine = cfg.require("fine");
    const auto [c_grading, c_inv] = parse_instance_pair(elem);
    const PauliSpec fine_spec = parse_fine_pauli(fine);
    const Grading D = build_grading(GradingSpec{fine_spec});
    const Thm68Report rep = verify_thm68(c_grading, c_inv, D);
    Report r;
    r.claim = "Thm6.8";
    r.instance = "elem={" + render_instance_pair_source(elem) + "} fine={" +
                 render_grading_spec(GradingSpec{fine_spec}) + "}";
    fill_checks(r, rep.checks);
    r.verdict = r.checks.all_ok() ? "pass" : "fail";
    if (!rep.note.empty()) r.notes.push_back(rep.note);
    return r;
  }

  if (id == "7.1") {
    const KeyValue &s = cfg.require("spec");
    const GradingSpec gspec = parse_grading_spec(strip_braces(s.value), s.line, s.col);
    const Grading grading = build_grading(gspec);
    const KeyValue &inv_kv = cfg.require("inv");
    const Superinvolution inv =
        involution_by_name(inv_kv.value, grading.signature(), inv_kv.line, inv_kv.col);
    const Lemma71Report rep = lemma71_check(grading, inv);
    Report r;
    r.claim = "Lemma7.1";
    r.instance = "spec={" + render_grading_spec(gspec) + "} inv=" + inv_kv.value;
    fill_checks(r, rep.checks);
    r.verdict = r.checks.all_ok() ? "pass" : "fail";
    r.count("involution_graded", rep.involution_graded ? 1 : 0);
    r.count("h_graded", rep.h_total ? 1 : 0);
    r.count("k_graded", rep.k_total ? 1 : 0);
    return r;
  }

  if (id == "7.2" || id == "7.3" || id == "7.4") {
    const StructureKind kind = id == "7.2"   ? StructureKind::OspJordan
                               : id == "7.3" ? StructureKind::PJordan
                                             : StructureKind::BLie;
    const KeyValue &elem = cfg.require("elem");
    const KeyValue &fine = cfg.require("fine");
    const auto [e_grading, e_inv] = parse_instance_pair(elem);
    const PauliSpec fine_spec = parse_fine_pauli(fine);
    const Grading f_grading = build_grading(GradingSpec{fine_spec});
    const TensorFactor fine_factor{f_grading, transpose_involution(f_grading.signature())};
    const TensorFactor elem_factor{e_grading, e_inv};
    const DecompositionReport rep = decomposition_check(kind, fine_factor, elem_factor);
    Report r;
    r.claim = rep.claim;
    r.instance = "elem={" + render_instance_pair_source(elem) + "} fine={" +
                 render_grading_spec(GradingSpec{fine_spec}) + "}";
    fill_checks(r, rep.checks);
    r.verdict = r.checks.all_ok() ? "pass" : "fail";
    r.count("tensor_matrix_size", rep.tensor_matrix_size);
    long long h_total = 0, k_total = 0;
    for (const auto &row : rep.per_degree) {
      r.per_degree["H" + element_to_string(row.degree)] = row.h_dim;
      r.per_degree["K" + element_to_string(row.degree)] = row.k_dim;
      h_total += row.h_dim;
      k_total += row.k_dim;
    }
    r.count("h_dim", h_total);
    r.count("k_dim", k_total);
    if (!rep.note.empty()) r.notes.push_back(rep.note);
    return r;
  }

  throw SpecError(which->line, which->col,
                  "unknown catalog entry '" + which->value +
                      "' (5.2, 5.3, 6.5, 6.8, 7.1, 7.2, 7.3, 7.4)");
}

inline Report run_structure(const RunConfig &cfg) {
  const KeyValue &kind_kv = cfg.require("kind");
  StructureKind kind;
  if (kind_kv.value == "osp-jordan")
    kind = StructureKind::OspJordan;
  else if (kind_kv.value == "p-jordan")
    kind = StructureKind::PJordan;
  else if (kind_kv.value == "b-lie")
    kind = StructureKind::BLie;
  else
    throw SpecError(kind_kv.line, kind_kv.col,
                    "kind must be osp-jordan, p-jordan or b-lie");

  std::optional<Grading> grading;
  std::optional<Superinvolution> inv;
  std::string instance = "kind=" + std::string(structure_kind_name(kind));
  if (const KeyValue *s = cfg.find("spec")) {
    auto pair = parse_instance_pair(*s);
    grading.emplace(std::move(pair.first));
    inv.emplace(std::move(pair.second));
    instance += " spec={" + render_instance_pair_source(*s) + "}";
  } else {
    const KeyValue &g = cfg.require("group");
    const FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
    const long n = parse_single_long(cfg.require("n"));
    const long m = kind == StructureKind::PJordan ? n : parse_single_long(cfg.require("m"));
    const SuperSignature sig = kind == StructureKind::OspJordan ? SuperSignature{n, m}
                               : kind == StructureKind::PJordan ? SuperSignature{n, n}
                                                                : SuperSignature{2 * n + 1, 2 * m};
    const KeyValue &theta_kv = cfg.require("theta");
    const auto theta = parse_element_list(theta_kv.value, G, theta_kv.line, theta_kv.col);
    if (static_cast<long>(theta.size()) != sig.size())
      throw SpecError(theta_kv.line, theta_kv.col,
                      "theta has " + std::to_string(theta.size()) + " entries, kind '" +
                          kind_kv.value + "' needs " + std::to_string(sig.size()));
    grading.emplace(elementary_grading(G, theta, sig));
    const std::string def = kind == StructureKind::PJordan ? "trp" : "osp";
    if (const KeyValue *inv_kv = cfg.find("inv"); inv_kv && inv_kv->value != def)
      throw SpecError(inv_kv->line, inv_kv->col, "kind '" + kind_kv.value + "' uses inv=" + def);
    inv.emplace(involution_by_name(def, sig, kind_kv.line, kind_kv.col));
    instance += " group=" + render_group(G) + " sig=" + render_signature(sig) +
                " theta=" + render_element_list(theta) + " inv=" + def;
  }

  const SuperSignature sig = grading->signature();
  const GradedSuperStructure st = [&] {
    switch (kind) {
      case StructureKind::OspJordan:
        return build_osp_jordan(sig.n, sig.m, *inv, *grading);
      case StructureKind::PJordan:
        return build_p_jordan(sig.n, *inv, *grading);
      default: {
        if (sig.n % 2 != 1 || sig.m % 2 != 0)
          throw SpecError(kind_kv.line, kind_kv.col, "b-lie needs signature 2n+1,2m");
        return build_b_lie((sig.n - 1) / 2, sig.m / 2, *inv, *grading);
      }
    }
  }();

  Report r;
  r.claim = kind == StructureKind::OspJordan ? "Thm7.2"
            : kind == StructureKind::PJordan ? "Thm7.3"
                                             : "Thm7.4";
  r.instance = instance;
  fill_checks(r, st.report);
  r.verdict = st.ok() ? "pass" : "fail";
  r.count("matrix_size", sig.size());
  r.count("carrier_dim", static_cast<long long>(st.carrier.dim()));
  for (const auto &[deg, space] : st.components)
    r.per_degree[element_to_string(deg)] = static_cast<long>(space.dim());
  r.notes.push_back("product rule: " + st.product_rule);
  if (!st.note.empty()) r.notes.push_back(st.note);
  return r;
}

}  // namespace detail

inline Report run(const RunConfig &cfg) {
  if (cfg.command.empty()) throw SpecError(1, 1, "missing command");
  if (cfg.command == "group") return detail::run_group(cfg);
  if (cfg.command == "grade") return detail::run_grade(cfg);
  if (cfg.command == "involution") return detail::run_involution(cfg);
  if (cfg.command == "enumerate") return detail::run_enumerate(cfg);
  if (cfg.command == "falsify") return detail::run_falsify(cfg);
  if (cfg.command == "verify") return detail::run_verify(cfg);
  if (cfg.command == "structure") return detail::run_structure(cfg);
  throw SpecError(1, 1, "unknown command '" + cfg.command + "'");
}

}  // namespace supergrade
