#include "cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "latkit/av_forms.hpp"
#include "latkit/clifford.hpp"
#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/fp_algebra.hpp"
#include "latkit/lattice.hpp"
#include "latkit/named_lattices.hpp"
#include "latkit/order.hpp"
#include "latkit/padic.hpp"
#include "latkit/suites.hpp"
#include "latkit/torsion.hpp"
#include "latkit_io.hpp"

namespace latkit::cli {

namespace {

using io::json;
using io::to_json;

struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  bool verified = true;

  void line(const std::string& key, const std::string& value) { lines.push_back(key + ": " + value); }
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 42;
  std::size_t trials = 0;
  std::string input;
  std::string name;
  std::string lattice_file;
  std::string end_data;
  std::string ns_file;
  std::string gamma_file;
  std::string r_file;
  std::string endos_file;
  std::string check = "trace";
  std::string f1, f2;
  std::string suite;
  std::uint64_t ell = 0, level = 1, g = 1, p = 0, n = 1, nmax = 4, lmax = 50, d = 1, dmax = 100000;
  bool full = false;
};

std::string str(const Int& x) { return x.get_str(); }

std::string str(const std::vector<Int>& xs) { return to_json(xs).dump(); }

IntVector parse_vector(const std::string& text, const char* what) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Int x;
    if (item.empty() || x.set_str(item, 10) != 0)
      throw InvalidInput(std::string(what) + " must be comma-separated integers");
    out.push_back(x);
  }
  return out;
}

std::vector<IntMatrix> matrices_file(const std::string& path) {
  const json j = io::read_json_file(path);
  return io::matrices_from_json(j.is_object() ? j.at("generators") : j);
}

Lattice lattice_arg(const Options& o) {
  if (!o.name.empty()) return named_lattice(o.name);
  const std::string& path = !o.lattice_file.empty() ? o.lattice_file : o.input;
  if (path.empty()) throw InvalidInput("pass --name <expression> or a lattice JSON file");
  return io::lattice_from_json(io::read_json_file(path));
}

Order order_arg(const Options& o) {
  if (!o.name.empty()) return io::order_from_json(json{{"name", o.name}});
  if (o.input.empty()) throw InvalidInput("pass --name <order> or --input <order.json>");
  return io::order_from_json(io::read_json_file(o.input));
}

TorsionPairingModule torsion_arg(const Options& o) {
  std::vector<IntMatrix> gamma;
  if (!o.gamma_file.empty()) gamma = matrices_file(o.gamma_file);
  return TorsionPairingModule(o.ell, static_cast<unsigned>(o.level), o.g,
                              TorsionPairingModule::standard_pairing(o.g), std::move(gamma));
}

void suite_report(Report& rep, const SuiteResult& r) {
  rep.data = io::suite_to_json(r);
  rep.verified = r.passed();
  rep.lines.push_back("checks: " + r.statement);
  std::ostringstream summary;
  summary << r.trials.size() << " trials, " << r.failures() << " failures";
  if (r.vacuous()) summary << ", " << r.vacuous() << " vacuous";
  rep.line(r.name, summary.str());
  for (const auto& t : r.trials)
    if (!t.passed) rep.lines.push_back("  FAIL #" + std::to_string(t.index) + " " + t.detail);
}

// ---- lattice ----

Report lattice_discr(const Options& o) {
  const Lattice l = lattice_arg(o);
  Report r;
  r.data = {{"rank", l.rank()}, {"discriminant", to_json(l.discriminant())}};
  r.line("rank", std::to_string(l.rank()));
  r.line("discriminant", str(l.discriminant()));
  return r;
}

Report lattice_disc_group(const Options& o) {
  const Lattice l = lattice_arg(o);
  const auto inv = l.discriminant_group();
  Report r;
  r.data = {{"invariants", to_json(inv)}, {"order", to_json(Int(abs(l.discriminant())))}};
  r.line("invariants", str(inv));
  r.line("order", str(Int(abs(l.discriminant()))));
  return r;
}

Report lattice_complement(const Options& o) {
  if (o.input.empty()) throw InvalidInput("pass --input with \"gram\"/\"name\" and \"basis\"");
  const json j = io::read_json_file(o.input);
  const Sublattice s(io::lattice_from_json(j), io::matrix_from_json(j.at("basis")));
  const Sublattice c = orthogonal_complement(s);
  Report r;
  r.data = {{"rank", c.rank()}, {"basis", to_json(c.basis)}, {"gram", to_json(c.restricted_gram())}};
  r.line("rank", std::to_string(c.rank()));
  r.line("basis", to_json(c.basis).dump());
  r.line("gram", to_json(c.restricted_gram()).dump());
  if (c.rank() > 0) {
    r.data["discriminant"] = to_json(c.discriminant());
    r.line("discriminant", str(c.discriminant()));
  }
  return r;
}

Report lattice_fixed(const Options& o) {
  if (o.input.empty()) throw InvalidInput("pass --input with \"gram\"/\"name\" and \"generators\"");
  const json j = io::read_json_file(o.input);
  const Lattice l = io::lattice_from_json(j);
  const IsometryGroup g = close_group(l, io::matrices_from_json(j.at("generators")));
  const FixedSublatticeReport f = fixed_sublattice(l, g);
  Report r;
  r.verified = f.divides;
  r.lines.push_back("checks: discr(L^G) divides (discr(L) |G|)^rank(L^G)");
  r.data = {{"group_order", f.group_order}, {"rank", f.fixed.rank()}, {"basis", to_json(f.fixed.basis)},
            {"discriminant", to_json(f.discriminant)}, {"bound", to_json(f.bound)}, {"divides", f.divides}};
  r.line("group order", std::to_string(f.group_order));
  r.line("rank(L^G)", std::to_string(f.fixed.rank()));
  r.line("discr(L^G)", str(f.discriminant));
  r.line("bound", str(f.bound));
  r.line("divides", f.divides ? "yes" : "no");
  return r;
}

Report lattice_embed(const Options& o) {
  const PolarizationEmbedding e = embed_polarization(Int(static_cast<unsigned long>(o.d)));
  Report r;
  r.verified = e.isometric && e.primitive;
  r.data = {{"d", o.d}, {"vector", to_json(e.vector)}, {"isometric", e.isometric}, {"primitive", e.primitive}};
  r.line("d", std::to_string(o.d));
  r.line("vector in <-1>^5", str(e.vector));
  r.line("isometric", e.isometric ? "yes" : "no");
  r.line("primitive", e.primitive ? "yes" : "no");
  if (o.full) {
    const bool full = verify_embedding_fully(e);
    r.verified = r.verified && full;
    r.data["full_check"] = full;
    r.line("full 25x21 check", full ? "yes" : "no");
  }
  return r;
}

// ---- order ----

Report order_discr(const Options& o) {
  const Order ord = order_arg(o);
  const TraceRatioReport t = check_trace_ratio(ord);
  Report r;
  r.verified = t.elementwise && t.det_ratio;
  r.data = {{"name", ord.name()}, {"rank", ord.rank()}, {"discriminant", to_json(t.reduced_det)},
            {"intrinsic_discriminant", to_json(t.intrinsic_det)}, {"expected_ratio", to_json(t.expected_ratio)},
            {"trace_ratio_holds", r.verified}};
  r.line("order", ord.name());
  r.line("rank", std::to_string(ord.rank()));
  r.line("discr (reduced trace)", str(t.reduced_det));
  r.line("discr (intrinsic trace)", str(t.intrinsic_det));
  r.line("ratio check", r.verified ? "holds" : "FAILS");
  return r;
}

Report order_mod_l(const Options& o) {
  const Order ord = order_arg(o);
  if (!is_prime(o.ell)) throw InvalidInput("--l must be prime");
  const FpAlgebra a = reduce_mod(ord, o.ell);
  const auto rad = radical(a);
  const Int disc = reduced_trace_discriminant(ord);
  Report r;
  r.data = {{"name", ord.name()}, {"l", o.ell}, {"dimension", a.dim()}, {"radical_dimension", rad.size()},
            {"semisimple", rad.empty()}, {"valuation", valuation(disc, Int(o.ell))}};
  r.line("order", ord.name());
  r.line("l", std::to_string(o.ell));
  r.line("dim", std::to_string(a.dim()));
  r.line("radical dim", std::to_string(rad.size()));
  r.line("semisimple", rad.empty() ? "yes" : "no");
  r.line("v_l(discr)", std::to_string(valuation(disc, Int(o.ell))));
  return r;
}

Report order_verify_b1(const Options& o) {
  const Order ord = order_arg(o);
  Report r;
  r.lines.push_back("checks: v_l(discr O) = 0 iff O/l is semisimple");
  json rows = json::array();
  for (const PropB1Row& row : verify_prop_b1_upto(ord, o.lmax)) {
    rows.push_back({{"l", row.prime}, {"valuation", row.valuation}, {"semisimple", row.semisimple},
                    {"holds", row.holds}});
    r.lines.push_back("l=" + std::to_string(row.prime) + " v=" + std::to_string(row.valuation) +
                      " semisimple=" + (row.semisimple ? "yes" : "no") + (row.holds ? "" : "  FAIL"));
    r.verified = r.verified && row.holds;
  }
  r.data = {{"name", ord.name()}, {"lmax", o.lmax}, {"rows", rows}, {"passed", r.verified}};
  return r;
}

// ---- avforms ----

Report avforms_delta(const Options& o) {
  if (o.end_data.empty()) throw InvalidInput("pass --end-data <file.json>");
  const EndData data = io::end_data_from_json(io::read_json_file(o.end_data));
  const Int big = intrinsic_discriminant(data), small = degree_discriminant(data);
  Report r;
  r.data = {{"discr", to_json(data.base_discr)}, {"Delta", to_json(big)}, {"delta", to_json(small)}};
  r.line("discr", str(data.base_discr));
  r.line("Delta (intrinsic)", str(big));
  r.line("delta (degree)", str(small));
  if (data.order) {
    const Int gram_big = det(intrinsic_trace_form(*data.order));
    r.data["Delta_gram"] = to_json(gram_big);
    r.line("Delta from Gram", str(gram_big));
    r.verified = gram_big == big;
    if (data.order->representation()) {
      const Int gram_small = det(degree_form_from_representation(*data.order));
      r.data["delta_gram"] = to_json(gram_small);
      r.line("delta from Gram", str(gram_small));
      r.verified = r.verified && gram_small == small;
    }
    r.data["agrees"] = r.verified;
  }
  return r;
}

Report avforms_q(const Options& o) {
  const Int q = q_of_g(o.g);
  Report r;
  r.data = {{"g", o.g}, {"Q", to_json(q)}};
  r.line("Q(" + std::to_string(o.g) + ")", str(q));
  return r;
}

Report avforms_dpg(const Options& o) {
  const Int d = d_p_of_g(o.p, o.g);
  Report r;
  r.data = {{"p", o.p}, {"g", o.g}, {"d_p", to_json(d)}};
  r.line("d_" + std::to_string(o.p) + "(" + std::to_string(o.g) + ")", str(d));
  return r;
}

// ---- clifford ----

Report clifford_trace(const CliffordAlgebra& c) {
  const TraceRestrictionReport t = trace_restriction_check(c);
  Report r;
  r.verified = t.holds;
  r.lines.push_back("checks: Tr(L_v L_w) = 2^rank (v.w)");
  r.data = {{"dimension", c.dim()}, {"scalar", to_json(t.scalar)}, {"traces", to_json(t.traces)},
            {"holds", t.holds}};
  r.line("dimension", std::to_string(c.dim()));
  r.line("scalar", str(t.scalar));
  r.line("traces", to_json(t.traces).dump());
  r.line("holds", t.holds ? "yes" : "no");
  return r;
}

Report clifford_symplectic(const CliffordAlgebra& c, const Options& o) {
  if (o.f1.empty() || o.f2.empty()) throw InvalidInput("pass --f1 and --f2 as comma-separated coordinates");
  const SymplecticReport s = symplectic_form(c, parse_vector(o.f1, "--f1"), parse_vector(o.f2, "--f2"));
  Report r;
  r.verified = s.skew && sgn(s.det) != 0;
  r.lines.push_back("checks: Tr(f1 f2 v* w) is skew-symmetric and nondegenerate");
  r.data = {{"gram", to_json(s.gram)}, {"skew", s.skew}, {"det", to_json(s.det)}};
  r.line("gram", to_json(s.gram).dump());
  r.line("skew", s.skew ? "yes" : "no");
  r.line("det", str(s.det));
  return r;
}

Report clifford_index(const Lattice& l) {
  const ComplementReport c = complement_index(l);
  Report r;
  r.verified = c.matches;
  r.lines.push_back("checks: |End(C(L)) / (L + L^perp)| = |discr of Tr(xy) on L|");
  r.data = {{"invariants", to_json(c.invariants)}, {"order", to_json(c.order)},
            {"complement_rank", c.complement_rank},
            {"restricted_discriminant", to_json(c.restricted_discriminant)}, {"matches", c.matches}};
  r.line("invariants", str(c.invariants));
  r.line("order", str(c.order));
  r.line("rank(L^perp)", std::to_string(c.complement_rank));
  r.line("restricted discr", str(c.restricted_discriminant));
  return r;
}

Report clifford_build(const Options& o) {
  const Lattice l = lattice_arg(o);
  if (o.check == "index") return clifford_index(l);
  const CliffordAlgebra c(l);
  if (o.check == "trace") return clifford_trace(c);
  if (o.check == "symplectic") return clifford_symplectic(c, o);
  throw InvalidInput("--check must be trace, symplectic or index");
}

// ---- padic ----

Report padic_13aug(const Options& o) {
  if (o.input.empty()) throw InvalidInput("pass --input <action.json>");
  const ActionData a = io::action_from_json(io::read_json_file(o.input));
  const Lemma13Report rep = check_lemma_13aug(a, static_cast<unsigned>(o.nmax));
  Report r;
  r.verified = rep.holds;
  r.lines.push_back("checks: End_Lambda(N)/l^n <= End_Lambda(N/l^n) with index exponent r <= a + b");
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"n", row.level}, {"contained", row.contained}, {"r", row.r},
                    {"perp_exponent", row.perp_exponent}, {"divisible", row.divisible}});
    r.lines.push_back("n=" + std::to_string(row.level) + " contained=" + (row.contained ? "yes" : "no") +
                      " r=" + std::to_string(row.r) + " perp exponent=" + std::to_string(row.perp_exponent));
  }
  r.data = {{"discriminant", to_json(rep.discriminant)}, {"a", rep.a}, {"b", rep.b}, {"r_max", rep.r_max},
            {"stabilized", rep.stabilized}, {"holds", rep.holds}, {"rows", rows}};
  r.line("a", std::to_string(rep.a));
  r.line("b", std::to_string(rep.b) + (rep.stabilized ? "" : " (not stable within n_max)"));
  r.line("max r", std::to_string(rep.r_max));
  r.line("holds", rep.holds ? "yes" : "no");
  return r;
}

Report padic_centralizer(const Options& o) {
  if (o.input.empty()) throw InvalidInput("pass --input <action.json>");
  const ActionData a = io::action_from_json(io::read_json_file(o.input));
  const ResidueSubmodule c = centralizer_mod(a, static_cast<unsigned>(o.n));
  const ModuleGenerators gens = c.smith_generators();
  json mats = json::array();
  for (const auto& v : gens.generators) mats.push_back(to_json(unflatten(v, a.dim())));
  Report r;
  r.data = {{"n", o.n}, {"invariants", to_json(c.invariants())}, {"generators", mats},
            {"orders", to_json(gens.orders)}};
  r.line("invariants", str(c.invariants()));
  r.line("generators", mats.dump());
  return r;
}

// ---- torsion ----

Report torsion_decompose(const Options& o) {
  const TorsionPairingModule t = torsion_arg(o);
  const HomDecomposition h = hom_decompose(t);
  Report r;
  r.verified = h.contained;
  r.data = {{"symmetric", to_json(h.symmetric.invariants())}, {"alternating", to_json(h.alternating.invariants())},
            {"index", to_json(h.index)}, {"contained", h.contained}};
  r.line("skew-symmetric forms", str(h.symmetric.invariants()));
  r.line("alternating forms", str(h.alternating.invariants()));
  r.line("index", str(h.index));
  return r;
}

std::vector<IntMatrix> default_or_file(const std::string& path, IntMatrix fallback) {
  if (path.empty()) return {std::move(fallback)};
  return matrices_file(path);
}

Report torsion_brauer(const Options& o) {
  const TorsionPairingModule t = torsion_arg(o);
  const auto inv = brauer_quotient_invariants(t, default_or_file(o.ns_file, TorsionPairingModule::standard_pairing(o.g)));
  Report r;
  r.data = {{"invariants", to_json(inv)}, {"count", inv.size()}};
  r.line("invariants", str(inv));
  r.line("count", std::to_string(inv.size()));
  return r;
}

Report torsion_ker2(const Options& o) {
  const TorsionPairingModule t = torsion_arg(o);
  const Ker2Result k = ker2_exponent_check(t, default_or_file(o.r_file, TorsionPairingModule::standard_pairing(o.g)));
  Report r;
  r.verified = k.holds;
  r.lines.push_back("checks: kernel of Br-analog -> H_A/l^n has exponent dividing 2");
  r.data = {{"kernel", to_json(k.kernel_invariants)}, {"symmetric_rank", k.symmetric_rank}, {"holds", k.holds}};
  r.line("kernel", str(k.kernel_invariants));
  r.line("holds", k.holds ? "yes" : "no");
  return r;
}

Report torsion_third(const Options& o) {
  const TorsionPairingModule t = torsion_arg(o);
  const auto inv = third_summand_invariants(t, default_or_file(o.endos_file, IntMatrix::identity(t.rank())));
  Report r;
  r.data = {{"invariants", to_json(inv)}, {"count", inv.size()}};
  r.line("invariants", str(inv));
  return r;
}

// ---- verify ----

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma2.1",   "prop-b1",    "lemma2.2", "clifford-trace",
                                              "symplectic", "embed-2d",   "lemma16may", "lemma13aug",
                                              "torsion",    "ker2",       "constants"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& o) {
  auto trials = [&](std::size_t dflt) { return o.trials ? o.trials : dflt; };
  if (name == "lemma2.1") return run_lemma21_suite(o.seed, trials(200));
  if (name == "prop-b1") return run_prop_b1_suite(o.lmax);
  if (name == "lemma2.2") return run_av_forms_suite();
  if (name == "clifford-trace") return run_clifford_trace_suite(o.seed, trials(50));
  if (name == "symplectic") return run_symplectic_suite();
  if (name == "embed-2d") return run_embedding_suite(o.dmax);
  if (name == "lemma16may") return run_lemma16_suite(o.seed, trials(50));
  if (name == "lemma13aug") return run_lemma13_suite();
  if (name == "torsion") return run_torsion_suite();
  if (name == "ker2") return run_ker2_suite();
  if (name == "constants") return run_constants_suite();
  throw InvalidInput("unknown suite '" + name + "'");
}

Report verify(const Options& o) {
  Report r;
  if (o.suite != "all") {
    suite_report(r, run_suite(o.suite, o));
    return r;
  }
  json suites = json::array();
  for (const auto& name : suite_names()) {
    Report part;
    suite_report(part, run_suite(name, o));
    r.verified = r.verified && part.verified;
    suites.push_back(std::move(part.data));
    r.lines.insert(r.lines.end(), part.lines.begin(), part.lines.end());
  }
  r.data = {{"suites", suites}, {"passed", r.verified}};
  return r;
}

Report padic_16may(const Options& o) {
  Report r;
  suite_report(r, run_lemma16_suite(o.seed, o.trials ? o.trials : 50));
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"latkit: exact lattice, order and torsion-module computations"};
  app.require_subcommand(1);
  Options o;
  std::function<Report(const Options&)> handler;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Report(const Options&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Random seed");
    sub->callback([&, fn, name, parent] {
      handler = fn;
      command = parent->get_name() + " " + name;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };
  auto add_name = [&](CLI::App* s) { s->add_option("--name", o.name, "Named lattice or order"); };
  auto add_input = [&](CLI::App* s) { s->add_option("--input", o.input, "Input JSON file"); };
  auto add_torsion = [&](CLI::App* s) {
    s->add_option("--g", o.g, "Half the rank")->required();
    s->add_option("--l", o.ell, "Prime l")->required();
    s->add_option("--n", o.level, "Level n");
    s->add_option("--gamma", o.gamma_file, "JSON file of similitudes");
  };

  CLI::App* lattice = group("lattice", "Integral lattices");
  for (auto [nm, help, fn] : std::vector<std::tuple<std::string, std::string, Report (*)(const Options&)>>{
           {"discr", "Discriminant", lattice_discr}, {"disc-group", "Discriminant group", lattice_disc_group}}) {
    CLI::App* s = leaf(lattice, nm, help, fn);
    add_name(s);
    add_input(s);
  }
  add_input(leaf(lattice, "complement", "Orthogonal complement of a sublattice", lattice_complement));
  add_input(leaf(lattice, "fixed", "Fixed sublattice of a finite isometry group", lattice_fixed));
  {
    CLI::App* s = leaf(lattice, "embed-2d", "Four-squares embedding of lambda_2d", lattice_embed);
    s->add_option("--d", o.d, "Polarization degree d")->required()->check(CLI::PositiveNumber);
    s->add_flag("--full", o.full, "Also run the full 25x21 check");
  }

  CLI::App* order = group("order", "Orders and trace forms");
  for (auto [nm, help, fn] : std::vector<std::tuple<std::string, std::string, Report (*)(const Options&)>>{
           {"discr", "Reduced and intrinsic discriminants", order_discr},
           {"mod-l", "Reduction mod l and its radical", order_mod_l},
           {"verify-b1", "Discriminant valuation vs semisimplicity", order_verify_b1}}) {
    CLI::App* s = leaf(order, nm, help, fn);
    add_name(s);
    add_input(s);
    if (nm == "mod-l") s->add_option("--l", o.ell, "Prime l")->required();
    if (nm == "verify-b1") s->add_option("--lmax", o.lmax, "Largest prime");
  }

  CLI::App* av = group("avforms", "Forms on endomorphism data and constants");
  leaf(av, "delta", "Intrinsic and degree discriminants", avforms_delta)
      ->add_option("--end-data", o.end_data, "EndData JSON file")
      ->required();
  leaf(av, "q", "Q(g)", avforms_q)->add_option("--g", o.g, "g")->required()->check(CLI::PositiveNumber);
  {
    CLI::App* s = leaf(av, "dpg", "d_p(g)", avforms_dpg);
    s->add_option("--p", o.p, "0 or a prime")->required();
    s->add_option("--g", o.g, "g")->required()->check(CLI::PositiveNumber);
  }

  CLI::App* cl = group("clifford", "Clifford algebras of lattices");
  auto clifford_leaf = [&](const std::string& nm, const std::string& help, const std::string& check) {
    CLI::App* s = leaf(cl, nm, help, [&o, check](const Options& opts) {
      Options copy = opts;
      if (!check.empty()) copy.check = check;
      return clifford_build(copy);
    });
    s->add_option("--lattice", o.lattice_file, "Lattice JSON file");
    add_name(s);
    s->add_option("--f1", o.f1, "f1 as comma-separated coordinates");
    s->add_option("--f2", o.f2, "f2 as comma-separated coordinates");
    return s;
  };
  clifford_leaf("build", "Build C(L) and run a check", "")
      ->add_option("--check", o.check, "trace, symplectic or index")
      ->check(CLI::IsMember({"trace", "symplectic", "index"}));
  clifford_leaf("trace-check", "Trace restriction identity", "trace");
  clifford_leaf("symplectic", "Skew form Tr(f1 f2 v* w)", "symplectic");
  clifford_leaf("index", "Index of L + L^perp in End(C(L))", "index");

  CLI::App* pa = group("padic", "l-adic module checks");
  leaf(pa, "verify-16may", "Randomized invariants-image containment", padic_16may)
      ->add_option("--trials", o.trials, "Number of trials");
  {
    CLI::App* s = leaf(pa, "verify-13aug", "Centralizer stabilization", padic_13aug);
    add_input(s);
    s->add_option("--nmax", o.nmax, "Largest level")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = leaf(pa, "centralizer", "Centralizer mod l^n", padic_centralizer);
    add_input(s);
    s->add_option("--n", o.n, "Level")->check(CLI::PositiveNumber);
  }

  CLI::App* to = group("torsion", "Torsion modules with pairings");
  add_torsion(leaf(to, "decompose", "Skew-symmetric vs alternating forms", torsion_decompose));
  {
    CLI::App* s = leaf(to, "brauer", "Brauer-analog quotient invariants", torsion_brauer);
    add_torsion(s);
    s->add_option("--ns", o.ns_file, "JSON file of NS generators (default: J)");
  }
  {
    CLI::App* s = leaf(to, "ker2", "Exponent of the Br-analog kernel", torsion_ker2);
    add_torsion(s);
    s->add_option("--r", o.r_file, "JSON file of R generators (default: J)");
  }
  {
    CLI::App* s = leaf(to, "third-summand", "(End(T)/endos)^Gamma", torsion_third);
    add_torsion(s);
    s->add_option("--endos", o.endos_file, "JSON file of endomorphisms (default: scalars)");
  }

  {
    CLI::App* s = app.add_subcommand("verify", "Verification suites");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    s->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(choices));
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--seed", o.seed, "Random seed");
    s->add_option("--trials", o.trials, "Trials for randomized suites");
    s->add_option("--lmax", o.lmax, "Largest prime for prop-b1");
    s->add_option("--dmax", o.dmax, "Largest d for embed-2d")->check(CLI::PositiveNumber);
    s->callback([&] {
      handler = verify;
      command = "verify " + o.suite;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report rep;
  try {
    rep = handler(o);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.format == "json") {
    json doc = rep.data;
    doc["command"] = command;
    doc["seed"] = o.seed;
    doc["verified"] = rep.verified;
    out << doc.dump(2) << '\n';
  } else {
    out << "latkit " << command << " (seed " << o.seed << ")\n";
    for (const auto& l : rep.lines) out << l << '\n';
    if (!rep.verified) out << "VERIFICATION FAILED\n";
  }
  return rep.verified ? kExitOk : kExitVerificationFailed;
}

}  // namespace latkit::cli
