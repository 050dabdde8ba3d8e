#include "ualg/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/decompose.hpp"
#include "ualg/error.hpp"
#include "ualg/format.hpp"
#include "ualg/gumm.hpp"
#include "ualg/oracle.hpp"
#include "ualg/suite.hpp"

namespace ualg {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxSize = 1024;
constexpr std::size_t kEnumerationLimit = 9;

struct Options {
  std::string alg;
  std::optional<std::size_t> max_size;
  std::optional<std::uint64_t> seed;
  std::string dot;
  std::string alpha, beta, theta;
  std::string term;
  std::vector<std::string> checks, corpus;
};

struct Report {
  std::ostringstream text;
  json machine = json::object();
  int status = exit_ok;
};

class SizeLimitScope {
 public:
  explicit SizeLimitScope(std::size_t limit) : saved_(max_universe_size()) { set_max_universe_size(limit); }
  ~SizeLimitScope() { set_max_universe_size(saved_); }
  SizeLimitScope(const SizeLimitScope&) = delete;
  SizeLimitScope& operator=(const SizeLimitScope&) = delete;

 private:
  std::size_t saved_;
};

std::size_t resolve_max_size(const Options& o) {
  if (o.max_size) return *o.max_size;
  if (const char* env = std::getenv("UALG_MAX_SIZE"); env && *env) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != std::string(env).size() || v == 0)
      throw InvalidInput(std::string("UALG_MAX_SIZE is not a positive integer: '") + env + "'");
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxSize;
}

struct Loaded {
  FiniteAlgebra algebra;
  std::optional<CorpusEntry> entry;
};

Loaded load(const std::string& source) {
  if (source.empty()) throw InvalidInput("--alg is required");
  if (std::filesystem::exists(source)) {
    FiniteAlgebra a = read_algebra_file(source);
    auto entry = find_builtin(a.name());
    if (entry && entry->algebra.signature_compatible(a) && entry->algebra.size() == a.size() &&
        std::equal(entry->algebra.operations().begin(), entry->algebra.operations().end(),
                   a.operations().begin(), [](const OperationTable& x, const OperationTable& y) {
                     return x.table == y.table;
                   }))
      return {a, entry};
    return {a, std::nullopt};
  }
  if (auto entry = find_builtin(source)) {
    check_universe_size(entry->algebra.size());
    return {entry->algebra, entry};
  }
  throw InvalidInput("'" + source + "' is neither a file nor a builtin algebra");
}

/// "0"/"zero", "1"/"one", "Cg(x,y)" or explicit blocks such as "0,2|1,3".
Partition congruence_argument(const FiniteAlgebra& a, const std::string& name, const std::string& value) {
  if (value.empty()) throw InvalidInput("--" + name + " is required");
  const std::size_t n = a.size();
  Partition p;
  if (value == "0" || value == "zero") {
    p = Partition::zero(n);
  } else if (value == "1" || value == "one") {
    p = Partition::one(n);
  } else if (value.rfind("Cg(", 0) == 0 && value.back() == ')') {
    const Partition pair = Partition::parse(n, value.substr(3, value.size() - 4));
    const auto blocks = pair.blocks();
    std::vector<std::pair<Element, Element>> gens;
    for (const auto& b : blocks)
      for (std::size_t i = 1; i < b.size(); ++i) gens.emplace_back(b[0], b[i]);
    p = generated_congruence(a, gens);
  } else {
    p = Partition::parse(n, value);
  }
  if (auto v = congruence_violation(a, p))
    throw InvalidInput("--" + name + " " + p.to_string() + " is not a congruence: operation '" + v->operation +
                       "' separates " + std::to_string(v->x) + " and " + std::to_string(v->y));
  return p;
}

json partitions_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string join_names(const std::vector<FiniteAlgebra>& fs) {
  std::string s;
  for (const auto& f : fs) s += (s.empty() ? "" : " x ") + f.name();
  return s.empty() ? "(empty product)" : s;
}

void header(Report& r, const std::string& verb, const FiniteAlgebra& a) {
  r.machine["verb"] = verb;
  r.machine["algebra"] = a.name();
  r.machine["size"] = a.size();
}

void cmd_con(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "con", a);
  const CongruenceLattice lat = congruence_lattice(a);
  const auto pentagon = find_pentagon(lat);
  r.text << "Con(" << a.name() << "): " << lat.size() << " congruences, height " << lat.height() << ", "
         << (pentagon ? "not modular" : "modular") << "\n";
  for (std::size_t i = 0; i < lat.size(); ++i) r.text << "  [" << i << "] " << lat[i].to_string() << "\n";
  if (pentagon)
    r.text << "pentagon: " << lat[pentagon->bottom].to_string() << " < " << lat[pentagon->a].to_string() << " < "
           << lat[pentagon->b].to_string() << " < " << lat[pentagon->top].to_string() << ", side "
           << lat[pentagon->c].to_string() << "\n";
  r.machine["congruences"] = partitions_json({lat.elements().begin(), lat.elements().end()});
  r.machine["modular"] = !pentagon;
  r.machine["height"] = lat.height();
  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    if (!f) throw InvalidInput("cannot write '" + o.dot + "'");
    f << export_dot(lat);
    r.text << "Hasse diagram written to " << o.dot << "\n";
    r.machine["dot"] = o.dot;
  }
}

void cmd_comm(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "comm", a);
  const Partition alpha = congruence_argument(a, "alpha", o.alpha);
  const Partition beta = congruence_argument(a, "beta", o.beta);
  const CommutatorTable table(a);
  const Partition c = table.commutator(alpha, beta);
  r.text << "[" << alpha.to_string() << ", " << beta.to_string() << "] = " << c.to_string() << "\n";
  r.machine["alpha"] = alpha.to_string();
  r.machine["beta"] = beta.to_string();
  r.machine["commutator"] = c.to_string();
}

void cmd_center(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "center", a);
  const CommutatorTable table(a);
  const auto& lat = table.lattice();
  const Partition zeta = lat[table.center()];
  const Partition derived = table.commutator_partition(lat.top(), lat.top());
  r.text << "center: " << zeta.to_string() << "\n[1,1]: " << derived.to_string() << "\n"
         << (derived.is_zero() ? "abelian" : "not abelian") << ", " << (zeta.is_zero() ? "centerless" : "has a center")
         << "\n";
  r.machine["center"] = zeta.to_string();
  r.machine["derived"] = derived.to_string();
  r.machine["abelian"] = derived.is_zero();
  r.machine["centerless"] = zeta.is_zero();
}

void cmd_dense(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "dense", a);
  const Partition theta = congruence_argument(a, "theta", o.theta);
  const CongruenceLattice lat = congruence_lattice(a);
  const auto w = density_witness(lat, theta);
  r.machine["theta"] = theta.to_string();
  r.machine["dense"] = !w;
  if (w) {
    r.text << theta.to_string() << " is not dense: it meets " << lat[*w].to_string() << " in 0\n";
    r.machine["witness"] = lat[*w].to_string();
  } else {
    r.text << theta.to_string() << " is dense\n";
  }
}

std::optional<std::pair<std::size_t, std::size_t>> zero_meet_pair(const CongruenceLattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if (i != lat.bottom() && j != lat.bottom() && lat.meet(i, j) == lat.bottom()) return std::make_pair(i, j);
  return std::nullopt;
}

void cmd_fsi(const Options& o, Report& r, bool si) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, si ? "si" : "fsi", a);
  const CongruenceLattice lat = congruence_lattice(a);
  const bool value = si ? is_si(lat) : is_fsi(lat);
  const std::string label = si ? "subdirectly irreducible" : "finitely subdirectly irreducible";
  r.text << a.name() << " is " << (value ? "" : "not ") << label << "\n";
  r.machine[si ? "si" : "fsi"] = value;
  if (value && si) {
    const auto atoms = lat.atoms();
    r.text << "monolith: " << lat[atoms.front()].to_string() << "\n";
    r.machine["monolith"] = lat[atoms.front()].to_string();
  }
  if (!value && a.size() > 1) {
    if (auto p = zero_meet_pair(lat)) {
      r.text << "0 = " << lat[p->first].to_string() << " ^ " << lat[p->second].to_string() << "\n";
      r.machine["witness"] = {lat[p->first].to_string(), lat[p->second].to_string()};
    }
  }
}

void put_chain(const std::vector<MaximizationStep>& chain, Report& r) {
  json steps = json::array();
  for (const auto& s : chain) {
    r.text << "  step " << s.index << ": " << s.from.to_string() << " -> " << s.to.to_string() << "\n";
    steps.push_back({{"index", s.index}, {"from", s.from.to_string()}, {"to", s.to.to_string()}});
  }
  r.machine["chain"] = steps;
}

// A validated difference term is the evidence that A lies in a congruence
// modular variety.
Term difference_term_for(const Loaded& l, const Options& o) {
  std::string term_name = o.term;
  if (term_name.empty()) {
    if (!l.entry || !l.entry->difference_term)
      throw Refusal("no difference term is known for " + l.algebra.name() + "; pass --term");
    term_name = *l.entry->difference_term;
  }
  const Term d = difference_term_by_name(term_name);
  const CommutatorTable table(l.algebra);
  if (const auto v = difference_term_violation(table, d))
    throw Refusal("term " + d.to_string() + " is not a difference term on " + l.algebra.name() + ": " + v->law +
                  " fails at x=" + std::to_string(v->x) + ", y=" + std::to_string(v->y));
  return d;
}

void cmd_decompose(const Options& o, Report& r) {
  const Loaded l = load(o.alg);
  const FiniteAlgebra& a = l.algebra;
  header(r, "decompose", a);
  difference_term_for(l, o);
  const DecompositionReport d = decompose_absolute_retract(a);
  r.text << "outcome: " << to_string(d.outcome) << "\n";
  if (!d.detail.empty()) r.text << d.detail << "\n";
  r.text << "kernels: ";
  for (const auto& k : d.kernels) r.text << "(" << k.to_string() << ") ";
  r.text << "\nfactors: " << join_names(d.factors) << "\n";
  for (const auto& f : d.factors)
    r.text << "  " << f.name() << ": " << f.size() << " elements, " << (is_si(f) ? "SI" : "not SI") << "\n";
  if (d.outcome == Outcome::proper_essential_extension)
    r.text << a.name() << " has a proper essential extension, so it is not an absolute retract\n";
  put_chain(d.chain, r);
  r.machine["outcome"] = to_string(d.outcome);
  r.machine["kernels"] = partitions_json(d.kernels);
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back({{"name", f.name()}, {"size", f.size()}});
  r.machine["factors"] = factors;
  r.machine["product_essential"] = d.product_essential;
  r.machine["essential"] = d.essential;
}

void cmd_split(const Options& o, Report& r) {
  const Loaded l = load(o.alg);
  const FiniteAlgebra& a = l.algebra;
  header(r, "split", a);
  difference_term_for(l, o);
  const DecompositionReport d = split_center_abelian(a);
  r.text << "center: " << (d.center ? d.center->to_string() : "?") << "\n[1,1]: "
         << (d.derived ? d.derived->to_string() : "?") << "\n";
  if (d.c1_holds) r.text << "(C1) " << (*d.c1_holds ? "holds" : "fails") << " on this algebra\n";
  r.text << "outcome: " << to_string(d.outcome) << "\n";
  if (!d.detail.empty()) r.text << d.detail << "\n";
  if (d.hypothesis_witness) r.text << "center ^ [1,1] = " << d.hypothesis_witness->to_string() << "\n";
  if (d.outcome != Outcome::hypothesis_failure) {
    r.text << "factors: " << join_names(d.factors) << "\n";
    if (d.first_centerless) r.text << "first factor " << (*d.first_centerless ? "centerless" : "has a center") << "\n";
    if (d.second_abelian) r.text << "second factor " << (*d.second_abelian ? "abelian" : "not abelian") << "\n";
    put_chain(d.chain, r);
  }
  r.machine["outcome"] = to_string(d.outcome);
  if (d.center) r.machine["center"] = d.center->to_string();
  if (d.derived) r.machine["derived"] = d.derived->to_string();
  if (d.c1_holds) r.machine["c1"] = *d.c1_holds;
  if (d.hypothesis_witness) r.machine["witness"] = d.hypothesis_witness->to_string();
  r.machine["kernels"] = partitions_json(d.kernels);
  if (d.first_centerless) r.machine["first_centerless"] = *d.first_centerless;
  if (d.second_abelian) r.machine["second_abelian"] = *d.second_abelian;
}

void cmd_ufp(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "ufp", a);
  const FactorizationReport f = enumerate_direct_decompositions(a);
  r.text << f.factor_pairs.size() << " factor congruence pairs\n";
  json pairs = json::array();
  for (const auto& p : f.factor_pairs) {
    r.text << "  (" << p.theta.to_string() << ") , (" << p.phi.to_string() << ")\n";
    pairs.push_back({p.theta.to_string(), p.phi.to_string()});
  }
  json classes = json::array();
  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    r.text << "class " << i << ": " << f.classes[i].name() << " (" << f.classes[i].size() << " elements)\n";
    classes.push_back(f.classes[i].name());
  }
  json facts = json::array();
  for (const auto& m : f.factorizations) {
    r.text << "factorization:";
    for (std::size_t c : m) r.text << " " << c;
    r.text << "\n";
    facts.push_back(m);
  }
  r.text << (f.unique() ? "factorization is unique" : "factorizations differ") << "\n";
  r.machine["factor_pairs"] = pairs;
  r.machine["classes"] = classes;
  r.machine["factorizations"] = facts;
  r.machine["unique"] = f.unique();
  if (!f.unique()) r.status = exit_falsified;
}

void cmd_cube(const Options& o, Report& r) {
  const Loaded l = load(o.alg);
  const FiniteAlgebra& a = l.algebra;
  header(r, "cube", a);
  const Term d = difference_term_for(l, o);
  const CubeExtension c = build_cube_extension(a, d);
  r.text << "difference term: " << d.to_string() << "\ncenter: " << c.center.to_string() << "\n"
         << "hypotheses: " << (c.hypotheses.non_abelian ? "non-abelian" : "abelian") << ", center "
         << (c.hypotheses.center_dense ? "dense" : "not dense");
  if (c.hypotheses.density_witness) r.text << " (meets " << c.hypotheses.density_witness->to_string() << " in 0)";
  r.text << "\nchained triples: " << c.chained.algebra.size() << " of " << c.cube.algebra.size() << "\n"
         << "B/theta: " << c.chained_quotient.algebra.size() << " elements, A^3/Theta: "
         << c.cube_quotient.algebra.size() << " elements\n"
         << "embedding is " << (c.proper ? "proper" : "onto") << " and " << (c.essential ? "essential" : "not essential")
         << "\nbase points give " << c.base_point_variants << " distinct Theta\n";
  if (c.proper && c.essential)
    r.text << a.name() << " has a proper essential extension\n";
  r.machine["term"] = d.to_string();
  r.machine["center"] = c.center.to_string();
  r.machine["hypotheses"] = {{"non_abelian", c.hypotheses.non_abelian}, {"center_dense", c.hypotheses.center_dense}};
  r.machine["chained_size"] = c.chained.algebra.size();
  r.machine["chained_quotient_size"] = c.chained_quotient.algebra.size();
  r.machine["cube_quotient_size"] = c.cube_quotient.algebra.size();
  r.machine["proper"] = c.proper;
  r.machine["essential"] = c.essential;
  r.machine["base_point_variants"] = c.base_point_variants;
  if (c.essentiality_witness)
    r.machine["essentiality_witness"] = {c.essentiality_witness->first, c.essentiality_witness->second};
}

void cmd_verify(const Options& o, Report& r) {
  SuiteOptions so;
  so.checks = o.checks;
  so.corpus = o.corpus;
  so.seed = o.seed;
  const SuiteReport report = run_suite(so);
  r.text << format_report(report);
  r.machine["verb"] = "verify";
  json checks = json::array();
  for (const auto& c : report.checks) {
    json records = json::array();
    for (const auto& rec : c.records)
      records.push_back({{"subject", rec.subject},
                         {"verdict", to_string(rec.verdict)},
                         {"instances", rec.instances},
                         {"detail", rec.detail}});
    json check = {{"name", c.name}, {"verdict", to_string(c.verdict)}, {"instances", c.instances}, {"records", records}};
    if (c.verdict == Verdict::fail) check["witness"] = c.witness;
    checks.push_back(check);
  }
  r.machine["checks"] = checks;
  r.machine["passed"] = report.count(Verdict::pass);
  r.machine["failed"] = report.count(Verdict::fail);
  r.machine["skipped"] = report.count(Verdict::skipped);
  if (!report.passed()) r.status = exit_falsified;
}

void cmd_oracle(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "oracle", a);
  json results = json::array();
  auto put = [&](const std::string& name, Verdict v, const std::string& detail) {
    r.text << "[" << to_string(v) << "] " << name << ": " << detail << "\n";
    results.push_back({{"name", name}, {"verdict", to_string(v)}, {"detail", detail}});
    if (v == Verdict::fail) r.status = exit_falsified;
  };

  const CongruenceLattice lat = congruence_lattice(a, Execution::parallel);
  const CongruenceLattice serial = congruence_lattice(a, Execution::serial);
  const std::vector<Partition> elems(lat.elements().begin(), lat.elements().end());
  put("serial", std::vector<Partition>(serial.elements().begin(), serial.elements().end()) == elems ? Verdict::pass
                                                                                                      : Verdict::fail,
      "parallel and serial lattices agree");
  if (a.size() <= kEnumerationLimit) {
    const auto brute = oracle::congruences_by_enumeration(a);
    put("enumeration", brute == elems ? Verdict::pass : Verdict::fail,
        std::to_string(brute.size()) + " compatible partitions, " + std::to_string(elems.size()) + " generated");
  } else {
    put("enumeration", Verdict::skipped, "more than " + std::to_string(kEnumerationLimit) + " elements");
  }

  std::size_t dense_mismatch = 0;
  for (const auto& p : elems)
    if (is_dense(lat, p) != !density_witness_pair(a, p).has_value()) ++dense_mismatch;
  put("density", dense_mismatch ? Verdict::fail : Verdict::pass,
      std::to_string(elems.size()) + " congruences, " + std::to_string(dense_mismatch) + " disagreements");

  if (find_pentagon(lat)) {
    put("commutator", Verdict::skipped, "Con is not modular");
    r.machine["oracles"] = results;
    return;
  }
  const CommutatorTable table(lat);
  put("center", table.center() == table.center_by_scan() ? Verdict::pass : Verdict::fail,
      "principal criterion and lattice scan give " + lat[table.center()].to_string());

  if (auto g = oracle::group_view(a)) {
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j)
        if (oracle::group_commutator(*g, lat[i], lat[j]) != table.commutator_partition(i, j)) ++mismatches;
    put("group-commutator", mismatches ? Verdict::fail : Verdict::pass,
        std::to_string(lat.size() * lat.size()) + " pairs, " + std::to_string(mismatches) + " disagreements");
    const Partition z = oracle::group_center(*g);
    put("group-center", z == lat[table.center()] ? Verdict::pass : Verdict::fail, "Z(G) cosets " + z.to_string());
  } else {
    put("group-commutator", Verdict::skipped, "not a group");
  }
  r.machine["oracles"] = results;
}

void cmd_show(const Options& o, Report& r) {
  const FiniteAlgebra a = load(o.alg).algebra;
  header(r, "show", a);
  const std::string text = print_algebra(a);
  r.text << text;
  r.machine["text"] = text;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite algebra congruence and commutator calculator", "ualg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--alg", o.alg, "Algebra file or builtin corpus name");
  app.add_option("--max-size", o.max_size, "Largest universe any construction may build")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Order in which verify visits the corpus");

  auto* con = app.add_subcommand("con", "List Con(A)");
  con->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format");
  auto* comm = app.add_subcommand("comm", "Commutator of two congruences");
  comm->add_option("--alpha", o.alpha, "First congruence")->required();
  comm->add_option("--beta", o.beta, "Second congruence")->required();
  app.add_subcommand("center", "Center and derived congruence");
  auto* dense = app.add_subcommand("dense", "Density of a congruence");
  dense->add_option("--theta", o.theta, "Congruence")->required();
  app.add_subcommand("fsi", "Finite subdirect irreducibility");
  app.add_subcommand("si", "Subdirect irreducibility");
  auto* decompose = app.add_subcommand("decompose", "Product of SI factors or a proper essential extension");
  decompose->add_option("--term", o.term, "Difference term: group_d, module_d, proj_d or a term");
  auto* split = app.add_subcommand("split", "Centerless times abelian split");
  split->add_option("--term", o.term, "Difference term: group_d, module_d, proj_d or a term");
  app.add_subcommand("ufp", "Direct factorizations");
  auto* cube = app.add_subcommand("cube", "Essential extension inside A^3");
  cube->add_option("--term", o.term, "Difference term: group_d, module_d, proj_d or a term");
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--check", o.checks, "Check names");
  verify->add_option("--corpus", o.corpus, "Builtin corpus names");
  app.add_subcommand("oracle", "Brute-force cross-checks");
  app.add_subcommand("show", "Print the algebra in file format");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Report r;
  try {
    const SizeLimitScope limit(resolve_max_size(o));
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "con") cmd_con(o, r);
    else if (verb == "comm") cmd_comm(o, r);
    else if (verb == "center") cmd_center(o, r);
    else if (verb == "dense") cmd_dense(o, r);
    else if (verb == "fsi") cmd_fsi(o, r, false);
    else if (verb == "si") cmd_fsi(o, r, true);
    else if (verb == "decompose") cmd_decompose(o, r);
    else if (verb == "split") cmd_split(o, r);
    else if (verb == "ufp") cmd_ufp(o, r);
    else if (verb == "cube") cmd_cube(o, r);
    else if (verb == "verify") cmd_verify(o, r);
    else if (verb == "oracle") cmd_oracle(o, r);
    else if (verb == "show") cmd_show(o, r);
  } catch (const Falsification& e) {
    out << r.text.str();
    err << "falsified: " << e.what() << "\n";
    return exit_falsified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  r.machine["status"] = r.status;
  out << r.text.str() << "--- machine ---\n" << r.machine.dump(2) << "\n";
  return r.status;
}

}  // namespace ualg
