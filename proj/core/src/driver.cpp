#include "koszul/driver.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <memory>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/hilbert.hpp"
#include "koszul/linres.hpp"
#include "koszul/monomial.hpp"
#include "koszul/obstruction.hpp"
#include "koszul/quotient_ring.hpp"
#include "koszul/resolution.hpp"
#include "koszul/ring_checks.hpp"
#include "koszul/selfcheck.hpp"
#include "koszul/textio.hpp"
#include "koszul/uk.hpp"

namespace koszul {
namespace {

long to_long(const std::string& text, const std::string& what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(text, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != text.size())
    throw usage_error(what + ": expected an integer, got '" + text + "'");
  return v;
}

long opt_long(const JobSpec& job, const std::string& key, long def, long lo,
              long hi) {
  long v = def;
  auto it = job.options.find(key);
  if (it != job.options.end()) v = to_long(it->second, "--" + key);
  if (v < lo || v > hi)
    throw usage_error("--" + key + " must lie in [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  return v;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field field_of(const JobSpec& job, Report& rep) {
  long p = opt_long(job, "char", 0, 0, (1L << 31) - 1);
  if (p != 0 && !is_prime(p))
    throw usage_error("--char must be 0 or a prime below 2^31");
  rep.characteristic = p;
  return Field{p};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParsedInput parsed_option(const JobSpec& job, const std::string& key) {
  auto it = job.options.find(key);
  if (it == job.options.end())
    throw usage_error(job.command + " requires --" + key + " FILE");
  return parse_input(read_file(it->second));
}

// Drops zero generators and rejects units and other degree-0 noise up front.
std::vector<MultiPolynomial> clean_ideal(const ParsedInput& in) {
  std::vector<MultiPolynomial> gens;
  for (const auto& g : in.ideal_gens) {
    if (g.is_zero()) continue;
    if (g.degree() < 1)
      throw usage_error("ideal generators must have positive degree");
    gens.push_back(g);
  }
  return gens;
}

int max_gen_degree(const std::vector<MultiPolynomial>& gens) {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

// Relation degrees readable straight off the parsed text; reduction and
// column pruning can only shrink them, so this upper bound is safe for
// sizing the ring cache.
int parsed_max_relation_degree(const ParsedInput& in) {
  if (!in.has_module) return 1;  // residue-field relations are linear
  int best = 0;
  for (const auto& col : in.module_relations)
    for (size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) {
        best = std::max(best, col[r].degree() + in.module_gen_degrees[r]);
        break;
      }
  return best;
}

std::shared_ptr<QuotientRing> build_ring(
    const std::vector<std::string>& vars,
    const std::vector<MultiPolynomial>& gens, const Field& field,
    const JobSpec& job, int need_degree) {
  long def = std::max({2, 2 * max_gen_degree(gens), need_degree});
  long cap = opt_long(job, "cap", def, 1, 512);
  return std::make_shared<QuotientRing>(
      vars, gens, MonomialOrder::standard(vars.size()), field,
      static_cast<int>(cap));
}

GradedModulePresentation module_of(std::shared_ptr<const QuotientRing> ring,
                                   const ParsedInput& in) {
  if (!in.has_module) return GradedModulePresentation::residue_field(ring);
  return GradedModulePresentation::make(ring, in.module_gen_degrees,
                                        in.module_relations);
}

MonomialIdeal monomial_ideal_of(const ParsedInput& in) {
  std::vector<Monomial> gens;
  for (const auto& g : in.ideal_gens) {
    if (g.is_zero()) continue;
    if (g.terms.size() != 1)
      throw usage_error("this command needs a monomial ideal; generator '" +
                        g.str(in.vars) + "' has several terms");
    if (g.degree() < 1)
      throw usage_error("ideal generators must have positive degree");
    gens.push_back(g.terms.front().first);
  }
  return MonomialIdeal::make(in.vars, gens);
}

void push_block(Report& rep, const std::string& block) {
  std::istringstream ss(block);
  std::string l;
  while (std::getline(ss, l)) rep.line(l);
}

Json json_cell(int i, int j) {
  Json c = Json::object();
  c["i"] = i;
  c["j"] = j;
  return c;
}

// ---------------------------------------------------------------- numerics

void numerics_into(Report& rep, const AlgebraNumerics& a) {
  Json v = Json::object();
  v["label"] = a.label;
  v["hPolynomial"] = json_poly(a.h_poly);
  Int hm1 = eval_int(a.h_poly, Int(-1));
  v["hAtMinusOne"] = json_int(hm1);
  v["dimension"] = a.dim;
  v["embeddingDimension"] = a.embdim;
  v["codimension"] = a.codim;
  v["multiplicity"] = json_int(a.multiplicity);
  if (a.is_complete_intersection.has_value())
    v["completeIntersection"] = *a.is_complete_intersection;
  else
    v["completeIntersection"] = nullptr;
  v["multiplicityBound"] = ci_multiplicity_check(a);
  rep.verdicts.push_back(v);

  Json cert = Json::object();
  cert["hilbertFunction"] = Json::array();
  for (int i = 0; i <= 8; ++i)
    cert["hilbertFunction"].push_back(json_int(hilbert_function_value(a, i)));
  rep.certificates.push_back(cert);

  rep.line(a.label);
  rep.line("  h(z) = " + a.h_poly.str());
  rep.line("  h(-1) = " + to_string(hm1));
  rep.line("  dim = " + std::to_string(a.dim) +
           ", embdim = " + std::to_string(a.embdim) +
           ", codim = " + std::to_string(a.codim));
  rep.line("  multiplicity e = " + to_string(a.multiplicity));
  rep.line(std::string("  e <= 2^codim bound: ") +
           (ci_multiplicity_check(a) ? "holds" : "violated"));
}

Report run_veronese(const JobSpec& job) {
  Report rep;
  rep.command = "veronese";
  if (job.args.size() != 2) throw usage_error("veronese needs arguments N C");
  long n = to_long(job.args[0], "N");
  long c = to_long(job.args[1], "C");
  if (n < 1 || n > 16 || c < 1 || c > 2000)
    throw usage_error("veronese supports N in [1, 16] and C in [1, 2000]");
  rep.parameters["n"] = n;
  rep.parameters["c"] = c;
  numerics_into(rep, veronese_numerics((int)n, (int)c));
  return rep;
}

Report run_segre(const JobSpec& job) {
  Report rep;
  rep.command = "segre";
  if (job.args.size() != 2) throw usage_error("segre needs arguments M N");
  long m = to_long(job.args[0], "M");
  long n = to_long(job.args[1], "N");
  if (m < 1 || n < 1 || m > 500 || n > 500)
    throw usage_error("segre supports factors in [1, 500]");
  rep.parameters["m"] = m;
  rep.parameters["n"] = n;
  numerics_into(rep, segre_numerics((int)m, (int)n));
  return rep;
}

// ------------------------------------------------------------- obstruction

const char* asym_name(Asymptotic a) {
  switch (a) {
    case Asymptotic::EventuallyNegative:
      return "eventually-negative";
    case Asymptotic::EventuallyNonnegative:
      return "eventually-nonnegative";
    case Asymptotic::Inconclusive:
      break;
  }
  return "inconclusive";
}

Json json_obstruction(const ObstructionReport& r) {
  Json v = Json::object();
  v["label"] = r.label;
  v["verdict"] = r.passed ? (r.tail_verified ? "pass" : "pass-up-to-order")
                          : "fail";
  v["scanOrder"] = r.scan_order;
  v["codimension"] = r.codim_used;
  if (r.fail_index >= 0) {
    v["firstNegativeIndex"] = r.fail_index;
    v["firstNegativeCoefficient"] = json_int(r.fail_coefficient);
  } else {
    v["firstNegativeIndex"] = nullptr;
    v["firstNegativeCoefficient"] = nullptr;
  }
  v["vanishOrder"] = r.vanish_order;
  v["gAtMinusOne"] = json_int(r.g_at_minus_one);
  v["asymptotic"] = asym_name(r.asymptotic);
  v["multiplicityBound"] = r.multiplicity_bound_ok;
  v["tailVerified"] = r.tail_verified;
  return v;
}

std::string obstruction_line(const ObstructionReport& r) {
  std::string s = r.label + ": ";
  if (r.passed) {
    s += "pass (no negative coefficient up to order " +
         std::to_string(r.scan_order) + ")";
    if (r.tail_verified) s += ", tail verified nonnegative";
  } else {
    s += "FAIL, first negative coefficient at index " +
         std::to_string(r.fail_index) + " (value " +
         to_string(r.fail_coefficient) + ")";
  }
  return s;
}

AlgebraNumerics family_algebra(const JobSpec& job, Report& rep) {
  bool has_v = job.has("veronese");
  bool has_s = job.has("segre");
  if (has_v == has_s)
    throw usage_error(
        "obstruction requires exactly one of --veronese N C or --segre M N");
  std::istringstream ss(job.options.at(has_v ? "veronese" : "segre"));
  long a = 0, b = 0;
  char extra = 0;
  if (!(ss >> a >> b) || (ss >> extra))
    throw usage_error(std::string(has_v ? "--veronese" : "--segre") +
                      " needs two integer parameters");
  if (has_v) {
    if (a < 1 || a > 16 || b < 1 || b > 2000)
      throw usage_error("--veronese supports N in [1, 16] and C in [1, 2000]");
    rep.parameters["family"] = "veronese";
    rep.parameters["n"] = a;
    rep.parameters["c"] = b;
    return veronese_numerics((int)a, (int)b);
  }
  if (a < 1 || b < 1 || a > 500 || b > 500)
    throw usage_error("--segre supports factors in [1, 500]");
  rep.parameters["family"] = "segre";
  rep.parameters["m"] = a;
  rep.parameters["n"] = b;
  return segre_numerics((int)a, (int)b);
}

Report run_obstruction(const JobSpec& job) {
  Report rep;
  rep.command = "obstruction";
  AlgebraNumerics a = family_algebra(job, rep);
  long order = opt_long(job, "order", std::max(200, 2 * a.codim), 1, 100000);
  rep.parameters["order"] = order;
  rep.bounds["seriesOrder"] = order;

  ObstructionReport r = br_obstruction(a, (int)order);
  rep.verdicts.push_back(json_obstruction(r));

  // Low-order window of 1 - h(-z)/(1-z)^codim for human inspection.
  int prefix = (int)std::min<long>(order, 10);
  TruncatedSeries u =
      expand_rational_series(a.h_poly.negate_variable(), a.codim, prefix);
  Json cert = Json::object();
  cert["seriesPrefix"] = Json::array();
  for (int k = 0; k <= prefix; ++k) {
    Int s = (k == 0) ? Int(1) - u.at(0) : Int(-u.at(k));
    cert["seriesPrefix"].push_back(json_int(s));
  }
  rep.certificates.push_back(cert);

  rep.line(obstruction_line(r));
  rep.line("  series 1 - h(-z)/(1-z)^" + std::to_string(a.codim) +
           " begins with coefficients:");
  std::string pre = "   ";
  for (const auto& e : cert["seriesPrefix"])
    pre += " " + (e.is_string() ? e.get<std::string>()
                                : std::to_string(e.get<long long>()));
  rep.line(pre);
  return rep;
}

Report run_scan(const JobSpec& job) {
  Report rep;
  rep.command = "scan";
  std::string family = "veronese";
  if (job.has("family")) family = job.options.at("family");
  if (family != "veronese" && family != "segre")
    throw usage_error("--family must be veronese or segre");
  FamilyScan spec;
  spec.kind = (family == "veronese") ? FamilyScan::Kind::Veronese
                                     : FamilyScan::Kind::Segre;
  spec.first_lo = (int)opt_long(job, "nmin", 2, 1, 16);
  spec.first_hi = (int)opt_long(job, "nmax", 7, 1, 16);
  spec.second_lo = (int)opt_long(job, "cmin", 2, 1, 500);
  spec.second_hi = (int)opt_long(job, "cmax", 7, 1, 500);
  if (spec.first_lo > spec.first_hi || spec.second_lo > spec.second_hi)
    throw usage_error("scan ranges must be nondecreasing");
  long order = opt_long(job, "order", 200, 1, 100000);

  rep.parameters["family"] = family;
  rep.parameters["nmin"] = spec.first_lo;
  rep.parameters["nmax"] = spec.first_hi;
  rep.parameters["cmin"] = spec.second_lo;
  rep.parameters["cmax"] = spec.second_hi;
  rep.parameters["order"] = order;
  rep.bounds["seriesOrder"] = order;

  auto rows = family_scan(spec, (int)order);
  int fails = 0;
  for (const auto& r : rows) {
    rep.verdicts.push_back(json_obstruction(r));
    rep.line(obstruction_line(r));
    if (!r.passed) ++fails;
  }
  rep.line(std::to_string(fails) + " of " + std::to_string(rows.size()) +
           " tuples fail the obstruction up to order " +
           std::to_string(order));
  return rep;
}

// ----------------------------------------------------- monomial machinery

Report run_monomial(const JobSpec& job) {
  Report rep;
  rep.command = "monomial";
  rep.characteristic = 0;  // certificates are characteristic-free
  ParsedInput in = parsed_option(job, "input");
  MonomialIdeal ideal = monomial_ideal_of(in);
  long gcap = opt_long(job, "cap", 24, 1, 64);
  rep.parameters["vars"] = in.vars;
  Json gl = Json::array();
  for (size_t i = 0; i < ideal.gens.size(); ++i) gl.push_back(ideal.gen_str(i));
  rep.parameters["generators"] = gl;

  Json props = Json::object();
  props["minimalGenerators"] = ideal.gens.size();
  props["quadratic"] = ideal.is_quadratic();
  props["squarefree"] = ideal.is_squarefree();
  props["regularSequence"] = is_monomial_regular_sequence(ideal.gens);
  rep.verdicts.push_back(props);
  rep.line("minimal generators: " + ideal.str());
  rep.line(std::string("  quadratic: ") +
           (ideal.is_quadratic() ? "yes" : "no") +
           ", squarefree: " + (ideal.is_squarefree() ? "yes" : "no") +
           ", regular sequence: " +
           (is_monomial_regular_sequence(ideal.gens) ? "yes" : "no"));

  Json split = Json::object();
  if (!ideal.is_quadratic()) {
    split["splitCertificate"] = "not-attempted";
    rep.verdicts.push_back(split);
    rep.line("split certificate: not attempted (ideal is not quadratic)");
    return rep;
  }
  auto cert = ci_plus_two_linear(ideal, (size_t)gcap);
  split["splitCertificate"] = cert ? "found" : "none";
  rep.verdicts.push_back(split);
  if (!cert) {
    rep.line("split certificate: none within the search budget");
    return rep;
  }
  if (!validate_certificate(ideal, *cert))
    throw internal_error("split certificate failed validation");

  Json c = Json::object();
  Json ci = Json::array(), lin = Json::array();
  for (size_t i = 0; i < cert->ci_part.gens.size(); ++i)
    ci.push_back(cert->ci_part.gen_str(i));
  for (size_t i = 0; i < cert->linear_part.gens.size(); ++i)
    lin.push_back(cert->linear_part.gen_str(i));
  c["ciPart"] = ci;
  c["linearPart"] = lin;
  c["chordal"] = cert->evidence.chordality.chordal;
  if (cert->evidence.chordality.chordal) {
    Json order = Json::array();
    for (const auto& n : cert->evidence.elimination_names) order.push_back(n);
    c["eliminationOrder"] = order;
  } else {
    Json cyc = Json::array();
    for (const auto& n : cert->evidence.cycle_names) cyc.push_back(n);
    c["witnessCycle"] = cyc;
  }
  if (cert->linear_quotients) {
    Json lq = Json::array();
    for (size_t idx : *cert->linear_quotients)
      lq.push_back(cert->linear_part.gen_str(idx));
    c["linearQuotientsOrder"] = lq;
  } else {
    c["linearQuotientsOrder"] = nullptr;
  }
  rep.certificates.push_back(c);

  rep.line("split certificate: U regular sequence, V with linear resolution");
  rep.line("  U = " + cert->ci_part.str());
  rep.line("  V = " + cert->linear_part.str());
  std::string elim = "  non-edge graph of the polarization: chordal (order:";
  for (const auto& n : cert->evidence.elimination_names) elim += " " + n;
  rep.line(elim + ")");
  return rep;
}

Json json_uk(const UKNode& n) {
  Json o = Json::object();
  switch (n.kind) {
    case UKNode::Kind::BaseH:
      o["kind"] = "baseH";
      o["m"] = n.base_m;
      break;
    case UKNode::Kind::PolyExt:
      o["kind"] = "polynomialExtension";
      break;
    case UKNode::Kind::SquareZeroExt:
      o["kind"] = "squareZeroExtension";
      break;
    case UKNode::Kind::FibreProduct:
      o["kind"] = "fibreProduct";
      break;
  }
  Json vars = Json::array();
  for (const auto& v : n.vars) vars.push_back(v);
  o["vars"] = vars;
  if (!n.variable.empty()) o["variable"] = n.variable;
  if (!n.children.empty()) {
    Json ch = Json::array();
    for (const auto& c : n.children) ch.push_back(json_uk(c));
    o["children"] = ch;
  }
  return o;
}

Report run_uk(const JobSpec& job) {
  Report rep;
  rep.command = "uk";
  rep.characteristic = 0;
  ParsedInput in = parsed_option(job, "input");
  MonomialIdeal ideal = monomial_ideal_of(in);
  rep.parameters["vars"] = in.vars;
  Json gl = Json::array();
  for (size_t i = 0; i < ideal.gens.size(); ++i) gl.push_back(ideal.gen_str(i));
  rep.parameters["generators"] = gl;

  auto node = uk_recognize(ideal);
  Json v = Json::object();
  v["recognized"] = node.has_value();
  rep.verdicts.push_back(v);
  if (node) {
    rep.certificates.push_back(json_uk(*node));
    rep.line("recognized: yes");
    push_block(rep, node->str());
  } else {
    rep.line("recognized: no");
  }
  return rep;
}

// ----------------------------------------------------------------- groebner

Report run_gb(const JobSpec& job) {
  Report rep;
  rep.command = "gb";
  ParsedInput in = parsed_option(job, "input");
  Field f = field_of(job, rep);
  auto gens = clean_ideal(in);
  long cap = opt_long(job, "cap", std::max(2, 2 * max_gen_degree(gens)), 1,
                      512);
  MonomialOrder ord = MonomialOrder::standard(in.vars.size());
  rep.parameters["vars"] = in.vars;
  rep.parameters["cap"] = cap;
  rep.bounds["degreeCap"] = cap;

  GroebnerCheck chk = is_groebner(gens, ord, f, (int)cap);
  GroebnerBasis basis = buchberger(in.vars, gens, ord, f, (int)cap);

  Json v = Json::object();
  v["inputWasBasis"] = chk.passed;
  v["complete"] = basis.complete;
  v["basisSize"] = basis.elements.size();
  rep.verdicts.push_back(v);

  Json c = Json::object();
  Json bl = Json::array(), il = Json::array();
  for (const auto& g : basis.elements) {
    bl.push_back(g.str(in.vars));
    il.push_back(
        make_monomial_poly(g.leading_term(ord).first, Rat(1)).str(in.vars));
  }
  c["basis"] = bl;
  c["initialIdeal"] = il;
  if (!chk.passed) {
    c["firstFailingPair"] = Json::array({chk.pair_i, chk.pair_j});
    c["irreducibleRemainder"] = chk.remainder.str(in.vars);
  }
  rep.certificates.push_back(c);

  rep.line(std::string("input was already a basis: ") +
           (chk.passed ? "yes" : "no"));
  rep.line(std::string("basis (") + std::to_string(basis.elements.size()) +
           " elements, " + (basis.complete ? "complete" : "capped") + "):");
  for (const auto& g : basis.elements) rep.line("  " + g.str(in.vars));
  return rep;
}

// -------------------------------------------------------------- resolution

void resolution_into(Report& rep, const ResolutionTruncation& res,
                     const BettiTable& table, bool with_hf) {
  rep.bounds["homological"] = table.h;
  rep.bounds["internalDegree"] = table.D;
  rep.certificates.push_back(json_betti(table));
  if (with_hf) {
    Json hf = Json::array();
    for (const auto& v : res.module_hf) hf.push_back(json_int(v));
    Json o = Json::object();
    o["moduleHilbertFunction"] = hf;
    rep.certificates.push_back(o);
  }
  push_block(rep, table.str());
}

Report run_resolve(const JobSpec& job) {
  Report rep;
  rep.command = "resolve";
  ParsedInput in = parsed_option(job, "input");
  Field f = field_of(job, rep);
  auto gens = clean_ideal(in);
  long h = opt_long(job, "hbound", 5, 1, 64);
  int dguess = job.has("dbound")
                   ? (int)opt_long(job, "dbound", 0, 0, 512)
                   : (int)h + parsed_max_relation_degree(in) + 2;
  auto ring = build_ring(in.vars, gens, f, job, dguess);
  GradedModulePresentation M = module_of(ring, in);
  int D = job.has("dbound") ? dguess : default_internal_bound(M, (int)h);
  rep.parameters["vars"] = in.vars;
  rep.parameters["hbound"] = h;
  rep.parameters["dbound"] = D;
  rep.parameters["module"] = in.has_module ? "presented" : "residue-field";

  auto [res, table] = minimal_resolution(M, (int)h, D);
  verify_resolution(res);

  Json v = Json::object();
  Int total = 0;
  for (const auto& cell : table.cells) total += cell.second;
  v["totalRank"] = json_int(total);
  Json rows = Json::array();
  for (int i = 0; i <= table.h; ++i) {
    Json r = Json::object();
    r["i"] = i;
    Int sum = 0;
    for (const auto& cell : table.cells)
      if (cell.first.first == i) sum += cell.second;
    r["rank"] = json_int(sum);
    auto t = table.row_max(i);
    if (t)
      r["maxShift"] = *t;
    else
      r["maxShift"] = nullptr;
    rows.push_back(r);
  }
  v["rows"] = rows;
  rep.verdicts.push_back(v);
  resolution_into(rep, res, table, true);
  return rep;
}

Report run_lind(const JobSpec& job) {
  Report rep;
  rep.command = "lind";
  ParsedInput in = parsed_option(job, "input");
  Field f = field_of(job, rep);
  auto gens = clean_ideal(in);
  long h = opt_long(job, "hbound", 5, 1, 64);
  int dguess = job.has("dbound")
                   ? (int)opt_long(job, "dbound", 0, 0, 512)
                   : (int)h + parsed_max_relation_degree(in) + 2;
  auto ring = build_ring(in.vars, gens, f, job, dguess);
  GradedModulePresentation M = module_of(ring, in);
  int D = job.has("dbound") ? dguess : default_internal_bound(M, (int)h);
  rep.parameters["vars"] = in.vars;
  rep.parameters["hbound"] = h;
  rep.parameters["dbound"] = D;
  rep.parameters["module"] = in.has_module ? "presented" : "residue-field";

  LinearityReport lr = linearity_defect(M, (int)h, D);
  Json v = Json::object();
  v["lindLowerBound"] = lr.lind_lower_bound;
  v["stable"] = lr.stable;
  if (lr.has_witness) {
    Json w = json_cell(lr.witness_i, lr.witness_j);
    w["homologyDim"] = json_int(lr.witness_dim);
    v["witness"] = w;
  } else {
    v["witness"] = nullptr;
  }
  rep.verdicts.push_back(v);
  rep.bounds["homological"] = lr.h;
  rep.bounds["internalDegree"] = lr.D;
  rep.certificates.push_back(json_betti(lr.table));

  if (lr.has_witness)
    rep.line("linearity defect >= " + std::to_string(lr.lind_lower_bound) +
             " (linear part has homology at i = " +
             std::to_string(lr.witness_i) +
             ", j = " + std::to_string(lr.witness_j) + ")");
  else
    rep.line("linear part exact in rows 1 .. " + std::to_string(lr.h - 1) +
             ": defect 0 within the window");
  push_block(rep, lr.table.str());
  return rep;
}

Report run_koszul(const JobSpec& job) {
  Report rep;
  rep.command = "koszul";
  ParsedInput in = parsed_option(job, "input");
  if (in.has_module)
    throw usage_error("koszul takes ring and ideal stanzas only");
  Field f = field_of(job, rep);
  auto gens = clean_ideal(in);
  long h = opt_long(job, "hbound", 5, 1, 64);
  long D = opt_long(job, "dbound", h + 3, 0, 512);
  auto ring = build_ring(in.vars, gens, f, job, (int)D);
  rep.parameters["vars"] = in.vars;
  rep.parameters["hbound"] = h;
  rep.parameters["dbound"] = D;

  KoszulReport kr = koszul_check(ring, (int)h, (int)D);
  Json v = Json::object();
  v["koszul"] = kr.passed;
  if (kr.has_cell) {
    Json c = json_cell(kr.cell_i, kr.cell_j);
    c["beta"] = json_int(kr.cell_beta);
    v["offendingCell"] = c;
  } else {
    v["offendingCell"] = nullptr;
  }
  rep.verdicts.push_back(v);
  rep.bounds["homological"] = kr.h;
  rep.bounds["internalDegree"] = kr.D;
  rep.certificates.push_back(json_betti(kr.table));

  if (kr.passed)
    rep.line("residue field resolves linearly up to row " +
             std::to_string(kr.h) + ": Koszul within the window");
  else
    rep.line("not Koszul: beta(" + std::to_string(kr.cell_i) + ", " +
             std::to_string(kr.cell_j) + ") = " + to_string(kr.cell_beta));
  push_block(rep, kr.table.str());
  return rep;
}

Report run_golod(const JobSpec& job) {
  Report rep;
  rep.command = "golod";
  ParsedInput qin = parsed_option(job, "input");
  ParsedInput rin = parsed_option(job, "target");
  if (qin.vars != rin.vars)
    throw usage_error("--input and --target must declare the same variables");
  if (qin.has_module || rin.has_module)
    throw usage_error("golod takes ring and ideal stanzas only");
  Field f = field_of(job, rep);
  auto qgens = clean_ideal(qin);
  auto tgens = clean_ideal(rin);
  long h = opt_long(job, "hbound", 5, 1, 64);
  long D = opt_long(job, "dbound",
                    h + std::max(1, max_gen_degree(tgens)) + 2, 0, 512);
  rep.parameters["vars"] = qin.vars;
  rep.parameters["hbound"] = h;
  rep.parameters["dbound"] = D;

  auto Q = build_ring(qin.vars, qgens, f, job, (int)D);
  GolodReport gr = golod_map_check(Q, tgens, (int)h, (int)D);

  Json v = Json::object();
  v["golod"] = gr.passed;
  v["baseKoszul"] = gr.base.passed;
  if (gr.has_cell) {
    Json c = json_cell(gr.cell_i, gr.cell_j);
    c["beta"] = json_int(gr.cell_beta);
    v["violatingCell"] = c;
  } else {
    v["violatingCell"] = nullptr;
  }
  rep.verdicts.push_back(v);

  Json eg = Json::array();
  for (const auto& g : gr.extra_gens) eg.push_back(g.str(qin.vars));
  Json egc = Json::object();
  egc["extraGenerators"] = eg;
  rep.certificates.push_back(egc);

  rep.line(std::string("surjection is Golod within the window: ") +
           (gr.passed ? "yes" : "no"));
  if (!gr.base.passed)
    rep.line("  (base ring fails the Koszul test at beta(" +
             std::to_string(gr.base.cell_i) + ", " +
             std::to_string(gr.base.cell_j) + "))");
  if (gr.has_cell)
    rep.line("  row violation: t_" + std::to_string(gr.cell_i) + " reaches " +
             std::to_string(gr.cell_j) + " > " +
             std::to_string(gr.cell_i + 1));

  // Poincare series comparison needs full tables, recomputed unobserved.
  long sbound = opt_long(job, "order", std::min<long>(6, D), 0, D);
  rep.bounds["serreDegree"] = sbound;
  std::vector<MultiPolynomial> allgens = qgens;
  allgens.insert(allgens.end(), tgens.begin(), tgens.end());
  auto R = std::make_shared<QuotientRing>(
      qin.vars, allgens, MonomialOrder::standard(qin.vars.size()), f,
      std::max({2, 2 * max_gen_degree(allgens), (int)D}));
  auto kQ = minimal_resolution(GradedModulePresentation::residue_field(Q),
                               (int)h, (int)D)
                .second;
  auto RQ = minimal_resolution(
                GradedModulePresentation::cyclic(Q, gr.extra_gens), (int)h,
                (int)D)
                .second;
  auto kR = minimal_resolution(GradedModulePresentation::residue_field(R),
                               (int)h, (int)D)
                .second;
  SerreReport sr = serre_check(kQ, RQ, kR, (int)sbound);

  Json sv = Json::object();
  sv["serreInequality"] = sr.inequality;
  sv["serreEquality"] = sr.equality;
  sv["homologicalWindow"] = sr.homological_window;
  sv["internalDegreeBound"] = sr.bound;
  sv["inequalityViolation"] =
      sr.has_ineq_cell ? json_cell(sr.ineq_i, sr.ineq_j) : Json(nullptr);
  if (sr.has_eq_cell) {
    Json c = json_cell(sr.eq_i, sr.eq_j);
    c["lhs"] = json_int(sr.eq_lhs);
    c["rhs"] = json_int(sr.eq_rhs);
    sv["firstStrictCell"] = c;
  } else {
    sv["firstStrictCell"] = nullptr;
  }
  rep.verdicts.push_back(sv);

  Json tables = Json::object();
  tables["kOverBase"] = json_betti(kQ);
  tables["targetOverBase"] = json_betti(RQ);
  tables["kOverTarget"] = json_betti(kR);
  rep.certificates.push_back(tables);

  rep.line(std::string("series bound: inequality ") +
           (sr.inequality ? "holds" : "VIOLATED") + ", equality " +
           (sr.equality ? "holds" : "fails") + " up to degree " +
           std::to_string(sr.bound));
  if (sr.has_eq_cell)
    rep.line("  first strict cell at i = " + std::to_string(sr.eq_i) +
             ", j = " + std::to_string(sr.eq_j) + " (" +
             to_string(sr.eq_lhs) + " < " + to_string(sr.eq_rhs) + ")");
  return rep;
}

Report run_reproduce(const JobSpec& job) {
  Report rep;
  rep.command = "reproduce-paper";
  if (!job.args.empty()) throw usage_error("reproduce-paper takes no arguments");
  auto rows = golden_battery();
  int failed = 0;
  for (const auto& r : rows) {
    Json v = Json::object();
    v["group"] = "A" + std::to_string(r.group);
    v["name"] = r.name;
    v["passed"] = r.passed;
    if (!r.detail.empty()) v["detail"] = r.detail;
    rep.verdicts.push_back(v);
    std::string l = std::string(r.passed ? "PASS" : "FAIL") + "  [A" +
                    std::to_string(r.group) + "] " + r.name;
    if (!r.passed && !r.detail.empty()) l += "  (" + r.detail + ")";
    rep.line(l);
    if (!r.passed) ++failed;
  }
  Json sum = Json::object();
  sum["total"] = rows.size();
  sum["failed"] = failed;
  rep.verdicts.push_back(sum);
  rep.line(std::to_string(rows.size() - failed) + " of " +
           std::to_string(rows.size()) + " golden values reproduced");
  return rep;
}

}  // namespace

Report run_job(const JobSpec& job) {
  const std::string& c = job.command;
  if (c == "veronese") return run_veronese(job);
  if (c == "segre") return run_segre(job);
  if (c == "obstruction") return run_obstruction(job);
  if (c == "scan") return run_scan(job);
  if (c == "monomial") return run_monomial(job);
  if (c == "uk") return run_uk(job);
  if (c == "gb") return run_gb(job);
  if (c == "resolve") return run_resolve(job);
  if (c == "lind") return run_lind(job);
  if (c == "koszul") return run_koszul(job);
  if (c == "golod") return run_golod(job);
  if (c == "reproduce-paper") return run_reproduce(job);
  throw usage_error("unknown command: " + c);
}

}  // namespace koszul
