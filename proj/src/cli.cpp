#include "tanglelab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "tanglelab/burnside.hpp"
#include "tanglelab/coloring.hpp"
#include "tanglelab/conway.hpp"
#include "tanglelab/coset.hpp"
#include "tanglelab/errors.hpp"
#include "tanglelab/moves.hpp"
#include "tanglelab/ntangle.hpp"
#include "tanglelab/symplectic.hpp"

namespace tanglelab::cli {
namespace {

struct DiagramInput {
  std::string braid;
  std::string conway;
  std::string diagram;
  std::string closure = "none";
};

void add_diagram_input(CLI::App* app, DiagramInput& in) {
  auto* b = app->add_option("--braid", in.braid, "braid closure, \"<n>: letters\"");
  auto* c = app->add_option("--conway", in.conway, "Conway expression of a 2-tangle");
  auto* d = app->add_option("--diagram", in.diagram, "diagram file");
  b->excludes(c)->excludes(d);
  c->excludes(d);
  app->add_option("--closure", in.closure, "close a 2-tangle: none, num, den")
      ->check(CLI::IsMember({"none", "num", "den"}));
}

TangleDiagram load_diagram(const DiagramInput& in) {
  TangleDiagram d;
  if (!in.braid.empty()) {
    d = braid_closure(parse_braid(in.braid));
  } else if (!in.conway.empty()) {
    d = compile(parse_conway(in.conway));
  } else if (!in.diagram.empty()) {
    d = read_diagram_file(in.diagram);
  } else {
    throw InputError("one of --braid, --conway, --diagram is required");
  }
  if (in.closure != "none") {
    if (d.n() != 2) throw InputError("--closure needs a 2-tangle");
    d = closure(d, in.closure == "num" ? ClosureKind::numerator : ClosureKind::denominator);
  }
  return d;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_subspace(std::ostream& out, const std::string& key, const SubspaceModP& s) {
  out << key << ".dim = " << s.dim() << "\n";
  for (const auto& row : s.basis()) {
    out << key << ".row =";
    for (Residue x : row) out << " " << x;
    out << "\n";
  }
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("expected two comma separated integers: " + text);
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw InputError("expected two comma separated integers: " + text);
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------- colorings

struct ColorOpts {
  DiagramInput in;
  int mod = 0;
  std::optional<int> abf;
  bool show = false;
};

void run_color(const ColorOpts& o, std::ostream& out) {
  const TangleDiagram d = load_diagram(o.in);
  if (o.show) out << format_diagram(d);
  ColoringSpace cs;
  out << "modulus = " << o.mod << "\n";
  if (o.abf) {
    cs = abf_space(d, o.mod, *o.abf);
    out << "t = " << *o.abf << "\n";
  } else {
    cs = coloring_space(d, o.mod);
  }
  out << "count = " << cs.count << "\n";
  if (cs.solutions) {
    out << "dimension = " << cs.solutions->dim() << "\n";
  } else {
    out << "invariant_factors =";
    for (const auto& f : cs.invariant_factors) out << " " << f;
    out << "\n";
  }
}

struct BoundaryOpts {
  DiagramInput in;
  int p = 0;
  bool virt = false;
};

void run_boundary(const BoundaryOpts& o, std::ostream& out) {
  const TangleDiagram d = load_diagram(o.in);
  if (d.n() < 1) throw InputError("boundary needs a tangle, not a link");
  out << "n = " << d.n() << "\n";
  if (o.p) {
    require_prime(o.p);
    const SubspaceModP psi = boundary_image(d, o.p);
    const SubspaceModP hat = reduced_boundary_image(d, o.p);
    const SymplecticSpace space = build_form(o.p, d.n());
    out << "p = " << o.p << "\n";
    print_subspace(out, "psi", psi);
    print_subspace(out, "psi_hat", hat);
    out << "isotropic = " << yes_no(is_isotropic(hat, space)) << "\n";
    out << "lagrangian = " << yes_no(is_lagrangian(hat, space)) << "\n";
  }
  if (o.virt) {
    const VirtualIndex vi = virtual_index(d);
    if (vi.index) {
      out << "virtual_index = " << *vi.index << "\n";
    } else {
      out << "virtual_index = infinite\n";
    }
  }
  if (!o.p && !o.virt) throw InputError("boundary needs --p or --virtual");
}

// ------------------------------------------------------------- lagrangians

struct LagrangianOpts {
  int p = 0;
  int n = 0;
  bool count_only = false;
  bool formula = false;
  bool list = false;
  bool realize = false;
  bool form = false;
  std::int64_t budget = kDefaultRealizationBudget;
  std::uint64_t seed = 1;
  int sample = 0;
  int leaves = 6;
};

void run_lagrangians(const LagrangianOpts& o, std::ostream& out) {
  require_prime(o.p);
  if (o.n < 2) throw InputError("--n must be at least 2");
  if (o.count_only) {
    if (o.formula) {
      out << lagrangian_count(o.p, o.n) << "\n";
    } else {
      out << enumerate_lagrangians(o.p, o.n).size() << "\n";
    }
    return;
  }
  out << "p = " << o.p << "\n";
  out << "n = " << o.n << "\n";
  out << "formula = " << lagrangian_count(o.p, o.n) << "\n";
  if (o.form) {
    const SymplecticSpace space = build_form(o.p, o.n);
    for (const auto& row : space.gram) {
      out << "form.row =";
      for (auto x : row) out << " " << x;
      out << "\n";
    }
  }
  if (!o.formula) {
    const auto all = enumerate_lagrangians(o.p, o.n);
    out << "enumerated = " << all.size() << "\n";
    if (o.list) {
      for (const auto& l : all) out << "lagrangian = " << l.to_string() << "\n";
    }
  }
  if (o.realize) {
    const Realization r = realize_lagrangians(o.p, o.n, o.budget, o.seed);
    out << "realized = " << r.witnesses.size() << "\n";
    out << "unrealized = " << r.unrealized.size() << "\n";
    out << "candidates = " << r.candidates_tried << "\n";
    for (const auto& [space, w] : r.witnesses) {
      out << "witness " << space.to_string() << " = " << witness_string(w) << "\n";
    }
    for (const auto& space : r.unrealized) out << "missing " << space.to_string() << "\n";
  }
  if (o.sample > 0) {
    std::mt19937_64 rng(o.seed);
    const SymplecticSpace space = build_form(o.p, o.n);
    int lagrangian = 0, full_psi = 0;
    for (int i = 0; i < o.sample; ++i) {
      const NTangleExpr e = random_algebraic_ntangle(o.n, o.leaves, rng);
      const TangleDiagram d = e.build();
      const SubspaceModP hat = reduced_boundary_image(d, o.p);
      if (algebraic_boundary_image(e, o.p) != boundary_image(d, o.p)) {
        throw CrossCheckFailure("algebraic boundary image differs from the diagram's for " + e.to_string());
      }
      if (is_lagrangian(hat, space)) ++lagrangian;
      if (boundary_image(d, o.p).dim() == o.n) ++full_psi;
    }
    out << "sampled = " << o.sample << "\n";
    out << "sampled_lagrangian = " << lagrangian << "\n";
    out << "sampled_psi_dim_n = " << full_psi << "\n";
  }
}

void run_census(int n, std::ostream& out) {
  if (n < 2 || n > 8) throw InputError("--n must be in [2, 8]");
  const std::int64_t census = matching_census(n);
  std::int64_t odd = 1, pow2 = 1;
  for (int i = 1; i < n; ++i) {
    odd *= 2 * i + 1;
    pow2 *= (std::int64_t{1} << i) + 1;
  }
  out << "n = " << n << "\n";
  out << "census = " << census << "\n";
  out << "product_2i_plus_1 = " << odd << "\n";
  out << "product_2_pow_i_plus_1 = " << pow2 << "\n";
  const char* match = census == odd && census == pow2 ? "both"
                      : census == odd                 ? "2i+1"
                      : census == pow2                ? "2^i+1"
                                                      : "neither";
  out << "matches = " << match << "\n";
  out << "below_lagrangian_count = " << yes_no(census < pow2) << "\n";
}

// ------------------------------------------------------------------- moves

struct ReduceOpts {
  int p = 0;
  std::string fraction;
  std::string conway;
  bool family = false;
};

void print_reduction(const ReductionResult& r, int p, std::ostream& out) {
  out << "target = " << r.target << "\n";
  out << "circles = " << r.circles << "\n";
  if (!r.certificate) {
    out << "certificate = none\n";
    return;
  }
  out << "start = " << to_string(r.certificate->start) << "\n";
  out << "moves = " << r.certificate->steps.size() << "\n";
  out << format_certificate(*r.certificate);
  const TangleExpr end = replay_certificate(*r.certificate, p);
  out << "final = " << to_string(end) << "\n";
  out << "replay = ok\n";
}

void run_reduce(const ReduceOpts& o, std::ostream& out) {
  require_prime(o.p);
  out << "p = " << o.p << "\n";
  if (o.family) {
    out << "family =";
    for (const auto& f : h_family(o.p)) out << " " << f;
    out << "\n";
  }
  if (!o.fraction.empty()) {
    const Fraction f = parse_fraction(o.fraction);
    out << "fraction = " << f << "\n";
    out << "representative = " << h_representative(f, o.p) << "\n";
    print_reduction(reduce_rational(f, o.p), o.p, out);
  } else if (!o.conway.empty()) {
    const TangleExpr e = parse_conway(o.conway);
    const BoundaryInvariant inv = boundary_invariant(e, o.p);
    out << "point = " << inv.point_string() << "\n";
    print_reduction(reduce_2algebraic(e, o.p), o.p, out);
  } else if (!o.family) {
    throw InputError("reduce needs --fraction, --conway or --family");
  }
}

struct SlopeOpts {
  std::string conway;
  std::string fraction;
  std::string mq;
  std::string shift;
};

void run_slope(const SlopeOpts& o, std::ostream& out) {
  bool any = false;
  if (!o.conway.empty()) {
    any = true;
    const TangleExpr e = parse_conway(o.conway);
    out << "expression = " << to_string(e) << "\n";
    out << "crossings = " << crossing_count(e) << "\n";
    out << "rational = " << yes_no(is_rational(e)) << "\n";
    if (is_rational(e)) {
      const Fraction f = slope(e);
      out << "slope = " << f << "\n";
      if (!f.is_infinite()) out << "terms = " << join(continued_fraction_terms(f)) << "\n";
    }
  }
  if (!o.fraction.empty()) {
    any = true;
    const Fraction f = parse_fraction(o.fraction);
    out << "fraction = " << f << "\n";
    if (!f.is_infinite()) {
      const auto terms = continued_fraction_terms(f);
      out << "terms = " << join(terms) << "\n";
      out << "expansion = " << to_string(expand_rational(terms)) << "\n";
      if (continued_fraction_value(terms) != f) throw CrossCheckFailure("continued fraction does not evaluate back");
    }
  }
  if (!o.mq.empty()) {
    any = true;
    const auto [m, q] = parse_pair(o.mq);
    out << "mq_fraction = " << mq_to_fraction(m, q) << "\n";
  }
  if (!o.shift.empty()) {
    any = true;
    const Fraction f = parse_fraction(o.shift);
    if (f.is_infinite()) throw InputError("--shift needs a finite fraction");
    const auto [minus, plus] = fraction_shift_identities(f.num(), f.den());
    out << "shift_minus = " << minus << "\n";
    out << "shift_plus = " << plus << "\n";
  }
  if (!any) throw InputError("slope needs --conway, --fraction, --mq or --shift");
}

struct MoveCheckOpts {
  DiagramInput in;
  int p = 0;
  std::string fraction;
  int sites = 100;
  std::uint64_t seed = 1;
  std::string site;
};

void run_move_check(const MoveCheckOpts& o, std::ostream& out) {
  const TangleDiagram d = load_diagram(o.in);
  const Fraction f = parse_fraction(o.fraction);
  if (d.arc_count() < 2) throw InputError("the diagram needs at least two arcs");
  std::vector<Site> sites;
  if (!o.site.empty()) {
    const auto [a, b] = parse_pair(o.site);
    sites.push_back({static_cast<ArcId>(a), static_cast<ArcId>(b)});
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> arc(0, d.arc_count() - 1);
    while (static_cast<int>(sites.size()) < o.sites) {
      Site s{arc(rng), arc(rng)};
      if (s.a != s.b) sites.push_back(s);
    }
  }
  int changed = 0;
  BigInt before;
  for (const Site& s : sites) {
    const InvarianceReport r = invariance_harness(d, s, f, o.p);
    before = r.count_before;
    if (!r.unchanged()) {
      ++changed;
      out << "changed_at = " << s.a << "," << s.b << "\n";
    }
  }
  out << "p = " << o.p << "\n";
  out << "fraction = " << f << "\n";
  out << "sites = " << sites.size() << "\n";
  out << "count = " << before << "\n";
  out << "changed = " << changed << "\n";
}

// ---------------------------------------------------------------- burnside

struct BurnsideOpts {
  int r = 0;
  std::string word;
  std::string word_file;
  std::vector<std::string> relators;
  std::string relator_file;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

GroupWord load_word(const BurnsideOpts& o) {
  if (!o.word_file.empty()) return parse_group_word(read_text(o.word_file));
  return parse_group_word(o.word);
}

void run_burnside_eval(const BurnsideOpts& o, std::ostream& out) {
  if (o.word.empty() && o.word_file.empty()) throw InputError("eval needs a word or --word-file");
  const GroupWord w = load_word(o);
  const BurnsideElement g = evaluate_word(o.r, w);
  out << (g.is_identity() ? "TRIVIAL" : "NONTRIVIAL") << "\n";
  out << "rank = " << o.r << "\n";
  out << "length = " << w.size() << "\n";
  out << "element = " << g.to_string() << "\n";
  const auto a = g.abelian_part();
  out << "abelian_identity = " << yes_no(std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }))
      << "\n";
}

void run_burnside_quotient(const BurnsideOpts& o, std::ostream& out) {
  std::vector<BurnsideElement> rel;
  for (const auto& text : o.relators) rel.push_back(evaluate_word(o.r, parse_group_word(text)));
  if (!o.relator_file.empty()) {
    std::istringstream lines(read_text(o.relator_file));
    std::string line;
    while (std::getline(lines, line)) {
      const GroupWord w = parse_group_word(line);
      if (!w.empty()) rel.push_back(evaluate_word(o.r, w));
    }
  }
  out << "rank = " << o.r << "\n";
  out << "relators = " << rel.size() << "\n";
  out << "quotient_order = " << quotient_order(o.r, rel) << "\n";
}

struct ObstructOpts {
  std::string braid;
  bool chen = false;
  int kill = 0;  // 1-based, 0 = every strand
  bool relators = false;
  bool quotient = false;
};

void run_obstruct(const ObstructOpts& o, std::ostream& out) {
  if (o.chen == !o.braid.empty()) throw InputError("obstruct needs exactly one of --braid, --chen");
  const BraidWord braid = o.chen ? chen_braid() : parse_braid(o.braid);
  std::vector<int> kills;
  if (o.kill > 0) {
    kills.push_back(o.kill - 1);
  } else {
    for (int k = 0; k < braid.strands; ++k) kills.push_back(k);
  }
  bool any = false;
  for (std::size_t i = 0; i < kills.size(); ++i) {
    const ObstructionReport rep = obstruction(braid, kills[i]);
    if (i == 0) {
      out << "braid = " << braid.to_string() << "\n";
      out << "rank = " << rep.rank << "\n";
      out << "tri = " << rep.tri << "\n";
      out << "components = " << rep.components << "\n";
    }
    const std::string k = std::to_string(kills[i] + 1);
    out << "kill " << k << " = " << verdict_string(rep.verdict) << "\n";
    out << "kill " << k << " words_checked = " << yes_no(rep.words_checked) << "\n";
    if (o.relators) {
      for (std::size_t j = 0; j < rep.relator_images.size(); ++j) {
        out << "kill " << k << " relator " << j + 1 << " = " << rep.relator_images[j].to_string() << "\n";
      }
    }
    if (o.quotient) {
      out << "kill " << k << " quotient_order = " << quotient_order(rep.rank, rep.relator_images) << "\n";
    }
    any = any || rep.verdict == Verdict::obstructed;
  }
  out << "verdict = " << verdict_string(any ? Verdict::obstructed : Verdict::inconclusive) << "\n";
}

struct QuotientOpts {
  int n = 0;
  int k = 0;
  std::string presentation;
  std::string strategy = "felsch";
  std::size_t budget = 1000000;
  bool classes = false;
  std::string w1;
  std::string w2;
};

void run_braid_quotient(const QuotientOpts& o, std::ostream& out) {
  Presentation pres;
  if (!o.presentation.empty()) {
    pres = read_presentation_file(o.presentation);
  } else {
    if (o.n < 2 || o.k < 1) throw InputError("braid-quotient needs --n >= 2 and --k >= 1, or --presentation");
    pres = braid_presentation(o.n, o.k);
  }
  const CosetTable table = enumerate(pres, o.budget, o.strategy == "hlt" ? Strategy::hlt : Strategy::felsch);
  if (!verify_table(table, pres)) throw CrossCheckFailure("coset table does not satisfy the relators");
  out << "generators = " << pres.generators << "\n";
  out << "relators = " << pres.relators.size() << "\n";
  out << "order = " << table.size() << "\n";
  if (o.classes) {
    const ConjugacyClasses cc = conjugacy_classes(table);
    out << "classes = " << cc.count() << "\n";
    for (int c = 0; c < cc.count(); ++c) {
      const GroupWord& rep = cc.representatives[c];
      out << "class " << c + 1 << " = " << (rep.empty() ? std::string("e") : format_group_word(rep)) << " (size "
          << cc.members[c].size() << ")\n";
    }
  }
  if (!o.w1.empty() || !o.w2.empty()) {
    const bool eq = word_equal(table, parse_group_word(o.w1), parse_group_word(o.w2));
    out << "equal = " << yes_no(eq) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tangle coloring, move and Burnside computations", "tanglelab"};
  app.require_subcommand(1, 1);

  ColorOpts color;
  auto* color_cmd = app.add_subcommand("color", "Fox or Alexander-Burau-Fox coloring count");
  add_diagram_input(color_cmd, color.in);
  color_cmd->add_option("--mod", color.mod, "modulus k")->required()->check(CLI::Range(2, 1 << 30));
  color_cmd->add_option("--abf", color.abf, "ABF parameter t (prime modulus)");
  color_cmd->add_flag("--show-diagram", color.show, "print the diagram first");

  DiagramInput tri_in;
  auto* tri_cmd = app.add_subcommand("tri", "number of Fox 3-colorings");
  add_diagram_input(tri_cmd, tri_in);

  BoundaryOpts bnd;
  auto* bnd_cmd = app.add_subcommand("boundary", "boundary coloring images of a tangle");
  add_diagram_input(bnd_cmd, bnd.in);
  bnd_cmd->add_option("--p", bnd.p, "prime");
  bnd_cmd->add_flag("--virtual", bnd.virt, "index of the integral image in its saturation");

  LagrangianOpts lag;
  auto* lag_cmd = app.add_subcommand("lagrangians", "Lagrangian subspaces of the reduced boundary space");
  lag_cmd->add_option("--p", lag.p, "prime")->required();
  lag_cmd->add_option("--n", lag.n, "number of tangle strands")->required();
  lag_cmd->add_flag("--count-only", lag.count_only, "print only the count");
  lag_cmd->add_flag("--formula", lag.formula, "use the product formula instead of enumerating");
  lag_cmd->add_flag("--list", lag.list, "print every Lagrangian");
  lag_cmd->add_flag("--realize", lag.realize, "search for a tangle realizing each Lagrangian");
  lag_cmd->add_flag("--form", lag.form, "print the Gram matrix");
  lag_cmd->add_option("--budget", lag.budget, "candidate budget for --realize");
  lag_cmd->add_option("--seed", lag.seed, "random seed");
  lag_cmd->add_option("--sample", lag.sample, "check this many random algebraic n-tangles");
  lag_cmd->add_option("--leaves", lag.leaves, "leaves per sampled tangle");

  int census_n = 0;
  auto* census_cmd = app.add_subcommand("census", "distinct F_2 boundary images of perfect matchings");
  census_cmd->add_option("--n", census_n, "number of strands")->required();

  ReduceOpts red;
  auto* red_cmd = app.add_subcommand("reduce", "reduce a 2-tangle to H_p by rational moves");
  red_cmd->add_option("--p", red.p, "prime")->required();
  auto* rf = red_cmd->add_option("--fraction", red.fraction, "slope p/q of a rational tangle");
  auto* rc = red_cmd->add_option("--conway", red.conway, "Conway expression");
  rf->excludes(rc);
  red_cmd->add_flag("--family", red.family, "print the family H_p");

  SlopeOpts slo;
  auto* slope_cmd = app.add_subcommand("slope", "slopes and continued fractions");
  slope_cmd->add_option("--conway", slo.conway, "Conway expression");
  slope_cmd->add_option("--fraction", slo.fraction, "fraction to expand");
  slope_cmd->add_option("--mq", slo.mq, "m,q for the (m,q)-move fraction");
  slope_cmd->add_option("--shift", slo.shift, "p/q for the shifted fractions");

  MoveCheckOpts mv;
  auto* mv_cmd = app.add_subcommand("move-check", "splice a rational tangle at random sites and compare");
  add_diagram_input(mv_cmd, mv.in);
  mv_cmd->add_option("--p", mv.p, "prime dividing the numerator")->required();
  mv_cmd->add_option("--fraction", mv.fraction, "move fraction")->required();
  mv_cmd->add_option("--sites", mv.sites, "number of random sites")->check(CLI::PositiveNumber);
  mv_cmd->add_option("--seed", mv.seed, "random seed");
  mv_cmd->add_option("--site", mv.site, "a single site a,b (arc ids)");

  BurnsideOpts bur;
  auto* bur_cmd = app.add_subcommand("burnside", "free Burnside group B(r,3)");
  bur_cmd->require_subcommand(1, 1);
  bur_cmd->add_option("-r,--rank", bur.r, "rank")->required()->check(CLI::Range(1, BurnsideElement::kMaxRank));
  auto* eval_cmd = bur_cmd->add_subcommand("eval", "evaluate a word");
  auto* ew = eval_cmd->add_option("word", bur.word, "signed generator indices");
  auto* ewf = eval_cmd->add_option("--word-file", bur.word_file, "file holding the word");
  ew->excludes(ewf);
  auto* order_cmd = bur_cmd->add_subcommand("order", "group order");
  auto* enum_cmd = bur_cmd->add_subcommand("enumerate", "breadth-first enumeration of the group");
  auto* check_cmd = bur_cmd->add_subcommand("check", "group law consistency checks");
  check_cmd->add_option("--samples", bur.samples, "random instances");
  check_cmd->add_option("--seed", bur.seed, "random seed");
  auto* quot_cmd = bur_cmd->add_subcommand("quotient", "order of the quotient by relators");
  quot_cmd->add_option("--relator", bur.relators, "relator word (repeatable)");
  quot_cmd->add_option("--relator-file", bur.relator_file, "one relator per line");
  for (auto* sub : {eval_cmd, order_cmd, enum_cmd, check_cmd, quot_cmd}) sub->fallthrough();

  ObstructOpts obs;
  auto* obs_cmd = app.add_subcommand("obstruct", "Burnside obstruction for a braid closure");
  obs_cmd->add_option("--braid", obs.braid, "braid, \"<n>: letters\"");
  obs_cmd->add_flag("--chen", obs.chen, "the 5-braid (s1^-1 s2 s3 s4^-1 s3)^4");
  obs_cmd->add_option("--kill", obs.kill, "strand whose generator is killed (default: each)")
      ->check(CLI::PositiveNumber);
  obs_cmd->add_flag("--relators", obs.relators, "print relator images");
  obs_cmd->add_flag("--quotient", obs.quotient, "order of B(r,3) modulo the relators");

  QuotientOpts bq;
  auto* bq_cmd = app.add_subcommand("braid-quotient", "coset enumeration of B_n/(s_i^k)");
  bq_cmd->add_option("--n", bq.n, "strands");
  bq_cmd->add_option("--k", bq.k, "power of each generator");
  bq_cmd->add_option("--presentation", bq.presentation, "presentation file instead of --n/--k");
  bq_cmd->add_option("--strategy", bq.strategy, "felsch or hlt")->check(CLI::IsMember({"felsch", "hlt"}));
  bq_cmd->add_option("--budget", bq.budget, "maximum live cosets");
  bq_cmd->add_flag("--classes", bq.classes, "conjugacy classes with representatives");
  bq_cmd->add_option("--w1", bq.w1, "first word for an equality test");
  bq_cmd->add_option("--w2", bq.w2, "second word for an equality test");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("tanglelab");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream report;
  try {
    if (color_cmd->parsed()) {
      run_color(color, report);
    } else if (tri_cmd->parsed()) {
      report << "tri = " << tri(load_diagram(tri_in)) << "\n";
    } else if (bnd_cmd->parsed()) {
      run_boundary(bnd, report);
    } else if (lag_cmd->parsed()) {
      run_lagrangians(lag, report);
    } else if (census_cmd->parsed()) {
      run_census(census_n, report);
    } else if (red_cmd->parsed()) {
      run_reduce(red, report);
    } else if (slope_cmd->parsed()) {
      run_slope(slo, report);
    } else if (mv_cmd->parsed()) {
      run_move_check(mv, report);
    } else if (bur_cmd->parsed()) {
      if (eval_cmd->parsed()) {
        run_burnside_eval(bur, report);
      } else if (order_cmd->parsed()) {
        report << "order = " << burnside_order(bur.r) << "\n";
      } else if (enum_cmd->parsed()) {
        report << "elements = " << enumerate_group(bur.r) << "\n";
      } else if (check_cmd->parsed()) {
        const ConsistencyReport c = consistency_check(bur.r, bur.samples, bur.seed);
        report << "rank = " << c.rank << "\n";
        report << "associativity = " << c.associativity_checks << (c.exhaustive ? " exhaustive" : "") << "\n";
        report << "exponent = " << c.exponent_checks << "\n";
        report << "engel = " << c.engel_checks << "\n";
        report << "result = ok\n";
      } else if (quot_cmd->parsed()) {
        run_burnside_quotient(bur, report);
      }
    } else if (obs_cmd->parsed()) {
      run_obstruct(obs, report);
    } else if (bq_cmd->parsed()) {
      run_braid_quotient(bq, report);
    }
  } catch (const InputError& e) {
    out << report.str();
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    out << report.str();
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CrossCheckFailure& e) {
    out << report.str();
    err << "cross-check failure: " << e.what() << "\n";
    return 4;
  }
  out << report.str();
  return 0;
}

}  // namespace tanglelab::cli
