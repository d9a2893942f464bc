#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crosslab/bounds.hpp"
#include "crosslab/errors.hpp"
#include "crosslab/families.hpp"
#include "crosslab/hyperbolic.hpp"
#include "crosslab/intersection.hpp"
#include "crosslab/io.hpp"
#include "crosslab/pants.hpp"
#include "crosslab/parallel.hpp"
#include "crosslab/suites.hpp"

using namespace crosslab;

namespace {

enum Exit : int { kOk = 0, kViolated = 1, kCap = 2, kInvalidWord = 3, kFailure = 4 };

struct Global {
  std::string format;
  unsigned jobs = 1;
  std::string output;
  bool seedless = false;
};

// Data goes to a buffer and is flushed once, so a failing command leaves no partial output.
void emit(const Global& g, const std::string& data) {
  if (g.output.empty() || g.output == "-") {
    std::cout << data << std::flush;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + g.output + "' for writing");
  f << data;
}

std::string format_or(const Global& g, const char* fallback) { return g.format.empty() ? fallback : g.format; }

std::array<double, 3> cuff_triple(const std::vector<double>& v) {
  if (v.size() != 3) throw std::invalid_argument("--cuffs takes three lengths");
  return {v[0], v[1], v[2]};
}

HalfEdge half_edge_arg(const std::string& s) {
  auto h = parse_half_edge(s);
  if (!h) throw ValidationError(ValidationKind::InvalidHalfEdge, "bad half-edge '" + s + "'");
  return *h;
}

std::string curve_label(const CurveClass& c) { return word_to_string(c.word()); }
std::string arc_label(const ArcClass& a) { return to_string(a); }

// ---- enumerate ----

struct EnumerateArgs {
  std::string kind = "curves";
  int max_length = 4;
  bool spectrum = false;
  std::vector<double> cuffs{2, 2, 2};
};

template <class T, class Label>
std::string census_text(const std::vector<T>& classes, const std::string& fmt, Label label) {
  std::ostringstream os;
  if (fmt == "json") {
    write_census(os, classes);
  } else if (fmt == "csv") {
    os << "class,length\n";
    for (const auto& c : classes) os << csv_field(label(c)) << ',' << c.length() << '\n';
  } else {
    for (const auto& c : classes) os << label(c) << "  " << c.length() << '\n';
    os << classes.size() << " classes\n";
  }
  return os.str();
}

int cmd_enumerate(const Global& g, const EnumerateArgs& a) {
  std::string fmt = format_or(g, a.spectrum ? "csv" : "json");
  if (a.kind == "arcs") {
    if (a.spectrum) throw std::invalid_argument("--spectrum applies to curves only");
    emit(g, census_text(enumerate_arcs(a.max_length), fmt, arc_label));
    return kOk;
  }
  if (a.kind != "curves") throw std::invalid_argument("--kind must be arcs or curves");
  auto curves = enumerate_curves(a.max_length);
  if (!a.spectrum) {
    emit(g, census_text(curves, fmt, curve_label));
    return kOk;
  }
  auto c = cuff_triple(a.cuffs);
  PantsRep rep = pants_representation(c[0], c[1], c[2]);
  std::vector<SpectrumEntry> spec;
  spec.reserve(curves.size());
  for (const auto& cv : curves) spec.push_back({cv, word_length(cv, rep)});
  std::stable_sort(spec.begin(), spec.end(), [](const auto& x, const auto& y) { return x.length < y.length; });
  std::ostringstream os;
  if (fmt == "json") {
    Json j = Json::array();
    for (const auto& e : spec)
      j.push_back({{"word", e.curve.word()}, {"combinatorial_length", e.curve.length()}, {"hyperbolic_length", e.length}});
    os << j.dump(2) << '\n';
  } else {
    write_spectrum_csv(os, spec);
  }
  emit(g, os.str());
  return kOk;
}

// ---- intersect ----

struct IntersectArgs {
  std::vector<std::string> words;
  std::vector<std::string> starts, interiors, ends;
  bool self = false;
  std::string census;
  int max_length = 4;
  std::string matrix;
  bool oracle = false;
  int radius = -1;
  int max_radius = 24;
  std::vector<double> cuffs{2, 2, 2};
};

template <class T>
std::string matrix_text(const std::vector<T>& members, unsigned jobs, std::vector<std::string> labels) {
  std::ostringstream os;
  write_matrix_csv(os, labels, intersection_matrix(members, jobs));
  return os.str();
}

std::string value_text(const Global& g, Json record, std::uint64_t value) {
  std::string fmt = format_or(g, "table");
  if (fmt == "json") return record.dump() + "\n";
  if (fmt == "csv") {
    std::string head, row;
    for (auto& [k, v] : record.items()) {
      head += (head.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + csv_field(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return head + "\n" + row + "\n";
  }
  return std::to_string(value) + "\n";
}

std::uint64_t arc_oracle(const ArcClass& a, const ArcClass& b, const PantsRep& rep, int radius, int max_radius) {
  if (radius < 0) radius = static_cast<int>(a.length() + b.length()) + 6;
  for (int R = radius;; R += 2) {
    OracleResult r = oracle_arc_intersection_raw(a, b, rep, R);
    if (r.converged) return r.count;
    if (R + 2 > max_radius) throw NotConverged("arc oracle did not converge by radius " + std::to_string(R), r.count);
  }
}

int cmd_intersect(const Global& g, const IntersectArgs& a) {
  if (!a.census.empty()) {
    std::string text;
    if (a.census == "curves") {
      auto cs = enumerate_curves(a.max_length);
      std::vector<std::string> labels;
      for (const auto& c : cs) labels.push_back(curve_label(c));
      text = matrix_text(cs, g.jobs, labels);
    } else if (a.census == "arcs") {
      auto as = enumerate_arcs(a.max_length);
      std::vector<std::string> labels;
      for (const auto& x : as) labels.push_back(arc_label(x));
      text = matrix_text(as, g.jobs, labels);
    } else {
      throw std::invalid_argument("--census must be arcs or curves");
    }
    if (a.matrix.empty()) {
      emit(g, text);
    } else {
      Global to_file = g;
      to_file.output = a.matrix;
      emit(to_file, text);
    }
    return kOk;
  }

  auto c = cuff_triple(a.cuffs);
  std::optional<PantsRep> rep;
  if (a.oracle) rep = pants_representation(c[0], c[1], c[2]);

  if (!a.starts.empty() || !a.ends.empty() || !a.interiors.empty()) {
    if (a.starts.size() != a.ends.size() || a.starts.size() != a.interiors.size())
      throw std::invalid_argument("each arc needs --start, --interior and --end");
    if (!a.words.empty()) throw std::invalid_argument("mixing --word and arcs is not supported");
    std::vector<ArcClass> arcs;
    for (std::size_t i = 0; i < a.starts.size(); ++i)
      arcs.push_back(make_arc(half_edge_arg(a.starts[i]), parse_word(a.interiors[i]), half_edge_arg(a.ends[i])));
    Json rec;
    std::uint64_t v = 0;
    if (arcs.size() == 1 && a.self) {
      v = a.oracle ? arc_oracle(arcs[0], arcs[0], *rep, a.radius, a.max_radius) / 2 : arc_self_intersection(arcs[0]);
      rec = {{"arc", arc_label(arcs[0])}, {"self_intersection", v}};
    } else if (arcs.size() == 2 && !a.self) {
      v = a.oracle ? arc_oracle(arcs[0], arcs[1], *rep, a.radius, a.max_radius) : arc_intersection(arcs[0], arcs[1]);
      rec = {{"a", arc_label(arcs[0])}, {"b", arc_label(arcs[1])}, {"intersection", v}};
    } else {
      throw std::invalid_argument("give two arcs, or one arc with --self");
    }
    if (a.oracle) rec["method"] = "oracle";
    emit(g, value_text(g, rec, v));
    return kOk;
  }

  std::vector<CurveClass> curves;
  for (const auto& w : a.words) curves.push_back(make_curve(parse_word(w)));
  auto oracle_pair = [&](const CurveClass& u, const CurveClass& v) {
    int R = a.radius >= 0 ? a.radius : static_cast<int>(u.length() + v.length()) + 6;
    return oracle_intersection_adaptive(u, v, *rep, R, std::max(R, a.max_radius));
  };
  Json rec;
  std::uint64_t v = 0;
  if (curves.size() == 1 && a.self) {
    v = a.oracle ? oracle_pair(curves[0], curves[0]) / 2 : self_intersection(curves[0]);
    rec = {{"word", curve_label(curves[0])}, {"self_intersection", v}};
  } else if (curves.size() == 2 && !a.self) {
    v = a.oracle ? oracle_pair(curves[0], curves[1]) : intersection_number(curves[0], curves[1]);
    rec = {{"u", curve_label(curves[0])}, {"v", curve_label(curves[1])}, {"intersection", v}};
  } else {
    throw std::invalid_argument("give two --word values, or one with --self");
  }
  if (a.oracle) rec["method"] = "oracle";
  emit(g, value_text(g, rec, v));
  return kOk;
}

// ---- family ----

struct FamilyArgs {
  std::string construction = "pants-curves";
  int max_length = 4;
  int cuff = 1;
  int genus = 0;
  int punctures = 3;
  std::vector<int> anchors;
  bool crossing = false;
};

int cmd_family(const Global& g, const FamilyArgs& a) {
  Family f;
  switch (construction_from_string(a.construction)) {
    case Construction::PantsArcs: f = pants_arc_family(a.max_length); break;
    case Construction::CuffAnchored: f = cuff_anchored_family(a.max_length, a.cuff); break;
    case Construction::PantsCurves: f = pants_curve_family(a.max_length); break;
    case Construction::SphereArcs:
      f = assemble({{a.genus, a.punctures}, FamilyKind::Arcs, a.max_length, a.anchors});
      break;
    case Construction::SurfaceCurves:
      f = assemble({{a.genus, a.punctures}, FamilyKind::Curves, a.max_length, {}});
      break;
    case Construction::Custom: throw std::invalid_argument("custom families are read, not generated");
  }
  std::string fmt = format_or(g, "json");
  Json j = to_json(f);
  if (a.crossing) {
    CrossingStats s = crossing_stats(f, g.jobs);
    j["size"] = f.size();
    j["crossing"] = s.crossing;
    j["max_pair"] = s.max_pair;
  }
  if (fmt == "json") {
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (fmt == "csv") os << "block,class\n";
    for (const auto& b : f.blocks) {
      std::vector<std::string> labels;
      if (f.kind == FamilyKind::Arcs)
        for (const auto& x : b.arcs) labels.push_back(arc_label(x));
      else
        for (const auto& x : b.curves) labels.push_back(curve_label(x));
      for (const auto& l : labels) os << b.id << (fmt == "csv" ? "," + csv_field(l) : "  " + l) << '\n';
    }
    if (a.crossing && fmt != "csv") os << "size " << f.size() << "  crossing " << j["crossing"].get<std::uint64_t>() << '\n';
    emit(g, os.str());
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_length;
  std::string family_file;
  std::vector<double> cuffs{2, 2, 2};
};

std::string reports_text(const Global& g, const std::vector<BoundReport>& reports) {
  std::string fmt = format_or(g, "json");
  if (fmt == "table") return reports_table(reports);
  if (fmt == "csv") {
    std::ostringstream os;
    os << "theorem,side,bound,observed,applicable,verdict,note\n";
    for (const auto& r : reports)
      os << r.theorem << ',' << to_string(r.side) << ',' << format_double(r.bound, "%.17g") << ','
         << (r.observed ? std::to_string(*r.observed) : "") << ',' << (r.applicable ? "true" : "false") << ','
         << to_string(r.verdict) << ',' << csv_field(r.note) << '\n';
    return os.str();
  }
  return to_json(reports).dump(2) + "\n";
}

int cmd_verify(const Global& g, const VerifyArgs& a) {
  std::vector<BoundReport> reports;
  if (!a.family_file.empty()) {
    std::ifstream in(a.family_file);
    if (!in) throw std::runtime_error("cannot read '" + a.family_file + "'");
    Family f = family_from_json(Json::parse(in));
    CrossingStats s = crossing_stats(f, g.jobs);
    reports = verify(f, s.crossing, s.max_pair);
  } else {
    if (a.suite.empty()) throw std::invalid_argument("verify needs --suite or --family");
    SuiteOptions opt;
    opt.max_length = a.max_length;
    opt.jobs = g.jobs;
    opt.cuffs = cuff_triple(a.cuffs);
    auto t0 = std::chrono::steady_clock::now();
    reports = run_suite(a.suite, opt);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cerr << "verify " << a.suite << ": " << reports.size() << " checks in " << dt.count() << " s\n";
  }
  emit(g, reports_text(g, reports));
  for (const auto& r : reports)
    if (r.verdict == Verdict::Violated) std::cerr << "violated: " << r.theorem << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
  return all_hold(reports) ? kOk : kViolated;
}

// ---- bounds ----

struct BoundsArgs {
  std::string theorem;
  std::optional<std::uint64_t> m, k, observed;
  std::optional<int> chi, g, n;
  std::optional<double> L;
};

BoundReport evaluate(const BoundsArgs& a) {
  auto need = [](const auto& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("this bound needs --") + name);
    return *v;
  };
  auto chi = [&]() {
    if (a.chi) return *a.chi;
    if (a.g && a.n) return 2 - 2 * *a.g - *a.n;
    throw std::invalid_argument("this bound needs --chi or --genus and --punctures");
  };
  const std::string& t = a.theorem;
  if (t == "curves-lower") return thm_curves_lower(need(a.m, "m"), chi());
  if (t == "graphs-lower") return thm_graphs_lower(need(a.m, "m"), need(a.g, "genus"), need(a.n, "punctures"));
  if (t == "curves-max-size" || t == "arcs-max-size") {
    BoundReport r = size_upper(t == "curves-max-size" ? FamilyKind::Curves : FamilyKind::Arcs, need(a.k, "k"), chi());
    r.inputs.m = a.m;
    return r;
  }
  if (t == "pants-arcs-upper") return construction_uppers(need(a.m, "m"), UpperContext::PantsArcs);
  if (t == "pants-curves-upper") return construction_uppers(need(a.m, "m"), UpperContext::PantsCurves);
  if (t == "sphere-arcs-upper") return construction_uppers(need(a.m, "m"), UpperContext::SphereArcs, need(a.n, "punctures"));
  if (t == "surface-curves-upper") return construction_uppers(need(a.m, "m"), UpperContext::SurfaceCurves, -chi());
  if (t == "geodesic-count") {
    BoundReport r;
    r.theorem = t;
    r.side = BoundSide::Upper;
    r.inputs.g = need(a.g, "genus");
    r.inputs.n = need(a.n, "punctures");
    r.inputs.L = need(a.L, "L");
    r.bound = lemma_buser_bound(*r.inputs.g, *r.inputs.n, *r.inputs.L);
    r.applicable = true;
    r.verdict = Verdict::Holds;
    return r;
  }
  throw UnknownContext("unknown bound '" + t + "'");
}

int cmd_bounds(const Global& g, const BoundsArgs& a) {
  BoundReport r = evaluate(a);
  if (a.observed) {
    r = judge(r, *a.observed);
  } else {
    r.verdict = r.applicable ? Verdict::Holds : Verdict::NotApplicable;
    if (r.applicable && r.side == BoundSide::Lower && r.bound <= 0) r.note = "vacuous";
  }
  emit(g, reports_text(g, {r}));
  return r.verdict == Verdict::Violated ? kViolated : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crosslab: intersection numbers and crossing bounds for curves and arcs on pairs of pants"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  g.jobs = default_jobs();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "Write data to this file instead of stdout");
  app.add_flag("--seedless", g.seedless, "Assert that no randomness is used (every operation is deterministic)");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Census of arcs or curves up to a length");
  en->add_option("--kind", ea.kind)->check(CLI::IsMember({"arcs", "curves"}));
  en->add_option("--max-length", ea.max_length)->required()->check(CLI::PositiveNumber);
  en->add_flag("--spectrum", ea.spectrum, "Curves only: hyperbolic lengths at the given cuff lengths");
  en->add_option("--cuffs", ea.cuffs)->expected(3)->delimiter(',');

  IntersectArgs ia;
  auto* is = app.add_subcommand("intersect", "Intersection numbers of curves, arcs, or a whole census");
  is->add_option("--word", ia.words, "Curve as comma-separated edge labels");
  is->add_option("--start", ia.starts, "Arc start half-edge, e.g. f1");
  is->add_option("--interior", ia.interiors, "Arc interior labels, comma-separated ('-' for none)")->allow_extra_args(false);
  is->add_option("--end", ia.ends, "Arc end half-edge, e.g. b2");
  is->add_flag("--self", ia.self);
  is->add_option("--census", ia.census)->check(CLI::IsMember({"arcs", "curves"}));
  is->add_option("--max-length", ia.max_length)->check(CLI::PositiveNumber);
  is->add_option("--matrix", ia.matrix, "CSV path for the pairwise matrix");
  is->add_flag("--oracle", ia.oracle, "Use the hyperbolic axis-linking oracle");
  is->add_option("--radius", ia.radius, "Oracle search radius (default |u|+|v|+6)");
  is->add_option("--max-radius", ia.max_radius);
  is->add_option("--cuffs", ia.cuffs)->expected(3)->delimiter(',');

  FamilyArgs fa;
  auto* fm = app.add_subcommand("family", "Generate a family of arcs or curves");
  fm->add_option("--construction", fa.construction)
      ->check(CLI::IsMember({"pants-arcs", "cuff-anchored", "pants-curves", "sphere-arcs", "surface-curves"}));
  fm->add_option("--max-length", fa.max_length)->required()->check(CLI::PositiveNumber);
  fm->add_option("--cuff", fa.cuff)->check(CLI::Range(1, 3));
  fm->add_option("--genus", fa.genus)->check(CLI::NonNegativeNumber);
  fm->add_option("--punctures", fa.punctures)->check(CLI::NonNegativeNumber);
  fm->add_option("--anchors", fa.anchors)->delimiter(',');
  fm->add_flag("--crossing", fa.crossing, "Also report size, total crossing and largest pairwise intersection");

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Run a verification suite or audit a family file");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vf->add_option("--suite", va.suite)->check(CLI::IsMember(suites));
  vf->add_option("--max-length", va.max_length)->check(CLI::PositiveNumber);
  vf->add_option("--family", va.family_file, "Family JSON to audit");
  vf->add_option("--cuffs", va.cuffs)->expected(3)->delimiter(',');

  BoundsArgs ba;
  auto* bd = app.add_subcommand("bounds", "Evaluate one bound, optionally against an observed value");
  bd->add_option("--theorem", ba.theorem)
      ->required()
      ->check(CLI::IsMember({"curves-lower", "graphs-lower", "curves-max-size", "arcs-max-size", "pants-arcs-upper",
                             "pants-curves-upper", "sphere-arcs-upper", "surface-curves-upper", "geodesic-count"}));
  bd->add_option("--m", ba.m);
  bd->add_option("--k", ba.k);
  bd->add_option("--chi", ba.chi);
  bd->add_option("--genus", ba.g);
  bd->add_option("--punctures", ba.n);
  bd->add_option("--L", ba.L);
  bd->add_option("--observed", ba.observed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*en) return cmd_enumerate(g, ea);
    if (*is) return cmd_intersect(g, ia);
    if (*fm) return cmd_family(g, fa);
    if (*vf) return cmd_verify(g, va);
    if (*bd) return cmd_bounds(g, ba);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise CROSSLAB_CAP to allow)\n";
    return kCap;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidWord;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
