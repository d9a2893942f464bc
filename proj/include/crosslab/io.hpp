#pragma once

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "crosslab/bounds.hpp"
#include "crosslab/family.hpp"
#include "crosslab/hyperbolic.hpp"
#include "crosslab/pants.hpp"

namespace crosslab {

using Json = nlohmann::ordered_json;

inline Json to_json(const CurveClass& c) {
  Json j;
  j["kind"] = "curve";
  j["word"] = c.word();
  return j;
}

inline Json to_json(const ArcClass& a) {
  Json j;
  j["kind"] = "arc";
  j["start"] = to_string(a.start());
  j["interior"] = a.interior();
  j["end"] = to_string(a.end());
  return j;
}

// "1,2,1,3" -> {1,2,1,3}. The empty string and "-" give the empty word (arc interiors).
inline Word parse_word(std::string_view s) {
  Word w;
  if (s.empty() || s == "-") return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3')
      throw ValidationError(ValidationKind::InvalidLabel, "bad label '" + std::string(tok) + "' in '" + std::string(s) + "'");
    w.push_back(static_cast<Label>(tok[0] - '0'));
    pos = comma + 1;
  }
  return w;
}

inline CurveClass curve_from_json(const Json& j) {
  if (j.value("kind", "") != "curve") throw std::invalid_argument("record is not a curve");
  return make_curve(j.at("word").get<Word>());
}

inline HalfEdge half_edge_from_json(const Json& j) {
  auto h = parse_half_edge(j.get<std::string>());
  if (!h) throw ValidationError(ValidationKind::InvalidHalfEdge, "bad half-edge '" + j.get<std::string>() + "'");
  return *h;
}

inline ArcClass arc_from_json(const Json& j) {
  if (j.value("kind", "") != "arc") throw std::invalid_argument("record is not an arc");
  return make_arc(half_edge_from_json(j.at("start")), j.at("interior").get<Word>(), half_edge_from_json(j.at("end")));
}

// One JSON object per line, then {"kind":"summary","counts":{length: count}}.
template <class T>
void write_census(std::ostream& os, const std::vector<T>& classes) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : classes) {
    os << to_json(c).dump() << '\n';
    ++counts[c.length()];
  }
  Json summary;
  summary["kind"] = "summary";
  summary["counts"] = Json::object();
  for (auto [len, n] : counts) summary["counts"][std::to_string(len)] = n;
  os << summary.dump() << '\n';
}

inline Json to_json(const Family& f) {
  Json j;
  j["surface"] = {{"g", f.surface.genus}, {"n", f.surface.punctures}};
  j["kind"] = to_string(f.kind);
  j["blocks"] = Json::array();
  for (const auto& b : f.blocks) {
    Json jb;
    jb["id"] = b.id;
    jb["classes"] = Json::array();
    if (f.kind == FamilyKind::Arcs)
      for (const auto& a : b.arcs) jb["classes"].push_back(to_json(a));
    else
      for (const auto& c : b.curves) jb["classes"].push_back(to_json(c));
    j["blocks"].push_back(std::move(jb));
  }
  j["construction"] = to_string(f.origin);
  return j;
}

inline Construction construction_from_string(const std::string& s) {
  for (auto c : {Construction::Custom, Construction::PantsArcs, Construction::CuffAnchored, Construction::PantsCurves,
                 Construction::SphereArcs, Construction::SurfaceCurves})
    if (s == to_string(c)) return c;
  throw std::invalid_argument("unknown construction '" + s + "'");
}

inline Family family_from_json(const Json& j) {
  Family f;
  f.surface = {j.at("surface").at("g").get<int>(), j.at("surface").at("n").get<int>()};
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "arcs") f.kind = FamilyKind::Arcs;
  else if (kind == "curves") f.kind = FamilyKind::Curves;
  else throw std::invalid_argument("unknown family kind '" + kind + "'");
  f.origin = construction_from_string(j.value("construction", std::string("custom")));
  for (const auto& jb : j.at("blocks")) {
    Block b;
    b.id = jb.at("id").get<int>();
    for (const auto& c : jb.at("classes")) {
      if (f.kind == FamilyKind::Arcs) b.arcs.push_back(arc_from_json(c));
      else b.curves.push_back(curve_from_json(c));
    }
    f.blocks.push_back(std::move(b));
  }
  validate(f);
  return f;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string format_double(double v, const char* fmt = "%.12f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Symmetric matrix with a header row of class labels; the diagonal holds 2 * self-intersection.
inline void write_matrix_csv(std::ostream& os, const std::vector<std::string>& labels,
                             const std::vector<std::vector<std::uint64_t>>& mat) {
  const std::size_t n = labels.size();
  if (mat.size() != n) throw std::invalid_argument("matrix size does not match labels");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mat[i][j] != mat[j][i]) throw std::logic_error("intersection matrix is not symmetric");
  os << "class";
  for (const auto& l : labels) os << ',' << csv_field(l);
  os << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << csv_field(labels[i]);
    for (std::size_t j = 0; j < n; ++j) os << ',' << mat[i][j];
    os << '\n';
  }
}

inline void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& spectrum) {
  os << "word,combinatorial_length,hyperbolic_length\n";
  for (const auto& e : spectrum)
    os << csv_field(word_to_string(e.curve.word())) << ',' << e.curve.length() << ',' << format_double(e.length) << '\n';
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["side"] = to_string(r.side);
  Json in = Json::object();
  if (r.inputs.m) in["m"] = *r.inputs.m;
  if (r.inputs.g) in["g"] = *r.inputs.g;
  if (r.inputs.n) in["n"] = *r.inputs.n;
  if (r.inputs.chi) in["chi"] = *r.inputs.chi;
  if (r.inputs.k) in["k"] = *r.inputs.k;
  if (r.inputs.L) in["L"] = *r.inputs.L;
  j["inputs"] = std::move(in);
  j["bound"] = r.bound;
  j["observed"] = r.observed ? Json(*r.observed) : Json(nullptr);
  j["applicable"] = r.applicable;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const std::vector<BoundReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

inline std::string reports_table(const std::vector<BoundReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"check", "side", "inputs", "bound", "observed", "verdict", "note"}};
  for (const auto& r : reports) {
    std::string in;
    auto add = [&](const char* k, const std::string& v) { in += (in.empty() ? "" : " ") + std::string(k) + "=" + v; };
    if (r.inputs.m) add("m", std::to_string(*r.inputs.m));
    if (r.inputs.g) add("g", std::to_string(*r.inputs.g));
    if (r.inputs.n) add("n", std::to_string(*r.inputs.n));
    if (r.inputs.chi) add("chi", std::to_string(*r.inputs.chi));
    if (r.inputs.k) add("k", std::to_string(*r.inputs.k));
    if (r.inputs.L) add("L", format_double(*r.inputs.L, "%g"));
    rows.push_back({r.theorem, to_string(r.side), in, format_double(r.bound, "%.6g"),
                    r.observed ? std::to_string(*r.observed) : "-", to_string(r.verdict), r.note});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace crosslab
