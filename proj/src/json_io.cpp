#include "hkd/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hkd/errors.hpp"

namespace hkd::io {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Rational rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json poly_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

Polynomial poly_from(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(rational(c));
  return Polynomial(std::move(cs));
}

Point point_from(const Json& j) {
  if (!j.is_array()) throw ParseError("lattice point must be an integer array");
  Point p;
  for (const auto& v : j) p.push_back(v.get<long>());
  return p;
}

Json quad_json(const QuadNumber& q) {
  if (q.root_part().is_zero()) return q.rational_part().str();
  return Json::array({q.rational_part().str(), q.root_part().str(), q.radicand().str()});
}

QuadNumber quad_from(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 3) throw ParseError("quadratic coefficient needs [a, b, D]");
    return QuadNumber(rational(j[0]), rational(j[1]), rational(j[2]));
  }
  return QuadNumber(rational(j));
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PiecewisePoly& f) {
  Json j;
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(poly_json(p));
  j["breakpoints"] = std::move(bps);
  j["pieces"] = std::move(pieces);
  j["tail"] = f.tail() ? poly_json(*f.tail()) : Json(nullptr);
  return j;
}

PiecewisePoly piecewise_from_json(const Json& j) {
  return guarded("piecewise polynomial", [&] {
    std::vector<Rational> bps;
    for (const auto& b : member(j, "breakpoints")) bps.push_back(rational(b));
    std::vector<Polynomial> pieces;
    for (const auto& p : member(j, "pieces")) pieces.push_back(poly_from(p));
    std::optional<Polynomial> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) tail = poly_from(j.at("tail"));
    return PiecewisePoly(std::move(bps), std::move(pieces), std::move(tail));
  });
}

PiecewisePoly density_from_json(const Json& j) {
  if (j.is_object() && !j.contains("breakpoints") && j.contains("f")) return piecewise_from_json(j.at("f"));
  return piecewise_from_json(j);
}

Json to_json(const BettiTable& t) {
  Json rows = Json::array();
  for (const auto& [key, count] : t.entries()) {
    if (key.first == 0) continue;
    rows.push_back({{"i", key.first}, {"j", key.second}, {"b", count}});
  }
  return {{"d", t.length()}, {"betti", rows}};
}

BettiTable betti_from_json(const Json& j) {
  return guarded("Betti table", [&] {
    std::vector<BettiEntry> entries;
    for (const auto& e : member(j, "betti")) {
      entries.push_back({member(e, "i").get<int>(), member(e, "j").get<long>(), member(e, "b").get<long>()});
    }
    return BettiTable(member(j, "d").get<int>(), entries);
  });
}

Json to_json(const DensityPair& pair) { return {{"d", pair.d}, {"F", to_json(pair.F)}, {"f", to_json(pair.f)}}; }

DensityPair pair_from_json(const Json& j) {
  return guarded("density pair", [&] {
    DensityPair p;
    p.d = member(j, "d").get<int>();
    p.F = piecewise_from_json(member(j, "F"));
    p.f = piecewise_from_json(member(j, "f"));
    return p;
  });
}

Json to_json(const HNData& data) {
  Json comps = Json::array();
  for (const auto& c : data.components) comps.push_back({{"slope", c.slope.str()}, {"rank", c.rank}});
  return {{"d", data.d}, {"components", comps}};
}

HNData hn_from_json(const Json& j) {
  return guarded("HN data", [&] {
    HNData data;
    data.d = member(j, "d").get<long>();
    for (const auto& c : member(j, "components")) {
      data.components.push_back({rational(member(c, "slope")), member(c, "rank").get<long>()});
    }
    return data;
  });
}

std::optional<std::vector<long>> twists_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("twists")) return std::nullopt;
  return guarded("twists", [&] { return j.at("twists").get<std::vector<long>>(); });
}

Json to_json(const LatticeSpec& spec) {
  const auto& s = spec.semigroup;
  return {{"semigroup", {{"rank", s.rank}, {"gens", s.generators}, {"weights", s.weights}, {"p", s.p}}},
          {"ideal", {{"gens", spec.ideal.generators}}}};
}

SemigroupSpec semigroup_from_json(const Json& s) {
  return guarded("semigroup", [&] {
    SemigroupSpec out;
    out.rank = member(s, "rank").get<int>();
    for (const auto& g : member(s, "gens")) out.generators.push_back(point_from(g));
    out.weights = member(s, "weights").get<std::vector<long>>();
    if (s.contains("p")) out.p = s.at("p").get<long>();
    return out;
  });
}

LatticeSpec lattice_spec_from_json(const Json& j) {
  return guarded("semigroup spec", [&] {
    LatticeSpec out;
    out.semigroup = semigroup_from_json(member(j, "semigroup"));
    for (const auto& g : member(member(j, "ideal"), "gens")) out.ideal.generators.push_back(point_from(g));
    return out;
  });
}

GradedRingSpec ring_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& r = j.is_object() && j.contains("ring") ? j.at("ring") : j;
  const auto type = guarded("ring", [&] { return member(r, "type").get<std::string>(); });
  if (type == "ci") {
    auto [gens, rels] = guarded("ring", [&] {
      return std::pair{member(r, "gens").get<std::vector<long>>(),
                       r.contains("rels") ? r.at("rels").get<std::vector<long>>() : std::vector<long>{}};
    });
    return GradedRingSpec::complete_intersection(std::move(gens), std::move(rels));
  }
  if (type == "semigroup") {
    // a referenced file may be a full lattice spec; an inline ring carries the semigroup fields itself
    Json body = r.contains("ref") ? read_file(base_dir / guarded("ring", [&] { return r.at("ref").get<std::string>(); })) : r;
    if (body.contains("semigroup")) body = body.at("semigroup");
    return GradedRingSpec::semigroup(semigroup_from_json(body));
  }
  if (type == "polynomial") {
    return GradedRingSpec::polynomial_ring(guarded("ring", [&] { return member(r, "d").get<int>(); }));
  }
  throw ParseError("unknown ring type '" + type + "'");
}

Json to_json(const HbMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json cols = Json::array();
    for (const auto& entry : row) {
      Json terms = Json::array();
      for (const auto& [e, c] : entry.terms()) terms.push_back(Json::array({e.first, e.second, quad_json(c)}));
      cols.push_back(std::move(terms));
    }
    rows.push_back(std::move(cols));
  }
  return rows;
}

HbMatrix hb_matrix_from_json(const Json& j) {
  return guarded("Hilbert-Burch matrix", [&] {
    if (!j.is_array() || j.size() != 2) throw ParseError("matrix must have 2 rows");
    HbMatrix m;
    for (std::size_t r = 0; r < 2; ++r) {
      if (!j[r].is_array() || j[r].size() != 3) throw ParseError("matrix rows must have 3 entries");
      for (std::size_t c = 0; c < 3; ++c) {
        BivariatePoly p;
        for (const auto& t : j[r][c]) {
          if (!t.is_array() || t.size() != 3) throw ParseError("matrix terms are [a, b, coef]");
          p += BivariatePoly::term(quad_from(t[2]), t[0].get<int>(), t[1].get<int>());
        }
        m[r][c] = std::move(p);
      }
    }
    return m;
  });
}

Json to_json(const SupDistance& d) {
  return {{"value", d.value.str()}, {"decimal", d.value.decimal()}, {"exact", d.exact}};
}

Json to_json(const CatalogVerdict& v) {
  Json j;
  j["ehk"] = v.ehk.str();
  j["rank"] = v.rank;
  j["l0"] = v.l0;
  j["two_minus_inverse_rank"] = v.two_minus_inverse_rank;
  j["ehk_vs_printed"] = to_string(v.ehk_vs_printed);
  j["table_vs_printed"] = to_string(v.table_vs_printed);
  j["table_distance"] = v.table_distance ? to_json(*v.table_distance) : Json(nullptr);
  j["rank_vs_group_order"] = to_string(v.rank_vs_group_order);
  j["notes"] = v.notes;
  return j;
}

}  // namespace hkd::io
