#include "infgon/json_io.hpp"

#include <fstream>
#include <sstream>

namespace infgon {

const char* const kFormatTag = "infgon/1";

Json arc_to_json(const Arc& arc) {
  Json j = Json::array();
  j.push_back(arc.a);
  if (arc.has_infinite_end())
    j.push_back("inf");
  else
    j.push_back(arc.b_int());
  return j;
}

Arc arc_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorCode::ParseError, "arc must be a two-element array", j.dump());
  if (!j[0].is_number_integer())
    fail(ErrorCode::ParseError, "arc left endpoint must be an integer", j.dump());
  const std::int64_t a = j[0].get<std::int64_t>();
  if (j[1].is_string()) {
    if (j[1].get<std::string>() != "inf")
      fail(ErrorCode::ParseError, "arc right endpoint must be an integer or \"inf\"",
           j.dump());
    return Arc::infinite(a);
  }
  if (!j[1].is_number_integer())
    fail(ErrorCode::ParseError, "arc right endpoint must be an integer or \"inf\"",
         j.dump());
  return Arc(a, MarkedPoint(j[1].get<std::int64_t>()));
}

Json window_to_json(const TriangulationWindow& w) {
  Json j;
  j["format"] = kFormatTag;
  j["lo"] = w.lo;
  j["hi"] = w.hi;
  if (w.fountain) j["fountain"] = *w.fountain;
  Json arcs = Json::array();
  for (const Arc& arc : w.arcs) arcs.push_back(arc_to_json(arc));
  j["arcs"] = arcs;
  return j;
}

TriangulationWindow window_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || !j.contains("arcs"))
    fail(ErrorCode::ParseError, "window needs lo, hi and arcs");
  std::set<Arc> arcs;
  for (const Json& item : j.at("arcs")) arcs.insert(arc_from_json(item));
  std::optional<std::int64_t> fountain;
  if (j.contains("fountain") && !j.at("fountain").is_null())
    fountain = j.at("fountain").get<std::int64_t>();
  return make_window(j.at("lo").get<std::int64_t>(), j.at("hi").get<std::int64_t>(),
                     std::move(arcs), fountain);
}

Json word_to_json(const BinarySeq& s) {
  Json j;
  j["word"] = s.str();
  j["origin"] = s.origin;
  return j;
}

BinarySeq word_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("word"))
    fail(ErrorCode::ParseError, "01-word needs a \"word\" field");
  std::int64_t origin = 1;
  if (j.contains("origin")) origin = j.at("origin").get<std::int64_t>();
  return BinarySeq::from_string(j.at("word").get<std::string>(), origin);
}

namespace {

std::string bigint_str(const BigInt& v) { return v.str(); }

Json frieze_header(FriezeKind kind, std::int64_t param, std::int64_t lo,
                   std::int64_t hi) {
  Json j;
  j["format"] = kFormatTag;
  j["kind"] = to_string(kind);
  j["at"] = param;
  j["lo"] = lo;
  j["hi"] = hi;
  return j;
}

}  // namespace

Json frieze_to_json(const IntFrieze& f) {
  Json j = frieze_header(f.kind(), f.param(), f.lo(), f.hi());
  Json entries = Json::array();
  for (const auto& [key, value] : f.entries()) {
    Json e = Json::array();
    e.push_back(key.first);
    e.push_back(key.second);
    e.push_back(bigint_str(value));
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

IntFrieze frieze_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("entries"))
    fail(ErrorCode::ParseError, "frieze needs kind and entries");
  const std::string kind_name = j.at("kind").get<std::string>();
  FriezeKind kind;
  if (kind_name == "cc")
    kind = FriezeKind::FiniteCC;
  else if (kind_name == "right_half")
    kind = FriezeKind::RightHalf;
  else if (kind_name == "left_half")
    kind = FriezeKind::LeftHalf;
  else if (kind_name == "fountain")
    kind = FriezeKind::Fountain;
  else
    fail(ErrorCode::ParseError, "unknown frieze kind", kind_name);

  IntFrieze f(kind, j.at("at").get<std::int64_t>(), j.at("lo").get<std::int64_t>(),
              j.at("hi").get<std::int64_t>());
  for (const Json& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      fail(ErrorCode::ParseError, "frieze entry must be [a,b,value]");
    f.set(e[0].get<std::int64_t>(), e[1].get<std::int64_t>(),
          BigInt(e[2].get<std::string>()));
  }
  return f;
}

Json poly_to_json(const LaurentPoly& p) {
  Json j;
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json vars = Json::array();
    for (const auto& [v, e] : mono) {
      Json entry = arc_to_json(v);
      entry.push_back(e);
      vars.push_back(entry);
    }
    Json term = Json::array();
    term.push_back(vars);
    term.push_back(bigint_str(coeff));
    terms.push_back(term);
  }
  j["terms"] = terms;
  j["text"] = p.str();
  return j;
}

Json poly_frieze_to_json(const PolyFrieze& f, bool specialize_ones) {
  Json j = frieze_header(f.kind(), f.param(), f.lo(), f.hi());
  Json entries = Json::array();
  for (const auto& [key, value] : f.entries()) {
    Json e = Json::array();
    e.push_back(key.first);
    e.push_back(key.second);
    if (specialize_ones)
      e.push_back(bigint_str(value.specialize_ones()));
    else
      e.push_back(poly_to_json(value));
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

Json module_to_json(const GradedModuleDesc& desc) {
  Json j;
  switch (desc.variant) {
    case ModuleVariant::Projective: j["variant"] = "projective"; break;
    case ModuleVariant::Ideal:
      j["variant"] = "ideal";
      j["k"] = desc.k;
      break;
    case ModuleVariant::Cy: j["variant"] = "cy"; break;
  }
  j["j"] = desc.j;
  j["text"] = desc.str();
  return j;
}

GradedModuleDesc module_from_json(const Json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  const std::int64_t shift = j.at("j").get<std::int64_t>();
  if (variant == "projective") return GradedModuleDesc::projective(shift);
  if (variant == "cy") return GradedModuleDesc::cy(shift);
  if (variant == "ideal")
    return GradedModuleDesc::ideal(j.at("k").get<std::int64_t>(), shift);
  fail(ErrorCode::ParseError, "unknown module variant", variant);
}

namespace {

std::string mono_xy_str(const MonoXY& m) {
  if (m.coeff == 0) return "0";
  std::string s;
  std::int64_t c = m.coeff;
  if (c == -1)
    s = "-";
  else if (c != 1)
    s = std::to_string(c);
  if (m.xdeg == 0 && m.ydeg == 0) {
    if (c == 1) return "1";
    if (c == -1) return "-1";
    return s;
  }
  if (m.xdeg > 0) {
    s += "x";
    if (m.xdeg > 1) s += "^" + std::to_string(m.xdeg);
  }
  if (m.ydeg > 0) {
    s += "y";
    if (m.ydeg > 1) s += "^" + std::to_string(m.ydeg);
  }
  return s;
}

}  // namespace

Json factorization_to_json(const MatrixFactorization& mf) {
  Json j;
  j["size"] = mf.size;
  Json a = Json::array(), b = Json::array();
  for (int r = 0; r < mf.size; ++r) {
    Json ra = Json::array(), rb = Json::array();
    for (int c = 0; c < mf.size; ++c) {
      ra.push_back(mono_xy_str(mf.A[r][c]));
      rb.push_back(mono_xy_str(mf.B[r][c]));
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  j["A"] = a;
  j["B"] = b;
  Json src = Json::array(), mid = Json::array(), tgt = Json::array();
  for (int i = 0; i < mf.size; ++i) {
    src.push_back(mf.twist_src[i]);
    mid.push_back(mf.twist_mid[i]);
    tgt.push_back(mf.twist_tgt[i]);
  }
  j["twists"] = Json{{"source", src}, {"middle", mid}, {"target", tgt}};
  return j;
}

Json crossing_string_to_json(const CrossingString& cs) {
  Json j;
  j["arc"] = arc_to_json(cs.gamma);
  Json crossed = Json::array();
  for (const Arc& arc : cs.crossed) crossed.push_back(arc_to_json(arc));
  j["crossed"] = crossed;
  Json sides = Json::array();
  for (std::size_t i = 0; i < cs.sides.size(); ++i) {
    Json s;
    s["side"] = to_string(cs.sides[i]);
    s["shared"] = cs.shared[i];
    sides.push_back(s);
  }
  j["sides"] = sides;
  return j;
}

TriangulationWindow load_window(const std::string& path) {
  return window_from_json(load_json(path));
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open file", path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, e.what(), path);
  }
  return j;
}

}  // namespace infgon
