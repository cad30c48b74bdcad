#include "egpkit/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "egpkit/errors.hpp"

namespace egp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void expect_kind(const Json& j, const std::string& where, const char* kind) {
  const Json& k = field(j, where, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    fail(where + "/kind", std::string("expected kind '") + kind + "'");
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  try {
    return parse_rational(string_at(j, where));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

ExtendedValue value_at(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedValue::infinity();
  return rational_at(j, where);
}

GroundSet ground_at(const Json& j, const std::string& where) {
  std::vector<std::string> labels;
  const Json& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) labels.push_back(string_at(a[i], where + "/" + std::to_string(i)));
  try {
    return GroundSet(std::move(labels));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

Mask subset_at(const GroundSet& g, const Json& j, const std::string& where) {
  Mask m = 0;
  const Json& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string label = string_at(a[i], where + "/" + std::to_string(i));
    if (!g.has(label)) fail(where + "/" + std::to_string(i), "unknown label '" + label + "'");
    Mask bit = Mask{1} << g.index_of(label);
    if (m & bit) fail(where + "/" + std::to_string(i), "repeated label '" + label + "'");
    m |= bit;
  }
  return m;
}

Json labels_json(const GroundSet& g, Mask m) { return Json(g.labels_of(m)); }

}  // namespace

Json to_json(const SubmodFn& z) {
  Json finite = Json::array();
  // Sets by size, then by mask, so small sets come first.
  std::vector<Mask> sets;
  for (Mask m = 1; m <= z.full(); ++m)
    if (z.finite_at(m)) sets.push_back(m);
  std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  for (Mask m : sets) finite.push_back({{"set", labels_json(z.ground(), m)}, {"value", z(m).str()}});
  return {{"kind", "submodfn"}, {"ground", z.ground().labels()}, {"finite", finite}};
}

SubmodFn submodfn_from_json(const Json& j) {
  expect_kind(j, "", "submodfn");
  GroundSet g = ground_at(field(j, "", "ground"), "/ground");
  std::vector<std::pair<Mask, ExtendedValue>> entries;
  const Json& finite = array_at(field(j, "", "finite"), "/finite");
  for (std::size_t i = 0; i < finite.size(); ++i) {
    std::string at = "/finite/" + std::to_string(i);
    Mask m = subset_at(g, field(finite[i], at, "set"), at + "/set");
    ExtendedValue v = value_at(field(finite[i], at, "value"), at + "/value");
    if (v.is_infinite()) fail(at + "/value", "only finite values are listed");
    entries.emplace_back(m, v);
  }
  try {
    return SubmodFn::from_finite(g, entries);
  } catch (const ValidationError& e) {
    fail("/finite", e.what());
  }
}

Json to_json(const Preorder& p) {
  Json rel = Json::array();
  for (const auto& [x, y] : p.relations()) rel.push_back({x, y});
  return {{"kind", "preorder"}, {"ground", p.ground().labels()}, {"relations", rel}};
}

Preorder preorder_from_json(const Json& j) {
  expect_kind(j, "", "preorder");
  GroundSet g = ground_at(field(j, "", "ground"), "/ground");
  std::vector<std::pair<std::string, std::string>> pairs;
  const Json& rel = array_at(field(j, "", "relations"), "/relations");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::string at = "/relations/" + std::to_string(i);
    if (!rel[i].is_array() || rel[i].size() != 2) fail(at, "expected a pair of labels");
    std::string x = string_at(rel[i][0], at + "/0"), y = string_at(rel[i][1], at + "/1");
    if (!g.has(x)) fail(at + "/0", "unknown label '" + x + "'");
    if (!g.has(y)) fail(at + "/1", "unknown label '" + y + "'");
    pairs.emplace_back(x, y);
  }
  return Preorder::from_relations(g, pairs);
}

Json to_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"kind", "polynomial"}, {"coeffs", coeffs}};
}

RationalPoly polynomial_from_json(const Json& j) {
  expect_kind(j, "", "polynomial");
  const Json& a = array_at(field(j, "", "coeffs"), "/coeffs");
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < a.size(); ++i) cs.push_back(rational_at(a[i], "/coeffs/" + std::to_string(i)));
  return RationalPoly(std::move(cs));
}

Json to_json(const FaceLattice& l) {
  Json faces = Json::array();
  for (const auto& f : l.faces) faces.push_back({{"preorder", to_json(f.preorder)}, {"dim", f.dim}});
  Json covers = Json::array();
  for (const auto& [i, j] : l.covers) covers.push_back({i, j});
  return {{"kind", "facelattice"}, {"function", to_json(l.z)}, {"faces", faces},
          {"covers", covers}, {"f_vector", l.f_vector()}};
}

FaceLattice facelattice_from_json(const Json& j) {
  expect_kind(j, "", "facelattice");
  FaceLattice l;
  try {
    l.z = submodfn_from_json(field(j, "", "function"));
  } catch (const ValidationError& e) {
    fail("/function", e.what());
  }
  const Json& faces = array_at(field(j, "", "faces"), "/faces");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::string at = "/faces/" + std::to_string(i);
    Preorder p;
    try {
      p = preorder_from_json(field(faces[i], at, "preorder"));
    } catch (const ValidationError& e) {
      fail(at + "/preorder", e.what());
    }
    if (p.ground() != l.z.ground()) fail(at + "/preorder", "ground differs from the function's");
    if (!is_conforming(p, l.z)) fail(at + "/preorder", "preorder does not conform to the function");
    const Json& dim = field(faces[i], at, "dim");
    int d = static_cast<int>(p.size() - bubbles(p).size());
    if (!dim.is_number_integer() || dim.get<int>() != d) fail(at + "/dim", "dimension must be " + std::to_string(d));
    l.faces.push_back(Face{p, d, face_fn(l.z, p)});
  }
  const int n = static_cast<int>(l.faces.size());
  const Json& covers = array_at(field(j, "", "covers"), "/covers");
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < covers.size(); ++i) {
    std::string at = "/covers/" + std::to_string(i);
    const Json& c = covers[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      fail(at, "expected a pair of face indices");
    int a = c[0].get<int>(), b = c[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) fail(at, "face index out of range");
    l.covers.emplace_back(a, b);
    below[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (below[a][k] && below[k][b]) below[a][b] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (below[a][b]) l.order.emplace_back(a, b);
  return l;
}

namespace {

Json factor_json(const Factor& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

Factor factor_from_json(const Json& j, const std::string& where) {
  try {
    std::string kind = kind_of(j);
    if (kind == "submodfn") return submodfn_from_json(j);
    if (kind == "preorder") return preorder_from_json(j);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  fail(where + "/kind", "tensor factors are submodfn or preorder documents");
}

}  // namespace

Json to_json(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& [key, e] : s.entries()) {
    Json factors = Json::array();
    for (const auto& f : e.term) factors.push_back(factor_json(f));
    terms.push_back({{"coeff", to_string(e.coeff)}, {"factors", factors}});
  }
  return {{"kind", "formalsum"}, {"terms", terms}};
}

FormalSum formalsum_from_json(const Json& j) {
  expect_kind(j, "", "formalsum");
  FormalSum s;
  const Json& terms = array_at(field(j, "", "terms"), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = "/terms/" + std::to_string(i);
    Rational c = rational_at(field(terms[i], at, "coeff"), at + "/coeff");
    const Json& fs = array_at(field(terms[i], at, "factors"), at + "/factors");
    Term t;
    for (std::size_t k = 0; k < fs.size(); ++k) t.push_back(factor_from_json(fs[k], at + "/factors/" + std::to_string(k)));
    s.add(std::move(t), c);
  }
  return s;
}

std::string kind_of(const Json& j) { return string_at(field(j, "", "kind"), "/kind"); }

Document parse_document(const Json& j) {
  std::string kind = kind_of(j);
  if (kind == "submodfn") return submodfn_from_json(j);
  if (kind == "preorder") return preorder_from_json(j);
  if (kind == "polynomial") return polynomial_from_json(j);
  if (kind == "facelattice") return facelattice_from_json(j);
  if (kind == "formalsum") return formalsum_from_json(j);
  fail("/kind", "unknown document kind '" + kind + "'");
}

Document parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

Json to_json(const Document& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

std::string to_text(const SubmodFn& z) { return format_table(z); }

std::string to_text(const FaceLattice& l) {
  std::ostringstream os;
  auto fv = l.f_vector();
  os << "f-vector:";
  for (std::size_t i = 0; i < fv.size(); ++i) os << (i ? "," : " ") << fv[i];
  os << '\n';
  for (std::size_t i = 0; i < l.faces.size(); ++i)
    os << i << "  dim " << l.faces[i].dim << "  " << l.faces[i].preorder.format() << '\n';
  os << "covers:";
  for (const auto& [a, b] : l.covers) os << ' ' << a << "<" << b;
  return os.str();
}

std::string binomial_text(const RationalPoly& p) {
  auto cs = p.binomial_basis();
  std::string out;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] == 0) continue;
    Rational mag = cs[j] < 0 ? Rational(-cs[j]) : cs[j];
    if (out.empty()) out += cs[j] < 0 ? "-" : "";
    else out += cs[j] < 0 ? " - " : " + ";
    if (mag != 1) out += mag.str() + "*";
    out += "C(k," + std::to_string(j) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const RationalPoly& p) { return p.to_string() + "\n= " + binomial_text(p); }

}  // namespace egp
