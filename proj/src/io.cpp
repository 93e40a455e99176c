#include "reslie/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "reslie/catalog.hpp"

namespace reslie::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

std::size_t parse_index(const json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
  const auto v = j.get<unsigned long long>();
  if (v >= bound) throw SchemaError(path, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t parse_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar parse_scalar(const json& j, const Field& f, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer scalar");
  const auto v = j.get<unsigned long long>();
  if (!f.contains(v))
    throw SchemaError(path, "scalar " + std::to_string(v) + " out of range for GF(2^" + std::to_string(f.degree()) + ")");
  return static_cast<Scalar>(v);
}

const json& require_array(const json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (len != SIZE_MAX && j.size() != len)
    throw SchemaError(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  return j;
}

Vec parse_vec(const json& j, const Field& f, std::size_t n, const std::string& path) {
  require_array(j, n, path);
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_scalar(j[i], f, child(path, i));
  return v;
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& path) {
  require_array(j, rows, path);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = parse_vec(j[r], f, cols, child(path, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Field parse_field(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const json& kj = require(j, "k", path);
  if (!kj.is_number_integer() || kj.get<long long>() < 1 || kj.get<long long>() > 16)
    throw SchemaError(child(path, "k"), "k must be an integer in [1, 16]");
  const int k = kj.get<int>();
  auto it = j.find("modulus");
  if (it == j.end() || k == 1) return Field(k);
  std::uint32_t modulus = 0;
  const std::string mpath = child(path, "modulus");
  if (it->is_number_integer() && it->get<long long>() >= 0) {
    modulus = it->get<std::uint32_t>();
  } else if (it->is_array()) {
    if (it->size() > 17) throw SchemaError(mpath, "modulus has too many coefficients");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& b = (*it)[i];
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
        throw SchemaError(child(mpath, i), "expected a bit (0 or 1)");
      modulus |= static_cast<std::uint32_t>(b.get<int>()) << i;
    }
  } else {
    throw SchemaError(mpath, "expected an integer or a list of bits");
  }
  try {
    return Field(k, modulus);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(mpath, e.what());
  }
}

ResLieDerPair parse_pair(const json& j, const Field& f, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  ResLieDerPair p;
  if (auto it = j.find("catalog"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(child(path, "catalog"), "expected a string");
    try {
      p = catalog(it->get<std::string>(), f);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(child(path, "catalog"), e.what());
    }
  } else {
    const std::size_t n = parse_count(require(j, "dim", path), child(path, "dim"));
    if (n == 0) throw SchemaError(child(path, "dim"), "dimension must be positive");
    RestrictedLieAlgebra a(f, n);
    if (auto it = j.find("bracket"); it != j.end()) {
      const std::string bpath = child(path, "bracket");
      require_array(*it, SIZE_MAX, bpath);
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t e = 0; e < it->size(); ++e) {
        const json& entry = (*it)[e];
        const std::string epath = child(bpath, e);
        const std::size_t i = parse_index(require(entry, "i", epath), n, child(epath, "i"));
        const std::size_t jj = parse_index(require(entry, "j", epath), n, child(epath, "j"));
        if (i == jj) throw SchemaError(epath, "bracket entry with i = j (the bracket is alternating)");
        if (i > jj) throw SchemaError(epath, "bracket entries need i < j");
        if (!seen.insert({i, jj}).second) throw SchemaError(epath, "duplicate bracket entry");
        a.set_bracket(i, jj, parse_vec(require(entry, "value", epath), f, n, child(epath, "value")));
      }
    }
    if (auto it = j.find("square"); it != j.end()) {
      const Matrix q = parse_matrix(*it, f, n, n, child(path, "square"));
      for (std::size_t r = 0; r < n; ++r) a.set_square(r, Vec(q.row(r).begin(), q.row(r).end()));
    }
    p = with_zero_derivation(std::move(a));
  }
  if (auto it = j.find("derivation"); it != j.end())
    p.derivation = parse_matrix(*it, f, p.dim(), p.dim(), child(path, "derivation"));
  return p;
}

RestrictedRepresentation parse_representation(const json& j, const ResLieDerPair& p, const std::string& path,
                                              bool& adjoint) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "trivial") return bundled_representation(p, BundledRep::trivial);
    if (s == "adjoint") {
      adjoint = true;
      return {};
    }
    throw SchemaError(path, "unknown representation '" + s + "' (expected trivial, adjoint or an object)");
  }
  const Field& f = p.field();
  RestrictedRepresentation r;
  r.dim = parse_count(require(j, "dim", path), child(path, "dim"));
  const json& rho = require_array(require(j, "rho", path), p.dim(), child(path, "rho"));
  for (std::size_t a = 0; a < p.dim(); ++a) r.rho.push_back(parse_matrix(rho[a], f, r.dim, r.dim, child(child(path, "rho"), a)));
  if (auto it = j.find("eta"); it != j.end())
    r.eta = parse_matrix(*it, f, r.dim, r.dim, child(path, "eta"));
  else
    r.eta = Matrix(f, r.dim, r.dim);
  return r;
}

DeformationTerm parse_term(const json& j, const Field& f, std::size_t n, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  DeformationTerm t = zero_term(f, n);
  if (auto it = j.find("mu"); it != j.end()) {
    const std::string mpath = child(path, "mu");
    require_array(*it, SIZE_MAX, mpath);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string epath = child(mpath, e);
      const json& entry = require_array((*it)[e], 3, epath);
      const std::size_t a = parse_index(entry[0], n, child(epath, 0));
      const std::size_t b = parse_index(entry[1], n, child(epath, 1));
      if (a >= b) throw SchemaError(epath, "mu entries need a < b");
      if (!seen.insert({a, b}).second) throw SchemaError(epath, "duplicate mu entry");
      const Vec v = parse_vec(entry[2], f, n, child(epath, 2));
      t.mu[a * n + b] = v;
      t.mu[b * n + a] = v;
    }
  }
  if (auto it = j.find("sigma"); it != j.end()) {
    const Matrix s = parse_matrix(*it, f, n, n, child(path, "sigma"));
    for (std::size_t a = 0; a < n; ++a) t.sigma[a] = Vec(s.row(a).begin(), s.row(a).end());
  }
  if (auto it = j.find("D"); it != j.end()) t.D = parse_matrix(*it, f, n, n, child(path, "D"));
  return t;
}

TruncatedDeformation parse_deformation(const json& j, const ResLieDerPair& p, const std::string& path) {
  const std::size_t order = parse_count(require(j, "order", path), child(path, "order"));
  const std::string tpath = child(path, "terms");
  const json& terms = require_array(require(j, "terms", path), SIZE_MAX, tpath);
  if (terms.size() != order && terms.size() != order + 1)
    throw SchemaError(tpath, "expected " + std::to_string(order) + " or " + std::to_string(order + 1) + " terms");
  TruncatedDeformation d;
  if (terms.size() == order) d.terms.push_back(base_term(p));
  for (std::size_t i = 0; i < terms.size(); ++i) d.terms.push_back(parse_term(terms[i], p.field(), p.dim(), child(tpath, i)));
  return d;
}

std::string read_file(const std::filesystem::path& path, const std::string& where) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(where, "cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(name, std::string("malformed JSON: ") + e.what());
  }
}

// An inline algebra document or a path to one; the outer field applies when
// the referenced document has none.
ResLieDerPair parse_pair_ref(const json& j, const Field& f, const std::string& path, const std::filesystem::path& base,
                             std::vector<std::string>& sources) {
  if (!j.is_string()) {
    const Field own = j.is_object() && j.contains("field") ? parse_field(j["field"], child(path, "field")) : f;
    return parse_pair(j, own, path);
  }
  const std::filesystem::path file = base / j.get<std::string>();
  const std::string text = read_file(file, path);
  sources.push_back(text);
  const json doc = parse_json_text(text, file.string());
  const Field own = doc.is_object() && doc.contains("field") ? parse_field(doc["field"], file.string() + ":/field") : f;
  return parse_pair(doc, own, file.string() + ":");
}

std::shared_ptr<const SubsetIndex> subsets_for(std::size_t n) { return std::make_shared<const SubsetIndex>(n); }

PairCochain parse_pair_cochain(const json& j, std::size_t n, std::size_t h, const Field& f, const std::string& path) {
  const auto subsets = subsets_for(n);
  PairCochain c;
  c.top = parse_cochain(j, CochainShape(subsets, h, 2), f, path);
  const CochainShape low(subsets, h, 1);
  if (auto it = j.find("low"); it != j.end())
    c.low = parse_cochain(*it, low, f, child(path, "low"));
  else
    c.low = Cochain{1, Vec(low.size(), 0)};
  return c;
}

std::vector<std::size_t> parse_tuple(const json& j, std::size_t size, std::size_t n, const std::string& path) {
  require_array(j, size, path);
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < size; ++i) {
    t.push_back(parse_index(j[i], n, child(path, i)));
    if (i > 0 && t[i] <= t[i - 1]) throw SchemaError(path, "indices must be strictly increasing");
  }
  return t;
}

json field_json(const Field& f) {
  json j;
  j["k"] = f.degree();
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

}  // namespace

Cochain parse_cochain(const json& j, const CochainShape& shape, const Field& f, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const std::size_t deg = shape.degree(), n = shape.algebra_dim(), m = shape.module_dim();
  if (auto it = j.find("degree"); it != j.end() && parse_count(*it, child(path, "degree")) != deg)
    throw SchemaError(child(path, "degree"), "expected degree " + std::to_string(deg));
  Cochain c{deg, Vec(shape.size(), 0)};
  std::set<std::size_t> seen;
  const auto put = [&](std::size_t idx, Scalar s, const std::string& epath) {
    if (!seen.insert(idx).second) throw SchemaError(epath, "duplicate entry");
    c.coords[idx] = s;
  };
  if (auto it = j.find("phi"); it != j.end()) {
    const std::string ppath = child(path, "phi");
    require_array(*it, SIZE_MAX, ppath);
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string epath = child(ppath, e);
      const json& entry = require_array((*it)[e], 3, epath);
      const auto tuple = parse_tuple(entry[0], deg, n, child(epath, 0));
      const std::size_t mm = parse_index(entry[1], m, child(epath, 1));
      put(shape.phi_index(tuple_to_mask(tuple), mm), parse_scalar(entry[2], f, child(epath, 2)), epath);
    }
  }
  if (auto it = j.find("omega"); it != j.end()) {
    const std::string opath = child(path, "omega");
    require_array(*it, SIZE_MAX, opath);
    if (deg < 2 && !it->empty()) throw SchemaError(opath, "omega entries need degree >= 2");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string epath = child(opath, e);
      const json& entry = require_array((*it)[e], 4, epath);
      const std::size_t a = parse_index(entry[0], n, child(epath, 0));
      const auto tuple = parse_tuple(entry[1], deg - 2, n, child(epath, 1));
      const std::size_t mm = parse_index(entry[2], m, child(epath, 2));
      put(shape.omega_index(a, tuple_to_mask(tuple), mm), parse_scalar(entry[3], f, child(epath, 3)), epath);
    }
  }
  return c;
}

InputDocument parse_document(const json& doc, const std::string& name, const std::filesystem::path& base) {
  const std::string root = name + ":";
  if (!doc.is_object()) throw SchemaError(root, "expected an object");
  static const std::set<std::string> known{"field",          "dim",         "bracket",   "square",
                                           "derivation",     "catalog",     "representation",
                                           "deformation",    "extension"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw SchemaError(child(root, key), "unknown field");

  InputDocument in;
  if (doc.contains("field")) in.field = parse_field(doc["field"], child(root, "field"));
  if (doc.contains("dim") || doc.contains("catalog")) in.pair = parse_pair(doc, in.field, root);
  else
    for (const char* key : {"bracket", "square", "derivation"})
      if (doc.contains(key)) throw SchemaError(child(root, "dim"), "missing field");

  const auto need_pair = [&](const char* key) {
    if (!in.pair) throw SchemaError(child(root, "dim"), std::string("missing field (required by ") + key + ")");
  };
  if (doc.contains("representation")) {
    need_pair("representation");
    in.representation =
        parse_representation(doc["representation"], *in.pair, child(root, "representation"), in.adjoint_representation);
  }
  if (doc.contains("deformation")) {
    need_pair("deformation");
    in.deformation = parse_deformation(doc["deformation"], *in.pair, child(root, "deformation"));
  }
  if (doc.contains("extension")) {
    const json& ej = doc["extension"];
    const std::string epath = child(root, "extension");
    ExtensionDocument ext;
    ext.g = parse_pair_ref(require(ej, "g", epath), in.field, child(epath, "g"), base, in.sources);
    ext.h = parse_pair_ref(require(ej, "h", epath), in.field, child(epath, "h"), base, in.sources);
    if (!(ext.g.field() == ext.h.field())) throw SchemaError(child(epath, "h"), "field differs from the field of g");
    const Field& f = ext.g.field();
    const std::size_t n = ext.g.dim(), h = ext.h.dim();
    ext.cocycle = parse_pair_cochain(require(ej, "cocycle", epath), n, h, f, child(epath, "cocycle"));
    if (ej.contains("cocycle2")) ext.cocycle2 = parse_pair_cochain(ej["cocycle2"], n, h, f, child(epath, "cocycle2"));
    if (ej.contains("section")) ext.section = parse_matrix(ej["section"], f, n + h, n, child(epath, "section"));
    in.extension = std::move(ext);
  }
  return in;
}

InputDocument parse_input(const std::filesystem::path& path) {
  const std::string text = read_file(path, path.string());
  const json doc = parse_json_text(text, path.string());
  InputDocument in = parse_document(doc, path.string(), path.parent_path());
  in.sources.insert(in.sources.begin(), text);
  return in;
}

std::string digest(const std::vector<std::string>& sources) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const std::string& s : sources) EVP_DigestUpdate(ctx, s.data(), s.size());
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, out, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string r = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    r += hex[out[i] >> 4];
    r += hex[out[i] & 15];
  }
  return r;
}

json vec_json(const Vec& v) {
  json j = json::array();
  for (Scalar s : v) j.push_back(s);
  return j;
}

json to_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vec_json(Vec(m.row(r).begin(), m.row(r).end())));
  return j;
}

json to_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid();
  json fs = json::array();
  for (const ValidationFailure& f : r.failures)
    fs.push_back(json{{"axiom", f.axiom}, {"witness", f.witness}, {"lhs", vec_json(f.lhs)}, {"rhs", vec_json(f.rhs)}});
  j["failures"] = std::move(fs);
  return j;
}

json pair_json(const ResLieDerPair& p) {
  const RestrictedLieAlgebra& a = p.algebra;
  const std::size_t n = a.dim();
  json j;
  j["field"] = field_json(p.field());
  j["dim"] = n;
  json br = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (!is_zero(a.bracket(i, k))) br.push_back(json{{"i", i}, {"j", k}, {"value", vec_json(a.bracket(i, k))}});
  j["bracket"] = std::move(br);
  json sq = json::array();
  for (std::size_t i = 0; i < n; ++i) sq.push_back(vec_json(a.square(i)));
  j["square"] = std::move(sq);
  j["derivation"] = to_json(p.derivation);
  return j;
}

json rep_json(const RestrictedRepresentation& r) {
  json rho = json::array();
  for (const Matrix& m : r.rho) rho.push_back(to_json(m));
  return json{{"dim", r.dim}, {"rho", std::move(rho)}, {"eta", to_json(r.eta)}};
}

json cochain_json(const CochainShape& shape, const Cochain& c) {
  const std::size_t deg = shape.degree(), n = shape.algebra_dim(), m = shape.module_dim();
  json j;
  j["degree"] = deg;
  json phi = json::array();
  for (std::uint32_t mask : shape.subsets().subsets(deg))
    for (std::size_t mm = 0; mm < m; ++mm)
      if (Scalar s = c.coords[shape.phi_index(mask, mm)]; s != 0) phi.push_back(json{mask_to_tuple(mask), mm, s});
  j["phi"] = std::move(phi);
  if (deg >= 2) {
    json omega = json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::uint32_t mask : shape.subsets().subsets(deg - 2))
        for (std::size_t mm = 0; mm < m; ++mm)
          if (Scalar s = c.coords[shape.omega_index(a, mask, mm)]; s != 0)
            omega.push_back(json{a, mask_to_tuple(mask), mm, s});
    j["omega"] = std::move(omega);
  }
  return j;
}

json pair_cochain_json(const ComplexContext& ctx, const PairCochain& c) {
  json j = cochain_json(ctx.shape(c.top.degree), c.top);
  if (c.top.degree >= 2) j["low"] = cochain_json(ctx.shape(c.low.degree), c.low);
  return j;
}

json deformation_json(const TruncatedDeformation& d) {
  json terms = json::array();
  for (const DeformationTerm& t : d.terms) {
    const std::size_t n = t.sigma.size();
    json mu = json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!is_zero(t.mu[a * n + b])) mu.push_back(json{a, b, vec_json(t.mu[a * n + b])});
    json sigma = json::array();
    for (const Vec& v : t.sigma) sigma.push_back(vec_json(v));
    terms.push_back(json{{"mu", std::move(mu)}, {"sigma", std::move(sigma)}, {"D", to_json(t.D)}});
  }
  return json{{"order", d.order()}, {"terms", std::move(terms)}};
}

}  // namespace reslie::io
