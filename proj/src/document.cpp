#include "cla/document.hpp"

#include <fstream>

namespace cla {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::string need_string(const json& j, const char* key,
                        const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string())
    throw Error("key '" + std::string(key) + "' in " + where +
                " is not a string");
  return v.get<std::string>();
}

Scalar parse_scalar(const json& j, const FieldDescriptor& f,
                    const std::string& where) {
  if (!j.is_string())
    throw Error("scalar in " + where + " must be a string (\"a/b\")");
  return Scalar::parse(j.get<std::string>(), f);
}

std::vector<long> parse_degree(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error("degree in " + where + " is not an array");
  std::vector<long> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw Error("degree coordinate in " + where + " is not an integer");
    coords.push_back(c.get<long>());
  }
  return coords;
}

}  // namespace

json scalar_matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix scalar_matrix_from_json(const json& j, const FieldDescriptor& f) {
  if (!j.is_array()) throw Error("matrix is not an array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("matrix row is not an array");
    Vec r;
    for (const auto& entry : row) r.push_back(parse_scalar(entry, f, "matrix"));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(std::move(rows), f);
}

json altmap_to_json(const AltMap& m) {
  json entries = json::array();
  for (int row = 0; row < m.table().size(); ++row) {
    if (vec_is_zero(m.value(row))) continue;
    json e;
    e["tuple"] = m.table().tuple(row);
    json vals = json::array();
    for (const Scalar& s : m.value(row)) vals.push_back(s.str());
    e["value"] = std::move(vals);
    entries.push_back(std::move(e));
  }
  return entries;
}

AltMap altmap_from_json(const json& j, const GradedSpace& domain,
                        const GradedSpace& codomain, int arity) {
  if (!j.is_array()) throw Error("alt-map document is not an array");
  TupleTable table(domain, arity);
  std::vector<Vec> values(table.size(),
                          vec_zero(codomain.dim(), domain.field()));
  for (const auto& e : j) {
    const json& jt = need(e, "tuple", "alt-map entry");
    std::vector<int> tuple;
    for (const auto& idx : jt) {
      if (!idx.is_number_integer() || idx.get<long>() < 0 ||
          idx.get<long>() >= domain.dim())
        throw Error("alt-map tuple index out of range");
      tuple.push_back(idx.get<int>());
    }
    int row = table.find(tuple);
    if (row < 0)
      throw Error("alt-map tuple " + domain.tuple_str(tuple) +
                  " is not canonical (sort it and fold the sign into the "
                  "value)");
    const json& jv = need(e, "value", "alt-map entry");
    if (static_cast<int>(jv.size()) != codomain.dim())
      throw Error("alt-map value length mismatch");
    Vec val;
    for (const auto& s : jv)
      val.push_back(parse_scalar(s, domain.field(), "alt-map value"));
    values[row] = std::move(val);
  }
  return AltMap(domain, codomain, arity, std::move(values));
}

StructureDocument StructureDocument::from_json(const json& j) {
  StructureDocument doc;
  const json& jf = need(j, "field", "document");
  std::string kind = need_string(jf, "kind", "field");
  if (kind == "rational") {
    doc.field = FieldDescriptor::rationals();
  } else if (kind == "prime") {
    const json& p = need(jf, "p", "field");
    if (!p.is_number_unsigned()) throw Error("field modulus is not a number");
    doc.field = FieldDescriptor::prime_field(p.get<std::uint64_t>());
  } else {
    throw Error("unknown field kind '" + kind + "'");
  }
  const json& jg = need(j, "group", "document");
  int free_rank = need(jg, "free_rank", "group").get<int>();
  std::vector<long> torsion;
  for (const auto& t : need(jg, "torsion", "group"))
    torsion.push_back(t.get<long>());
  AbelianGroup group(free_rank, std::move(torsion));
  const json& je = need(jg, "epsilon", "group");
  std::vector<std::vector<Scalar>> eps;
  for (const auto& row : je) {
    std::vector<Scalar> r;
    for (const auto& entry : row)
      r.push_back(parse_scalar(entry, doc.field, "epsilon"));
    eps.push_back(std::move(r));
  }
  doc.cf = CommutationFactor(group, doc.field, std::move(eps));

  if (j.contains("spaces")) {
    for (const auto& [name, js] : j.at("spaces").items()) {
      std::vector<BasisVector> basis;
      for (const auto& b : need(js, "basis", "space '" + name + "'")) {
        std::string bname = need_string(b, "name", "basis vector");
        basis.push_back(
            {bname,
             group.element(parse_degree(need(b, "degree", bname), bname))});
      }
      if (basis.empty()) throw Error("space '" + name + "' has an empty basis");
      doc.spaces.emplace(name,
                         GradedSpace(doc.field, doc.cf, std::move(basis)));
    }
  }
  auto find_space = [&](const std::string& name,
                        const std::string& where) -> const GradedSpace& {
    auto it = doc.spaces.find(name);
    if (it == doc.spaces.end())
      throw Error("unknown space '" + name + "' referenced by " + where);
    return it->second;
  };
  if (j.contains("forms")) {
    for (const auto& [name, jf2] : j.at("forms").items()) {
      const GradedSpace& s =
          find_space(need_string(jf2, "space", "form '" + name + "'"),
                     "form '" + name + "'");
      Matrix gram = scalar_matrix_from_json(
          need(jf2, "gram", "form '" + name + "'"), doc.field);
      if (gram.rows() != s.dim() || gram.cols() != s.dim())
        throw Error("gram matrix shape mismatch in form '" + name + "'");
      doc.forms.emplace(name, FormEps{s, std::move(gram)});
    }
  }
  if (j.contains("maps")) {
    for (const auto& [name, jm] : j.at("maps").items()) {
      const GradedSpace& src =
          find_space(need_string(jm, "source", "map '" + name + "'"),
                     "map '" + name + "'");
      const GradedSpace& tgt =
          find_space(need_string(jm, "target", "map '" + name + "'"),
                     "map '" + name + "'");
      Matrix m = scalar_matrix_from_json(
          need(jm, "matrix", "map '" + name + "'"), doc.field);
      if (m.rows() != tgt.dim() || m.cols() != src.dim())
        throw Error("matrix shape mismatch in map '" + name + "'");
      doc.maps.emplace(name,
                       GradedLinearMap::from_matrix(src, tgt, std::move(m)));
    }
  }
  if (j.contains("algebras")) {
    for (const auto& [name, ja] : j.at("algebras").items()) {
      std::string space_name =
          need_string(ja, "space", "algebra '" + name + "'");
      const GradedSpace& s = find_space(space_name, "algebra '" + name + "'");
      int n = s.dim();
      std::vector<std::vector<Vec>> br(
          n, std::vector<Vec>(n, vec_zero(n, doc.field)));
      for (const auto& e : need(ja, "brackets", "algebra '" + name + "'")) {
        int x = need(e, "x", "bracket entry").get<int>();
        int y = need(e, "y", "bracket entry").get<int>();
        if (x < 0 || x >= n || y < 0 || y >= n)
          throw Error("bracket index out of range in algebra '" + name + "'");
        for (const auto& c : need(e, "value", "bracket entry")) {
          int k = need(c, "k", "bracket coefficient").get<int>();
          if (k < 0 || k >= n)
            throw Error("bracket component out of range in algebra '" + name +
                        "'");
          br[x][y][k] = parse_scalar(need(c, "c", "bracket coefficient"),
                                     doc.field, "bracket");
        }
      }
      std::optional<FormEps> form;
      std::string form_name;
      if (ja.contains("form")) {
        form_name = ja.at("form").get<std::string>();
        auto it = doc.forms.find(form_name);
        if (it == doc.forms.end())
          throw Error("unknown form '" + form_name + "' in algebra '" + name +
                      "'");
        if (!(it->second.space == s))
          throw Error("form '" + form_name +
                      "' lives on a different space than algebra '" + name +
                      "'");
        form = it->second;
      }
      doc.algebras.emplace(
          name,
          AlgebraDecl{ColourLieAlgebra(s, std::move(br), std::move(form)),
                      space_name, form_name});
    }
  }
  if (j.contains("reps")) {
    for (const auto& [name, jr] : j.at("reps").items()) {
      std::string aname = need_string(jr, "algebra", "rep '" + name + "'");
      auto ait = doc.algebras.find(aname);
      if (ait == doc.algebras.end())
        throw Error("unknown algebra '" + aname + "' in rep '" + name + "'");
      std::string sname = need_string(jr, "space", "rep '" + name + "'");
      const GradedSpace& s = find_space(sname, "rep '" + name + "'");
      std::string fname = need_string(jr, "form", "rep '" + name + "'");
      auto fit = doc.forms.find(fname);
      if (fit == doc.forms.end())
        throw Error("unknown form '" + fname + "' in rep '" + name + "'");
      if (!(fit->second.space == s))
        throw Error("form '" + fname +
                    "' lives on a different space than rep '" + name + "'");
      std::vector<Matrix> action;
      for (const auto& jm : need(jr, "action", "rep '" + name + "'")) {
        Matrix m = scalar_matrix_from_json(jm, doc.field);
        if (m.rows() != s.dim() || m.cols() != s.dim())
          throw Error("action matrix shape mismatch in rep '" + name + "'");
        action.push_back(std::move(m));
      }
      if (static_cast<int>(action.size()) != ait->second.algebra.dim())
        throw Error("rep '" + name +
                    "' action count differs from the algebra dimension");
      doc.reps.emplace(name,
                       RepDecl{OrthRep{ait->second.algebra, s, fit->second,
                                       std::move(action)},
                               aname, sname, fname});
    }
  }
  if (j.contains("phis")) {
    for (const auto& [name, jp] : j.at("phis").items()) {
      std::string rname = need_string(jp, "rep", "phi '" + name + "'");
      auto rit = doc.reps.find(rname);
      if (rit == doc.reps.end())
        throw Error("unknown rep '" + rname + "' in phi '" + name + "'");
      const GradedSpace& s = rit->second.rep.space;
      doc.phis.emplace(
          name, PhiDecl{altmap_from_json(need(jp, "values", "phi"), s, s, 2),
                        rname});
    }
  }
  return doc;
}

StructureDocument StructureDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("JSON parse error in '" + path + "': " + e.what());
  }
  return from_json(j);
}

json StructureDocument::to_json() const {
  json j;
  if (field.kind == FieldKind::rational)
    j["field"] = {{"kind", "rational"}};
  else
    j["field"] = {{"kind", "prime"}, {"p", field.p}};
  json eps = json::array();
  for (const auto& row : cf.gen_values()) {
    json r = json::array();
    for (const Scalar& s : row) r.push_back(s.str());
    eps.push_back(std::move(r));
  }
  j["group"] = {{"free_rank", cf.group().free_rank},
                {"torsion", cf.group().torsion_orders},
                {"epsilon", std::move(eps)}};
  if (!spaces.empty()) {
    json js;
    for (const auto& [name, s] : spaces) {
      json basis = json::array();
      for (const auto& b : s.basis())
        basis.push_back({{"name", b.name}, {"degree", b.degree.coords}});
      js[name] = {{"basis", std::move(basis)}};
    }
    j["spaces"] = std::move(js);
  }
  if (!forms.empty()) {
    json jf;
    for (const auto& [name, f] : forms) {
      std::string sname;
      for (const auto& [n, s] : spaces)
        if (s == f.space) sname = n;
      jf[name] = {{"space", sname}, {"gram", scalar_matrix_to_json(f.gram)}};
    }
    j["forms"] = std::move(jf);
  }
  if (!maps.empty()) {
    json jm;
    for (const auto& [name, m] : maps) {
      std::string src, tgt;
      for (const auto& [n, s] : spaces) {
        if (s == m.source) src = n;
        if (s == m.target) tgt = n;
      }
      jm[name] = {{"source", src},
                  {"target", tgt},
                  {"matrix", scalar_matrix_to_json(m.mat)}};
    }
    j["maps"] = std::move(jm);
  }
  if (!algebras.empty()) {
    json ja;
    for (const auto& [name, a] : algebras) {
      json brackets = json::array();
      int n = a.algebra.dim();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const Vec& v = a.algebra.bracket(x, y);
          if (vec_is_zero(v)) continue;
          json value = json::array();
          for (int k = 0; k < n; ++k)
            if (!v[k].is_zero()) value.push_back({{"k", k}, {"c", v[k].str()}});
          brackets.push_back(
              {{"x", x}, {"y", y}, {"value", std::move(value)}});
        }
      json entry = {{"space", a.space_name},
                    {"brackets", std::move(brackets)}};
      if (!a.form_name.empty()) entry["form"] = a.form_name;
      ja[name] = std::move(entry);
    }
    j["algebras"] = std::move(ja);
  }
  if (!reps.empty()) {
    json jr;
    for (const auto& [name, r] : reps) {
      json action = json::array();
      for (const Matrix& m : r.rep.action)
        action.push_back(scalar_matrix_to_json(m));
      jr[name] = {{"algebra", r.algebra_name},
                  {"space", r.space_name},
                  {"form", r.form_name},
                  {"action", std::move(action)}};
    }
    j["reps"] = std::move(jr);
  }
  if (!phis.empty()) {
    json jp;
    for (const auto& [name, p] : phis)
      jp[name] = {{"rep", p.rep_name}, {"values", altmap_to_json(p.phi)}};
    j["phis"] = std::move(jp);
  }
  return j;
}

StructureDocument document_of_rep(const OrthRep& rep,
                                  const std::string& rep_name) {
  StructureDocument doc;
  doc.field = rep.space.field();
  doc.cf = rep.space.cf();
  doc.spaces.emplace("g", rep.algebra.space());
  doc.spaces.emplace("V", rep.space);
  if (rep.algebra.form()) doc.forms.emplace("B_g", *rep.algebra.form());
  doc.forms.emplace("B_V", rep.form);
  doc.algebras.emplace(
      "g", StructureDocument::AlgebraDecl{rep.algebra, "g",
                                          rep.algebra.form() ? "B_g" : ""});
  doc.reps.emplace(rep_name,
                   StructureDocument::RepDecl{rep, "g", "V", "B_V"});
  return doc;
}

}  // namespace cla
