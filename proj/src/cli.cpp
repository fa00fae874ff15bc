#include "cla/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "cla/catalog.hpp"
#include "cla/covariants.hpp"
#include "cla/document.hpp"
#include "cla/parallel.hpp"

namespace cla {

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void record(const std::string& kind, const std::string& name,
              const Verdict& v, double ms) {
    out_ << kind << " " << name << " " << (v.pass ? "PASS" : "FAIL");
    if (!v.pass && !v.witnesses.empty())
      out_ << " (witness: " << v.detail() << ")";
    out_ << " " << static_cast<long>(ms) << "ms\n";
    any_fail_ = any_fail_ || !v.pass;
  }

  bool any_fail() const { return any_fail_; }

 private:
  std::ostream& out_;
  bool any_fail_ = false;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

const StructureDocument::RepDecl& find_rep(const StructureDocument& doc,
                                           const std::string& name) {
  auto it = doc.reps.find(name);
  if (it == doc.reps.end()) throw Error("unknown rep '" + name + "'");
  return it->second;
}

GroupElem parse_gamma(const std::string& text, const AbelianGroup& group) {
  std::vector<long> coords;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      coords.push_back(std::stol(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) coords.push_back(std::stol(cur));
  return group.element(std::move(coords));
}

void emit_json(const nlohmann::json& j, const std::string& path,
               std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

int cmd_check(const std::string& file, Reporter& rep) {
  StructureDocument doc = StructureDocument::load(file);
  {
    Timer t;
    rep.record("CHECK", "epsilon", doc.cf.validate(), t.ms());
  }
  for (const auto& [name, form] : doc.forms) {
    Timer t;
    rep.record("CHECK", "form:" + name, form.validate(), t.ms());
  }
  for (const auto& [name, a] : doc.algebras) {
    Timer t;
    Verdict v = a.algebra.validate();
    if (a.algebra.form()) v.merge(a.algebra.validate_quadratic());
    rep.record("CHECK", "algebra:" + name, v, t.ms());
  }
  for (const auto& [name, r] : doc.reps) {
    Timer t;
    rep.record("CHECK", "rep:" + name, r.rep.validate(), t.ms());
  }
  for (const auto& [name, p] : doc.phis) {
    Timer t;
    rep.record("CHECK", "phi:" + name,
               phi_validate(doc.reps.at(p.rep_name).rep, p.phi), t.ms());
  }
  return rep.any_fail() ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations with colour Lie algebras and "
               "eps-orthogonal representations"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads for parallel verification (0 = default)");

  std::string file, rep_name, phi_name, gamma_text, emit_path;

  auto* check = app.add_subcommand("check", "validate every declared object");
  check->add_option("file", file)->required();

  auto* moment = app.add_subcommand("moment", "emit the moment map of a rep");
  moment->add_option("file", file)->required();
  moment->add_option("rep", rep_name)->required();

  auto* special = app.add_subcommand("special", "specialness test");
  special->add_option("file", file)->required();
  special->add_option("rep", rep_name)->required();

  bool force = false;
  auto* extendc = app.add_subcommand(
      "extend", "assemble g+V and report the three extension verdicts");
  extendc->add_option("file", file)->required();
  extendc->add_option("rep", rep_name)->required();
  extendc->add_option("phi", phi_name, "phi block name (default: phi = 0)");
  extendc->add_flag("--force", force,
                    "run the verdicts even when phi is invalid");
  extendc->add_option("--emit", emit_path,
                      "write the assembled algebra as a document");

  auto* esl2 = app.add_subcommand(
      "extend-sl2", "assemble g + sl(2) + V(x)k^2 and check it");
  esl2->add_option("file", file)->required();
  esl2->add_option("rep", rep_name)->required();
  esl2->add_option("--gamma", gamma_text,
                   "odd degree gamma, comma-separated coordinates")
      ->required();
  esl2->add_option("--emit", emit_path,
                   "write the assembled algebra as a document");

  auto* cov = app.add_subcommand("covariants",
                                 "emit the covariants mu, psi, Q of a rep");
  cov->add_option("file", file)->required();
  cov->add_option("rep", rep_name)->required();

  std::string identity = "a";
  int sample = 0;
  std::uint64_t seed = 0;
  int budget = 500;
  bool reference = false;
  auto* mathews = app.add_subcommand("mathews", "verify a Mathews identity");
  mathews->add_option("file", file)->required();
  mathews->add_option("rep", rep_name)->required();
  mathews->add_option("-i,--identity", identity, "one of a, b, c, d")
      ->required();
  mathews->add_option("--sample", sample,
                      "verify on N random tuples instead of all");
  mathews->add_option("--seed", seed, "RNG seed for sampled mode");
  mathews->add_option("--budget", budget, "full-mode canonical tuple cap");
  mathews->add_flag("--reference", reference,
                    "use the serial reference kernel");

  std::string catalog_name, space_name, form_name, map_name, lambda_text = "1";
  std::string output_path;
  auto* catalog = app.add_subcommand(
      "catalog", "emit a built-in example family as a document");
  catalog->add_option("name", catalog_name,
                      "fundamental_so | so_tensor_sl2 | centralizer_J")
      ->required();
  catalog->add_option("file", file, "document declaring the inputs")
      ->required();
  catalog->add_option("--space", space_name)->required();
  catalog->add_option("--form", form_name)->required();
  catalog->add_option("--gamma", gamma_text, "for so_tensor_sl2");
  catalog->add_option("--map", map_name, "J, for centralizer_J");
  catalog->add_option("--lambda", lambda_text, "for centralizer_J");
  catalog->add_option("--output", output_path, "output path (default stdout)");

  try {
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (threads > 0) parallel::set_threads(threads);

  Reporter reporter(out);
  try {
    if (*check) return cmd_check(file, reporter);

    if (*moment) {
      StructureDocument doc = StructureDocument::load(file);
      AltMap mu = moment_map(find_rep(doc, rep_name).rep);
      emit_json(altmap_to_json(mu), "", out);
      return 0;
    }

    if (*special) {
      StructureDocument doc = StructureDocument::load(file);
      Timer t;
      Verdict v = is_special(find_rep(doc, rep_name).rep);
      reporter.record("SPECIAL", rep_name, v, t.ms());
      return v.pass ? 0 : 1;
    }

    if (*extendc) {
      StructureDocument doc = StructureDocument::load(file);
      const OrthRep& r = find_rep(doc, rep_name).rep;
      AltMap phi = AltMap::zero(r.space, r.space, 2);
      if (!phi_name.empty()) {
        auto it = doc.phis.find(phi_name);
        if (it == doc.phis.end())
          throw Error("unknown phi '" + phi_name + "'");
        if (it->second.rep_name != rep_name)
          throw Error("phi '" + phi_name + "' is declared for rep '" +
                      it->second.rep_name + "'");
        phi = it->second.phi;
      }
      Timer t;
      ExtendResult res = extend(r, phi, force);
      double ms = t.ms() / 3;
      reporter.record("EXTEND", rep_name + " jacobi", res.verdict.jacobi, ms);
      reporter.record("EXTEND", rep_name + " norm-zero", res.verdict.norm_zero,
                      ms);
      reporter.record("EXTEND", rep_name + " norm-balance",
                      res.verdict.norm_balance, ms);
      if (!res.verdict.agree()) {
        out << "EXTEND " << rep_name
            << " verdicts disagree (theorem hypotheses violated?)\n";
      }
      if (!emit_path.empty()) {
        StructureDocument outdoc;
        outdoc.field = doc.field;
        outdoc.cf = doc.cf;
        outdoc.spaces.emplace("g_tilde", res.algebra.space());
        outdoc.forms.emplace("B", *res.algebra.form());
        outdoc.algebras.emplace(
            "g_tilde",
            StructureDocument::AlgebraDecl{res.algebra, "g_tilde", "B"});
        emit_json(outdoc.to_json(), emit_path, out);
      }
      return reporter.any_fail() ? 1 : 0;
    }

    if (*esl2) {
      StructureDocument doc = StructureDocument::load(file);
      const OrthRep& r = find_rep(doc, rep_name).rep;
      GroupElem gamma = parse_gamma(gamma_text, doc.cf.group());
      Timer t;
      ExtendSl2Result res = extend_sl2(r, gamma);
      if (!res.faithful.pass)
        out << "WARN " << rep_name << " " << res.faithful.detail() << "\n";
      reporter.record("EXTEND-SL2", rep_name, res.verdict, t.ms());
      if (!emit_path.empty()) {
        StructureDocument outdoc;
        outdoc.field = doc.field;
        outdoc.cf = doc.cf;
        outdoc.spaces.emplace("g_tilde", res.algebra.space());
        outdoc.forms.emplace("B", *res.algebra.form());
        outdoc.algebras.emplace(
            "g_tilde",
            StructureDocument::AlgebraDecl{res.algebra, "g_tilde", "B"});
        emit_json(outdoc.to_json(), emit_path, out);
      }
      return reporter.any_fail() ? 1 : 0;
    }

    if (*cov) {
      StructureDocument doc = StructureDocument::load(file);
      Covariants c = covariants(find_rep(doc, rep_name).rep);
      nlohmann::json j;
      j["mu"] = altmap_to_json(c.mu);
      j["psi"] = altmap_to_json(c.psi);
      j["Q"] = altmap_to_json(c.q);
      emit_json(j, "", out);
      return 0;
    }

    if (*mathews) {
      StructureDocument doc = StructureDocument::load(file);
      if (identity.size() != 1 || identity[0] < 'a' || identity[0] > 'd')
        throw Error("identity must be one of a, b, c, d");
      MathewsMode mode;
      mode.full = sample <= 0;
      mode.samples = sample;
      mode.seed = seed;
      mode.tuple_budget = budget;
      Verdict v = mathews_verify(
          find_rep(doc, rep_name).rep, identity[0], mode,
          reference ? EvalStrategy::reference : EvalStrategy::fast);
      out << "MATHEWS " << identity << " "
          << (mode.full ? std::string("full")
                        : "sampled:" + std::to_string(sample))
          << " " << (v.pass ? "PASS" : "FAIL");
      if (!v.pass) out << " [witness " << v.detail() << "]";
      out << "\n";
      return v.pass ? 0 : 1;
    }

    if (*catalog) {
      StructureDocument doc = StructureDocument::load(file);
      auto sit = doc.spaces.find(space_name);
      if (sit == doc.spaces.end())
        throw Error("unknown space '" + space_name + "'");
      auto fit = doc.forms.find(form_name);
      if (fit == doc.forms.end())
        throw Error("unknown form '" + form_name + "'");
      OrthRep r;
      if (catalog_name == "fundamental_so") {
        r = catalog_fundamental_so(sit->second, fit->second);
      } else if (catalog_name == "so_tensor_sl2") {
        if (gamma_text.empty()) throw Error("so_tensor_sl2 needs --gamma");
        r = catalog_so_tensor_sl2(sit->second, fit->second,
                                  parse_gamma(gamma_text, doc.cf.group()));
      } else if (catalog_name == "centralizer_J") {
        auto mit = doc.maps.find(map_name);
        if (mit == doc.maps.end())
          throw Error("centralizer_J needs --map naming a declared map");
        r = catalog_centralizer_j(sit->second, fit->second, mit->second.mat,
                                  Scalar::parse(lambda_text, doc.field));
      } else {
        throw Error("unknown catalog entry '" + catalog_name + "'");
      }
      emit_json(document_of_rep(r, catalog_name).to_json(), output_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace cla
