#pragma once

#include <map>
#include <string>

#include "cla/representation.hpp"

#include "json.hpp"

namespace cla {

/// A self-contained structure document: field, grading, named spaces,
/// forms, linear maps, algebras, representations and phi blocks. Scalars
/// are always strings ("a/b"), degrees always integer arrays.
struct StructureDocument {
  FieldDescriptor field;
  CommutationFactor cf;
  std::map<std::string, GradedSpace> spaces;
  std::map<std::string, FormEps> forms;
  std::map<std::string, GradedLinearMap> maps;

  struct AlgebraDecl {
    ColourLieAlgebra algebra;
    std::string space_name;
    std::string form_name;  // empty when absent
  };
  std::map<std::string, AlgebraDecl> algebras;

  struct RepDecl {
    OrthRep rep;
    std::string algebra_name, space_name, form_name;
  };
  std::map<std::string, RepDecl> reps;

  struct PhiDecl {
    AltMap phi;
    std::string rep_name;
  };
  std::map<std::string, PhiDecl> phis;

  /// Structural parse: shapes and references are enforced (errors throw),
  /// semantic validation is left to the check commands.
  static StructureDocument from_json(const nlohmann::json& j);
  static StructureDocument load(const std::string& path);
  nlohmann::json to_json() const;
};

nlohmann::json scalar_matrix_to_json(const Matrix& m);
Matrix scalar_matrix_from_json(const nlohmann::json& j,
                               const FieldDescriptor& f);

/// AltMap wire format: a list of {"tuple": [indices], "value": [scalars]}.
nlohmann::json altmap_to_json(const AltMap& m);
AltMap altmap_from_json(const nlohmann::json& j, const GradedSpace& domain,
                        const GradedSpace& codomain, int arity);

/// Document fragment for a representation produced by a catalog builder.
StructureDocument document_of_rep(const OrthRep& rep,
                                  const std::string& rep_name);

}  // namespace cla
