#pragma once

#include "cla/extension.hpp"

namespace cla {

/// The covariants of an ε-orthogonal representation: the moment map, the
/// trilinear cyclic sum ψ, and the quadrilinear pairing Q.
struct Covariants {
  AltMap mu;   // Alt²(V, g)
  AltMap psi;  // Alt³(V, V)
  AltMap q;    // Alt⁴(V)
};

/// ψ from its 3-term definition, cross-checked against ½Σ_{S₃} p(σ)μ(..)
/// and, for special representations, against 3(μ − μ_can). Internal
/// disagreement throws.
AltMap covariant_psi(const OrthRep& r);
AltMap covariant_psi(const OrthRep& r, const AltMap& mu);

/// Q from its 4-term definition, cross-checked against ½Σ_{S₄}, and for
/// special representations against 4(v₁, ψ(v₂,v₃,v₄)), −2N(μ) and −4β(R_μ).
AltMap covariant_q(const OrthRep& r);
AltMap covariant_q(const OrthRep& r, const AltMap& mu, const AltMap& psi);

Covariants covariants(const OrthRep& r);
/// Covariants built from a caller-supplied μ (mutation testing probes
/// perturbed moment maps through this).
Covariants covariants_from(const OrthRep& r, const AltMap& mu);

struct MathewsMode {
  bool full = true;
  int samples = 25;           // sampled mode tuple count
  std::uint64_t seed = 0;     // sampled mode RNG seed
  int tuple_budget = 500;     // full-mode canonical tuple cap
};

/// Verifies one of the four Mathews identities (a–d) for a special
/// representation. Exact equality, tuple by tuple; failure witnesses carry
/// the tuple and both values.
Verdict mathews_verify(const OrthRep& r, char identity, const MathewsMode& mode,
                       EvalStrategy strategy = EvalStrategy::fast);
Verdict mathews_verify(const OrthRep& r, const Covariants& cov, char identity,
                       const MathewsMode& mode,
                       EvalStrategy strategy = EvalStrategy::fast);

}  // namespace cla
