// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ldcat/category.hpp"
#include "ldcat/logic.hpp"
#include "ldcat/semantics.hpp"
#include "ldcat/structure.hpp"

namespace ldcat {

/// An arrow together with the composite of canonical arrows that produced
/// it, spelled out so a failed equation can be replayed by hand.
struct TracedArrow {
  ArrId arrow;
  std::string expr;
};

// ---------------------------------------------------------------------------
// Distributivity: Delta = [id_A x inj1, id_A x inj2] : (AxB)+(AxC) -> Ax(B+C)

TracedArrow build_delta(const StructureTable& st, ObjId a, ObjId b, ObjId c);

/// Inverse of Delta built from exponentials only. With D = (AxB)+(AxC):
/// h = [transpose(j1 . swap), transpose(j2 . swap)] : B+C -> D^A, and the
/// inverse is theta(h) . swap : Ax(B+C) -> (B+C)xA -> D.
TracedArrow build_delta_inverse(const StructureTable& st, ObjId a, ObjId b, ObjId c);

struct DeltaCertificate {
  ObjId a, b, c;
  TracedArrow delta;
  TracedArrow delta_inverse;
  bool inverse_after_delta = false;  // Delta^-1 . Delta = id
  bool delta_after_inverse = false;  // Delta . Delta^-1 = id

  bool ok() const { return inverse_after_delta && delta_after_inverse; }
};

DeltaCertificate certify_delta(const StructureTable& st, ObjId a, ObjId b, ObjId c);

// ---------------------------------------------------------------------------
// Frobenius: M(exists x:s. A & B) ~ MA x M(exists x:s. B) when x is not free in A

struct FrobeniusInstance {
  Formula a;  // closed
  std::string var;
  std::string sort;
  Formula b;  // at most `var` free

  Formula exists_a_times_b() const { return Formula::exists(var, sort, Formula::times(a, b)); }
  Formula exists_b() const { return Formula::exists(var, sort, b); }
  std::string label() const;
};

/// alpha : M(exists x. A & B) -> MA x M(exists x. B), the unique arrow with
/// alpha . exI_t = id_MA x delta_t for every closed term t.
/// Throws NoMediator / MultipleMediators.
TracedArrow build_alpha(Interpretation& interp, const FrobeniusInstance& inst);

/// For a cocone p_t : MA x M(B[t/x]) -> vertex, the unique
/// gamma : M(exists x. B) -> vertex^MA with gamma . delta_t = transpose(p_t . swap).
TracedArrow build_gamma(Interpretation& interp, const FrobeniusInstance& inst, const ConeFamily& p);

/// theta(gamma) . swap : MA x M(exists x. B) -> vertex.
TracedArrow build_beta(Interpretation& interp, const FrobeniusInstance& inst, const ConeFamily& p,
                       const TracedArrow& gamma);

struct InitialitySweep {
  bool pass = true;
  std::size_t vertices = 0;
  std::size_t families = 0;
  bool truncated = false;
  std::string failure;
};

struct FrobeniusCertificate {
  FrobeniusInstance instance;
  ObjId source;  // M(exists x. A & B)
  ObjId target;  // MA x M(exists x. B)
  TracedArrow alpha;
  TracedArrow gamma;
  TracedArrow beta;  // theta(gamma) . swap
  bool alpha_after_beta = false;
  bool beta_after_alpha = false;
  bool naturality = false;  // alpha . exI_t = id x delta_t for all t
  InitialitySweep initiality;
  std::vector<std::string> warnings;

  bool ok() const { return alpha_after_beta && beta_after_alpha && naturality && initiality.pass; }
};

/// Builds alpha and beta = theta(gamma) for the cocone exI, checks both
/// inverse equations, then sweeps every reachable cocone vertex for a
/// unique mediator out of MA x M(exists x. B). Throws CertificateFailure
/// naming the first violated inverse equation.
FrobeniusCertificate verify_frobenius(Interpretation& interp, const FrobeniusInstance& inst);

/// Instances over a signature: A ranges over 0, 1 and the closed atoms; B
/// over the atomic bodies in x together with a few compound and constant
/// bodies built from them.
std::vector<FrobeniusInstance> default_instances(const Signature& sig, const TermUniverse& universe);

}  // namespace ldcat
