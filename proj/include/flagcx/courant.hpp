#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "flagcx/gtangent.hpp"

namespace flagcx {

// [X+ξ, Y+η] = [X,Y] + ad*_X η - ad*_Y ξ at the origin.
GVector courant_bracket(const GVector& u, const GVector& v);

// ½(A₂([B₁,C₁]) + B₂([C₁,A₁]) + C₂([A₁,B₁])).
GQ nijenhuis_operator(const GVector& a, const GVector& b, const GVector& c);

// [JA,JB] - [A,B] - J[A,JB] - J[JA,B].
GVector nijenhuis_tensor(const InvariantGacs& j, const GVector& a, const GVector& b);

enum class WitnessKind { PairNotInL, NijNonzero };

struct Witness {
  WitnessKind kind;
  std::vector<GVector> elements;  // (u, v) or (u, v, w) from the L basis
  std::optional<GVector> residual;  // [u, v] for PairNotInL
  std::optional<GQ> value;          // Nij(u, v, w) when a triple is attached
};

struct Integrable {};
struct NotIntegrable {
  Witness witness;
};
using IntegrabilityVerdict = std::variant<Integrable, NotIntegrable>;

// First L-basis pair (lexicographic) whose bracket leaves L, cross-checked by a Nij triple.
IntegrabilityVerdict check_integrability(const InvariantGacs& j);
IntegrabilityVerdict check_integrability(const Eigenspace& l);
// Independent criterion: first L-basis triple with nonzero Nij.
std::optional<Witness> find_nij_witness(const InvariantGacs& j);
// Recomputes the witness from its elements; true iff it exhibits non-involutivity.
bool reverify(const InvariantGacs& j, const Witness& w);
bool reverify(const Eigenspace& l, const Witness& w);

}  // namespace flagcx
