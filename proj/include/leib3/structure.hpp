#pragma once

#include <optional>

#include "leib3/algebra.hpp"
#include "leib3/subspace.hpp"

namespace leib3 {

/// The five center variants: elements killed in slot 1 (left), slot 2
/// (middle), slot 3 (right), slots 1-2 (lm), or all three (full).
enum class CenterKind { left, middle, right, lm, full };

/// Annihilator / ideal sides. Note the ideal convention: a LEFT ideal
/// absorbs [L,L,A], i.e. the member sits in slot 3, mirroring how a left
/// action multiplies from the left.
enum class Side { left, middle, right, all };

const char* to_string(CenterKind k);
const char* to_string(Side s);

/// Center of the given kind, computed as one kernel of a stacked matrix
/// whose rows are the coordinate equations of the included slots.
Subspace center(const Algebra3& a, CenterKind kind);

/// Elements x of h whose brackets against all basis pairs of m vanish in the
/// given slot (left: [x,m,m'], middle: [m,x,m'], right: [m,m',x]);
/// side all is the intersection of the three. Always a subspace of h.
Subspace annihilator(const Algebra3& a, const Subspace& h, const Subspace& m,
                     Side side);

/// The subspace spanned by all bracket values [L,L,L].
Subspace derived_ideal(const Algebra3& a);

bool is_subalgebra(const Algebra3& a, const Subspace& s);
bool is_ideal(const Algebra3& a, const Subspace& s, Side side);

/// A bracket that escapes the subspace, witnessing an ideal-check failure.
struct IdealWitness {
  Vec x, y, z;       // bracket arguments
  Vec value;         // bracket(x,y,z), not contained in the subspace
  const char* check; // "subalgebra" or "<side> absorption"
};

/// First failing bracket in a deterministic scan order, or nullopt.
std::optional<IdealWitness> ideal_witness(const Algebra3& a, const Subspace& s,
                                          Side side);

struct NotAnIdealError : Error {
  NotAnIdealError(std::string msg, IdealWitness w)
      : Error(std::move(msg)), witness(std::move(w)) {}
  IdealWitness witness;
};

struct QuotientResult {
  Algebra3 algebra;   // on the non-pivot coordinates of the ideal
  Matrix projection;  // codim(i) x dim(a), maps ambient vectors to classes
};

/// Factor algebra modulo a three-sided ideal. The complement is the
/// canonical one spanned by the standard basis vectors at the ideal's
/// non-pivot coordinates. Throws NotAnIdealError (with a witness) when the
/// precondition fails; the result is re-validated before returning.
QuotientResult quotient(const Algebra3& a, const Subspace& ideal);

}  // namespace leib3
