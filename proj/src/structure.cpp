#include "leib3/structure.hpp"

namespace leib3 {

namespace {

void require_ambient(const Algebra3& a, const Subspace& s, const char* what) {
  if (s.ambient_dim() != a.dim())
    throw UsageError(std::string(what) + ": ambient dimension " +
                     std::to_string(s.ambient_dim()) + " does not match algebra dim " +
                     std::to_string(a.dim()));
  if (s.field() != a.field())
    throw UsageError(std::string(what) + ": field mismatch");
}

// Coordinate equations cutting out one center slot. For the left center the
// row indexed (j,k,m) has entry c_{ijk}^m at column i; middle and right
// permute the slot the unknown occupies.
void append_center_rows(const Algebra3& a, int slot, std::vector<Vec>& rows) {
  const std::size_t n = a.dim();
  std::map<std::array<std::uint32_t, 3>, Vec> row_map;  // (fixed1, fixed2, m) -> row
  for (const auto& [key, coeffs] : a.tensor().entries()) {
    std::uint32_t unknown, fixed1, fixed2;
    if (slot == 0) {
      unknown = key[0]; fixed1 = key[1]; fixed2 = key[2];
    } else if (slot == 1) {
      unknown = key[1]; fixed1 = key[0]; fixed2 = key[2];
    } else {
      unknown = key[2]; fixed1 = key[0]; fixed2 = key[1];
    }
    for (std::uint32_t m = 0; m < n; ++m) {
      if (coeffs[m].is_zero()) continue;
      auto [it, inserted] =
          row_map.try_emplace({fixed1, fixed2, m}, zero_vec(a.field(), n));
      it->second[unknown] += coeffs[m];
      (void)inserted;
    }
  }
  for (auto& [key, row] : row_map) rows.push_back(std::move(row));
}

}  // namespace

const char* to_string(CenterKind k) {
  switch (k) {
    case CenterKind::left: return "left";
    case CenterKind::middle: return "middle";
    case CenterKind::right: return "right";
    case CenterKind::lm: return "lm";
    case CenterKind::full: return "full";
  }
  return "?";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::middle: return "middle";
    case Side::right: return "right";
    case Side::all: return "all";
  }
  return "?";
}

Subspace center(const Algebra3& a, CenterKind kind) {
  std::vector<Vec> rows;
  if (kind == CenterKind::left || kind == CenterKind::lm || kind == CenterKind::full)
    append_center_rows(a, 0, rows);
  if (kind == CenterKind::middle || kind == CenterKind::lm || kind == CenterKind::full)
    append_center_rows(a, 1, rows);
  if (kind == CenterKind::right || kind == CenterKind::full)
    append_center_rows(a, 2, rows);
  return kernel(Matrix::from_rows(a.field(), a.dim(), rows));
}

Subspace annihilator(const Algebra3& a, const Subspace& h, const Subspace& m,
                     Side side) {
  require_ambient(a, h, "annihilator H");
  require_ambient(a, m, "annihilator M");
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();

  if (side == Side::all) {
    Subspace out = annihilator(a, h, m, Side::left);
    out = intersect(out, annihilator(a, h, m, Side::middle));
    return intersect(out, annihilator(a, h, m, Side::right));
  }

  // Rows of the linear system "x annihilates every basis pair of m in the
  // given slot": one block of coordinate rows per ordered pair (u,v).
  std::vector<Vec> rows;
  for (std::size_t ur = 0; ur < m.dim(); ++ur) {
    const Vec u = m.basis().row(ur);
    for (std::size_t vr = 0; vr < m.dim(); ++vr) {
      const Vec v = m.basis().row(vr);
      std::vector<Vec> columns(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Vec e = unit_vec(f, n, i);
        columns[i] = side == Side::left    ? a.bracket(e, u, v)
                     : side == Side::middle ? a.bracket(u, e, v)
                                            : a.bracket(u, v, e);
      }
      for (std::size_t coord = 0; coord < n; ++coord) {
        Vec row = zero_vec(f, n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
          row[i] = columns[i][coord];
          nonzero = nonzero || !row[i].is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  Subspace annihilating = kernel(Matrix::from_rows(f, n, rows));
  return intersect(annihilating, h);
}

Subspace derived_ideal(const Algebra3& a) {
  std::vector<Vec> values;
  values.reserve(a.tensor().entry_count());
  for (const auto& [key, coeffs] : a.tensor().entries()) values.push_back(coeffs);
  return Subspace::span_of(a.field(), a.dim(), values);
}

std::optional<IdealWitness> ideal_witness(const Algebra3& a, const Subspace& s,
                                          Side side) {
  require_ambient(a, s, "ideal check");
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();

  // Subalgebra requirement first: [s,s,s] <= s.
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      for (std::size_t k = 0; k < s.dim(); ++k) {
        Vec value = a.bracket(s.basis().row(i), s.basis().row(j), s.basis().row(k));
        if (!s.contains(value))
          return IdealWitness{s.basis().row(i), s.basis().row(j), s.basis().row(k),
                              std::move(value), "subalgebra"};
      }

  auto absorption = [&](Side which) -> std::optional<IdealWitness> {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < s.dim(); ++r) {
          const Vec u = s.basis().row(r);
          const Vec ei = unit_vec(f, n, i), ej = unit_vec(f, n, j);
          Vec x, y, z;
          const char* check;
          if (which == Side::left) {         // [L,L,A] <= A
            x = ei; y = ej; z = u; check = "left absorption";
          } else if (which == Side::middle) { // [L,A,L] <= A
            x = ei; y = u; z = ej; check = "middle absorption";
          } else {                           // [A,L,L] <= A
            x = u; y = ei; z = ej; check = "right absorption";
          }
          Vec value = a.bracket(x, y, z);
          if (!s.contains(value))
            return IdealWitness{std::move(x), std::move(y), std::move(z),
                                std::move(value), check};
        }
    return std::nullopt;
  };

  if (side == Side::all) {
    for (Side which : {Side::left, Side::middle, Side::right})
      if (auto w = absorption(which)) return w;
    return std::nullopt;
  }
  return absorption(side);
}

bool is_subalgebra(const Algebra3& a, const Subspace& s) {
  require_ambient(a, s, "subalgebra check");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      for (std::size_t k = 0; k < s.dim(); ++k)
        if (!s.contains(
                a.bracket(s.basis().row(i), s.basis().row(j), s.basis().row(k))))
          return false;
  return true;
}

bool is_ideal(const Algebra3& a, const Subspace& s, Side side) {
  return !ideal_witness(a, s, side).has_value();
}

QuotientResult quotient(const Algebra3& a, const Subspace& ideal) {
  require_ambient(a, ideal, "quotient");
  if (auto w = ideal_witness(a, ideal, Side::all)) {
    std::string msg = "not an ideal: bracket " + vec_str(w->x) + ", " +
                      vec_str(w->y) + ", " + vec_str(w->z) + " -> " +
                      vec_str(w->value) + " escapes the subspace (" + w->check +
                      " check)";
    throw NotAnIdealError(std::move(msg), std::move(*w));
  }

  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  const std::vector<std::size_t> coords = ideal.complement_coords();
  const std::size_t q = coords.size();

  // projection row t, column c = coordinate t of the class of e_c: identity
  // on complement coordinates, minus the matching basis row on pivot ones.
  Matrix proj(f, q, n);
  for (std::size_t t = 0; t < q; ++t) proj.at(t, coords[t]) = Scalar::one(f);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const std::size_t pivot = ideal.pivot_cols()[r];
    for (std::size_t t = 0; t < q; ++t)
      proj.at(t, pivot) = -ideal.basis().at(r, coords[t]);
  }

  StructureTensor tensor(f, q);
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t v = 0; v < q; ++v) {
        Vec value = a.bracket(unit_vec(f, n, coords[t]), unit_vec(f, n, coords[u]),
                              unit_vec(f, n, coords[v]));
        tensor.set(t, u, v, proj.apply(value));
      }

  Algebra3 result(std::move(tensor));
  if (!result.validate().empty())
    throw InternalError("quotient by a verified ideal failed validation");
  return QuotientResult{std::move(result), std::move(proj)};
}

}  // namespace leib3
