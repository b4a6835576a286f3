#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locoh/arith/polynomials.hpp"
#include "locoh/error.hpp"
#include "locoh/factor/growth.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/linear_algebra.hpp"

namespace locoh {

/// Certifies that the class of e_1 in Coker B_{d-1} = H^2_{R+}(R)_{-d}|_{(d,d)}
/// is nonzero and killed by tau_{d-1}.
struct TorsionWitness {
  int d = 2;
  MultiPoly annihilator;              // tau_{d-1}
  std::vector<MultiPoly> solution;    // adj(B_{d-1}) e_1, so B * solution = tau * e_1
  MembershipCertificate nonmembership;  // e_1 not in the image of B_{d-1}
  std::size_t fiber_dimension = 0;    // dim of Coker B_{d-1} at s = t = 0
};

inline TorsionWitness torsion_witness(int d, const Field& k) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "torsion_witness requires d >= 2, got " + std::to_string(d));
  const PolyMatrix b = build_B(d - 1, k);
  const auto n = b.rows();
  MultiPoly annihilator = tau(d - 1, k);
  if (!(det(b) == annihilator)) throw Error(ErrorCode::VerificationFailed, "det B_{d-1} != tau_{d-1}");

  const auto e1 = unit_vector(n, 1, k);
  std::vector<MultiPoly> solution = adjugate_apply(b, {e1}).front();
  std::vector<MultiPoly> target(n, MultiPoly(k));
  target[0] = annihilator;
  if (!(b * solution == target)) throw Error(ErrorCode::VerificationFailed, "B * adj(B) e_1 != tau e_1");

  MembershipCertificate member = solve_square(b, e1);
  if (member.has_solution()) throw Error(ErrorCode::VerificationFailed, "e_1 unexpectedly lies in the image of B");

  const PolyMatrix at_origin = b.substitute(Var::s, Scalar(0)).substitute(Var::t, Scalar(0));
  if (!at_origin.is_zero()) throw Error(ErrorCode::VerificationFailed, "B_{d-1} does not vanish at s = t = 0");
  return TorsionWitness{d, std::move(annihilator), std::move(solution), std::move(member), n};
}

/// Irreducible generator of a minimal prime of Supp Coker B_{d-1}.
struct PrimeWitness {
  MultiPoly generator;
  int source_d = 2;
  bool avoids_s = false;  // generator is not an associate of s
};

inline std::vector<PrimeWitness> prime_witnesses(int d, const Field& k, std::optional<std::uint64_t> seed = std::nullopt) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "prime_witnesses requires d >= 2, got " + std::to_string(d));
  const MultiPoly determinant = det(build_B(d - 1, k));
  const MultiPoly s = MultiPoly::var(k, Var::s);
  // s must not divide the determinant: the witnesses survive inverting s
  if (divides(s, determinant)) throw Error(ErrorCode::VerificationFailed, "s divides det B_{d-1}");
  std::vector<PrimeWitness> out;
  const FactorReport factors = factor_tau(d - 1, k, seed);
  for (const auto& f : factors.factors()) {
    if (!divides(f.poly, determinant))
      throw Error(ErrorCode::VerificationFailed, f.poly.to_string() + " does not divide det B_{d-1}");
    if (!f.poly.is_homogeneous_in({Var::s, Var::t}))
      throw Error(ErrorCode::NotHomogeneous, f.poly.to_string() + " is not homogeneous");
    out.push_back({f.poly, d, !(normalize(f.poly).second == s)});
  }
  return out;
}

/// Membership of a k[s,t] polynomial in the irrelevant ideal (s,t,x,y,u,v).
inline bool in_irrelevant_ideal(const MultiPoly& p) { return p.constant_term() == 0; }

inline bool corollary_membership(int i, const Field& k = Field::rationals()) { return in_irrelevant_ideal(tau(i, k)); }

}  // namespace locoh
