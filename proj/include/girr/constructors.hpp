#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girr/classify.hpp"
#include "girr/linear_fp.hpp"
#include "girr/perm_group.hpp"

namespace girr {

/// Parameters that violate a case's arithmetic or fail post-construction
/// checks.  The message starts with "PARAMS-INVALID: ".
class ParamsInvalid : public std::runtime_error {
 public:
  explicit ParamsInvalid(const std::string& condition) : std::runtime_error("PARAMS-INVALID: " + condition) {}
};

struct CaseParams {
  CaseTag tag = CaseTag::a1;
  std::int64_t p = 2;
  int n = 1;
  std::int64_t d = 1;
  int height = 1;  // central q-power height for a3 / a7
};

/// Companion matrix of primitive_polynomial(p, n); order p^n - 1.
FpMatrix singer_matrix(std::int64_t p, int n);

/// V x| <mats> on the p^n vectors.  With height h > 1 the matrix group must be
/// cyclic of prime order m; the complement becomes C_{m^h} acting through C_m,
/// realized on the vectors plus a regular orbit of the cyclic group.
PermGroup affine_semidirect(std::int64_t p, int n, std::span<const FpMatrix> mats, int height = 1);

/// Generators x, y of a generalized quaternion subgroup of SL(2,p) of the
/// given order: x of order order/2, y^2 = x^(order/4), y^-1 x y = x^-1.
std::pair<FpMatrix, FpMatrix> quaternion_subgroup_SL2(std::int64_t p, std::int64_t order);

/// Extraspecial group of order p^3 acting regularly: the Heisenberg group for
/// odd p, Q8 for p = 2.
PermGroup heisenberg(std::int64_t p);
PermGroup quaternion8();

/// E(p^{1+2}) x| <mats> with mats in GL(2,p) acting on P/Z by the matrix and on
/// Z by the determinant.  For p = 2 only powers of the order-3 automorphism
/// are accepted.  Height h > 1 works as in affine_semidirect.
PermGroup extraspecial_semidirect(std::int64_t p, std::span<const FpMatrix> mats, int height = 1);

/// Checks the case arithmetic and returns the order of the group it describes.
std::int64_t case_order(const CaseParams& params);
/// Builds the group for a parameter point, checking the case arithmetic first.
PermGroup build_case(const CaseParams& params);
/// Frobenius, irreducibility and scalar-transitivity checks on the action
/// defining the case.  Throws ParamsInvalid naming the failed condition.
void validate_case(const CaseParams& params);
/// build_case followed by validate_case.
PermGroup construct_case(const CaseParams& params);

/// Matrices over F_p^n that define the action in a case (H modulo C).
std::vector<FpMatrix> case_matrices(const CaseParams& params);

std::string describe(const CaseParams& params);

}  // namespace girr
