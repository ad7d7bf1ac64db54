#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "signiter/exact_linalg.hpp"
#include "signiter/poly.hpp"

namespace signiter {

/// The 2s linear conditions a^(k)(1) = b^(k)(1), a^(k)(-1) = -b^(k)(-1),
/// k = 0..s-1, on the coefficients of a (degree <= m) and b (degree <= n).
/// Row 2k is the condition at +1, row 2k+1 the one at -1. Columns hold the
/// m+1 coefficients of a followed by the n+1 coefficients of b, ascending.
/// A degree bound of -1 means that polynomial is identically zero.
struct OrderConditionSystem {
  int m = 0;
  int n = 0;
  int s = 0;
  RationalMatrix matrix;
};

OrderConditionSystem order_condition_matrix(int m, int n, int s);

std::vector<RationalVector> exact_nullspace(const OrderConditionSystem& sys);

/// Splits a coefficient vector of `sys` into the pair (a, b).
PolyPair split_coefficients(const OrderConditionSystem& sys, const RationalVector& v);

/// A pair of exact degrees (m, n), m + n = 2s - 1, meeting the order-s
/// conditions at both square roots of unity.
struct MinimalPair {
  Poly a;
  Poly b;
  int m = 0;
  int n = 0;
  int s = 0;

  PolyPair pair() const { return {a, b}; }
};

/// Builds the minimal pair by stepping down (m, n, s) -> (m-1, n-1, s-1) to a
/// base case and integrating back up, fixing the free constant at every level
/// to 1. The result is canonically scaled. Requires m + n odd and positive,
/// min(m, n) >= -1; throws std::invalid_argument otherwise.
MinimalPair construct_by_recursion(int m, int n);

/// The minimal pair as the single nullspace vector of the order-condition
/// system, canonically scaled. Throws std::logic_error if the nullity is not 1.
MinimalPair construct_by_nullspace(int m, int n);

struct OrderCheck {
  bool holds = false;             // all 2s conditions
  bool strict_at_plus1 = false;   // a^(s)(1) != b^(s)(1)
  bool strict_at_minus1 = false;  // a^(s)(-1) != -b^(s)(-1)
};

OrderCheck verify_order_conditions(const Poly& a, const Poly& b, int s);

/// The exact common order of convergence of z -> a(z)/b(z) at +1 and -1.
/// Throws std::domain_error if either point is not a fixed point with
/// b nonzero there.
int exact_order_at_fixed_points(const Poly& a, const Poly& b);

struct ScanRecord {
  int m = 0;
  int n = 0;
  int s = 0;
  std::size_t nullity = 0;
  /// Strictness of the nullspace pair; only set for m + n = 2s - 1.
  std::optional<bool> strict;
  /// Nullity 0 below the bound, nullity 1 plus strictness on it.
  bool certified = false;
};

struct ScanReport {
  int s = 0;
  std::vector<ScanRecord> records;

  bool certified() const;
};

/// Certifies every degree pair (m', n') with m', n' >= 0 and
/// m' + n' <= 2s - 1 against the degree bound and uniqueness claims.
ScanReport optimality_scan(int s);

/// True iff p2 = k p1 componentwise for some nonzero rational k.
bool equal_up_to_scalar(const PolyPair& p1, const PolyPair& p2);

}  // namespace signiter
