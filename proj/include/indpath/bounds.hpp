// bounds.hpp
// Closed-form lower/upper bounds on the inducibility of the directed k-path,
// per k, plus finite-n density witnesses from iterated blow-ups. All values
// exact rationals; the semidefinite-method upper bounds for k in {4,5,6} are
// quoted decimal constants, stored verbatim and never recomputed.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indpath/numbers.hpp"

namespace indpath {

struct BoundsRow {
  int k = 0;
  Rat lower_iterated;      // k!/((k+1)^(k-1) - 1)
  Rat lower_generic;       // k!/(k^k - k)
  Rat conj_t3free;         // k!/(k+1)^(k-1)
  Rat upper_pg;            // min(1, k!/(k-1)^(k-1))
  Rat upper_knv_t3free;    // min(1, k!/k^(k-1))
  std::optional<Rat> upper_fa;            // quoted decimal, k in {4,5,6}
  std::optional<std::string> upper_fa_text;  // the decimal as quoted
};

// k >= 3
BoundsRow bounds_row(int k);

// density(iterated balanced blow-up of C_{k+1} on n vertices, P_k) by direct
// counting; k >= 2, k <= n; subset_budget caps C(n,k) enumeration work
Rat empirical_floor(int k, int n, Int subset_budget = Int(100000000));

// CSV: header + one row per k, rationals as p/q, upper_fa as quoted decimal
std::string bounds_csv(const std::vector<BoundsRow>& rows);

// aligned human table with a 6-significant-digit decimal column per value
std::string bounds_table(const std::vector<BoundsRow>& rows);

}  // namespace indpath
