// bounds.cpp

#include "indpath/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "indpath/constructions.hpp"
#include "indpath/counting.hpp"

namespace indpath {

namespace {

Rat clamp_to_one(const Rat& r) { return r > 1 ? Rat(1) : r; }

const char* quoted_fa(int k) {
  switch (k) {
    case 4: return "0.19356";
    case 5: return "0.092676";
    case 6: return "0.04323";
    default: return nullptr;
  }
}

}  // namespace

BoundsRow bounds_row(int k) {
  if (k < 3) throw Error(Errc::OutOfRange, "bounds need k >= 3");
  BoundsRow row;
  row.k = k;
  const Int kf = factorial(k);
  row.lower_iterated = Rat(kf, ipow(Int(k + 1), k - 1) - 1);
  row.lower_generic = Rat(kf, ipow(Int(k), k) - k);
  row.conj_t3free = Rat(kf, ipow(Int(k + 1), k - 1));
  row.upper_pg = clamp_to_one(Rat(kf, ipow(Int(k - 1), k - 1)));
  row.upper_knv_t3free = clamp_to_one(Rat(kf, ipow(Int(k), k - 1)));
  if (const char* fa = quoted_fa(k)) {
    row.upper_fa_text = std::string(fa);
    row.upper_fa = parse_rat(fa);
  }
  return row;
}

Rat empirical_floor(int k, int n, Int subset_budget) {
  if (k < 2) throw Error(Errc::OutOfRange, "floor needs k >= 2");
  if (n < k)
    throw Error(Errc::SizeMismatch, "need n >= k, got n = " + std::to_string(n) +
                                        ", k = " + std::to_string(k));
  Int work = binomial(n, k);
  if (work > subset_budget)
    throw Error(Errc::ResourceLimit,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                    work.str() + " subsets exceed the budget " +
                    subset_budget.str());
  OrientedGraph g = iterated_balanced_blow_up({directed_cycle(k + 1), n});
  Int count = k == 4 ? count_p4(g) : count_induced(g, directed_path(k));
  return Rat(count, work);
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "k,lower_iterated,lower_generic,conj_t3free,upper_pg,"
         "upper_knv_t3free,upper_fa\n";
  for (const auto& r : rows) {
    out << r.k << "," << rat_str(r.lower_iterated) << ","
        << rat_str(r.lower_generic) << "," << rat_str(r.conj_t3free) << ","
        << rat_str(r.upper_pg) << "," << rat_str(r.upper_knv_t3free) << ","
        << (r.upper_fa_text ? *r.upper_fa_text : "") << "\n";
  }
  return out.str();
}

std::string bounds_table(const std::vector<BoundsRow>& rows) {
  const std::vector<std::string> headers = {
      "k",        "lower_iterated", "lower_generic", "conj_t3free",
      "upper_pg", "upper_knv_t3free", "upper_fa"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(headers);
  for (const auto& r : rows) {
    auto cell = [](const Rat& v) {
      return rat_str(v) + " (" + rat_decimal(v) + ")";
    };
    cells.push_back({std::to_string(r.k), cell(r.lower_iterated),
                     cell(r.lower_generic), cell(r.conj_t3free),
                     cell(r.upper_pg), cell(r.upper_knv_t3free),
                     r.upper_fa_text ? *r.upper_fa_text : "-"});
  }
  std::vector<size_t> width(headers.size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size())
        out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace indpath
