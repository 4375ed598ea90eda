#ifndef KUMMERWS_TABLES_HPP
#define KUMMERWS_TABLES_HPP

#include <string>
#include <vector>

#include "kummerws/semigroup.hpp"

namespace kws {

// Code tables on the curve y^65 = x(x+1)((x^3+1)/(x+1))^5 over F_{2^12}
// (q = 4, n = 3): one-point duals of length 15872 and two-point codes of
// length 15871.

struct Table1Row {
  Int k = 0;
  Int rho_ell = 0;
  Int d_lower = 0;
};

struct Table2Row {
  Int k = 0;
  Int d_lower = 0;
  std::string provenance;
};

std::vector<Table1Row> compute_table1();
std::vector<Table2Row> compute_table2();

const std::vector<Table1Row>& golden_table1();
const std::vector<Table2Row>& golden_table2();

/// CSV with header row; `which` is 1 or 2.
std::string table_csv(int which);

/// True iff the computed table matches the golden values exactly.
bool table_check(int which);

}  // namespace kws

#endif
