#ifndef KUMMERWS_FAMILIES_HPP
#define KUMMERWS_FAMILIES_HPP

#include <optional>
#include <string>

#include "kummerws/kummer.hpp"

namespace kws {

enum class FamilyName {
  AbdonGarcia,          // c y^{q+1} = x^{q/p} + ... + x over F_{q^2}
  GeneralizedHermitian, // y^{q^n+1} = x^q + x over F_{q^{2n}}
  NormTrace,            // y^{(q^n-1)/(q-1)} = x^{q^{n-1}} + ... + x over F_{q^n}
  BmSubcover,           // y^m = x(x+1)((x^{q-1}+1)/(x+1))^{q+1} over F_{q^{2n}}
};

const char* family_name_str(FamilyName name);
std::optional<FamilyName> family_name_parse(const std::string& s);

struct FamilyParams {
  Int p = 0;  // characteristic (abdon-garcia)
  Int q = 0;  // base prime power
  Int n = 0;
  Int m = 0;  // bm-subcover only
};

struct FamilyInstance {
  FamilyName name;
  FamilyParams params;
  KummerCurve curve;
  Int p = 0;           // characteristic
  Int field_size = 0;  // size of the coding field
  Int n_rational = 0;  // rational places of the function field over that field
  Int n_split = -1;    // count of fully split x-lines; -1 when the paper does not supply it
};

/// Builds the named family; throws std::invalid_argument on any
/// family-specific precondition failure.
FamilyInstance instantiate(FamilyName name, const FamilyParams& params);

/// Genus, point count and coding field of the Beelen-Montanucci subcover from
/// the closed forms alone, defined for any m >= 2 dividing q^n + 1 (the curve
/// instantiation additionally needs q + 1 to divide m).
struct BmClosedForm {
  Int genus = 0;
  Int field_size = 0;
  Int n_rational = 0;
};
BmClosedForm bm_closed_form(Int q, Int n, Int m);

/// Hasse-Weil equality N = q' + 1 + 2 g sqrt(q') over the coding field q'.
/// Throws std::invalid_argument if field_size is not a perfect square.
bool maximality_check(const FamilyInstance& f);

/// Exact integer square root if n is a perfect square.
std::optional<Int> perfect_sqrt(Int n);

/// b^e with overflow check (throws std::overflow_error).
Int checked_pow(Int b, Int e);

}  // namespace kws

#endif
