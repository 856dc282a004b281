#pragma once

#include <vector>

#include "solenoid/numeric.hpp"

namespace solenoid::quadform {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  Int a, b, c;
  bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Form& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

Int discriminant(const Form& f);

/// Reduced indefinite form: 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b.
/// All comparisons against sqrt(D) are exact integer tests (D nonsquare).
bool is_reduced(const Form& f, const Int& D);

/// One step of the Gauss reduction operator; on reduced forms this is the
/// cycle shift.
Form rho(const Form& f, const Int& D);

/// Some reduced form in the proper equivalence class of f.
Form reduce(const Form& f, const Int& D);

/// The full cycle of reduced forms of f's class.
std::vector<Form> cycle(const Form& f, const Int& D);

/// Proper (SL(2,Z)) equivalence, decided by cycle membership. Requires
/// positive nonsquare discriminant; content is preserved throughout, so
/// imprimitive forms compare correctly without scaling.
bool properly_equivalent(const Form& f, const Form& g);

}  // namespace solenoid::quadform
