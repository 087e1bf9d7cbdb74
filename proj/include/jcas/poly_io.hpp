#ifndef JCAS_POLY_IO_HPP
#define JCAS_POLY_IO_HPP

#include <string_view>

#include <json.hpp>

#include <jcas/poly.hpp>

namespace jcas {

// Parses expressions such as "x^2*y - 1/2*x^(1/3) + (x+1)^3*y^-1". Every
// identifier must be a ring variable. Throws ParseError.
Poly parse_poly(std::string_view text, const RingPtr &ring);

// {"vars": [...], "denom": D, "terms": [[[e...], [num, den]], ...]}.
// Integers beyond 64 bits are written as decimal strings.
nlohmann::json poly_to_json(const Poly &f);
Poly poly_from_json(const nlohmann::json &j);
// Reads into a given ring (vars matched by name, denominators rescaled).
Poly poly_from_json(const nlohmann::json &j, const RingPtr &ring);

nlohmann::json rational_to_json(const Rational &q);
Rational rational_from_json(const nlohmann::json &j);

} // namespace jcas

#endif
