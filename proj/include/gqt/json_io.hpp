#pragma once

// JSON (and CSV for catalogs) encodings of the library's values.

#include <json.hpp>
#include <string>

#include "gqt/field.hpp"
#include "gqt/geocode.hpp"
#include "gqt/hermitian.hpp"
#include "gqt/kernel.hpp"
#include "gqt/linalg.hpp"
#include "gqt/nogo.hpp"
#include "gqt/protocols.hpp"

namespace gqt {

using Json = nlohmann::ordered_json;

/// {"p":..,"k":..,"modulus":[..]}
Json to_json(const FieldSpec& spec);
/// {"coeffs":[c0,...,c_{k-1}]}
Json to_json(const FieldElement& x);
/// list of elements
Json to_json(const FieldVector& v);
/// list of rows
Json to_json(const FieldMatrix& m);
/// {"dim":..,"gram":[[..]]}
Json to_json(const HermitianForm& f);
Json to_json(const TheoryDescriptor& d);

/// Self-describing point/line catalog with a (p, k, dim, modulus) header.
Json catalog_json(const KernelGeometry& geom);
/// Two CSV sections, "# points" and "# lines", after a comment header.
std::string catalog_csv(const KernelGeometry& geom);

Json to_json(const OneOrAllReport& r);
Json to_json(const CloneClassification& c);
Json to_json(const NoGoScan& s);
Json to_json(const ProtocolTranscript& t);
Json to_json(const GeoCiphertext& ct);
Json to_json(const RoundtripReport& r);

FieldSpec field_from_json(const Json& j);
/// Accepts {"coeffs":[..]}, a bare coefficient list, or polynomial text.
FieldElement element_from_json(const FieldSpec& spec, const Json& j);
FieldVector vector_from_json(const FieldSpec& spec, const Json& j);
FieldMatrix matrix_from_json(const FieldSpec& spec, const Json& j);
HermitianForm form_from_json(const FieldSpec& spec, const Json& j);

}  // namespace gqt
