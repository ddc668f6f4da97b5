#pragma once

#include "novikov/complex.hpp"
#include "novikov/persistence.hpp"

#include <map>
#include <string>

namespace nov {

// {"precision": "12", "generators": [{"name", "degree"?, "filtration"}],
//  "differential": [{"from", "to", "coeff": ["0", "3/2"]}], "maps": {"D": [...]}}
// An entry puts sum_e T^e on generator `to` in the image of `from`; repeated
// entries add. Unlisted entries are exact zeros.
struct ComplexDocument {
    FilteredComplex complex;
    std::map<std::string, Matrix> maps;
};

// Throws FormatError (with a JSON pointer to the offending field) and, when
// check is set, ValidationError for an invalid differential. A given precision
// replaces the document's.
ComplexDocument parse_complex(const std::string& text, bool check = true, const ExtExponent& precision = std::nullopt);
std::string serialize_complex(const FilteredComplex& c, const std::map<std::string, Matrix>& maps = {});

// {"bars": [{"birth", "length": "3/2" | "inf", "multiplicity"?, "degree"?}]}
Barcode parse_barcode(const std::string& text);
std::string serialize_barcode(const Barcode& b);

// {"period_action", "period_index", "kappa"?, "window": [barcode documents]}
PeriodicBarcode parse_periodic(const std::string& text);
std::string serialize_periodic(const PeriodicBarcode& p);

// Matching certificate for audit.
std::string serialize_matching(const Barcode& b1, const Barcode& b2, const Matching& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace nov
