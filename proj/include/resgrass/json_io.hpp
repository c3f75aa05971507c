#pragma once

#include <iosfwd>
#include <string>

#include "resgrass/diagonalize.hpp"
#include "resgrass/elements.hpp"
#include "resgrass/pathology.hpp"

namespace resgrass {

// Readers parse the documented JSON schemas and reject shape mismatches.
BlockOperator read_block_operator(const std::string& json_text);
BlockOperator read_block_operator_file(const std::string& path);
ExtendedElement read_extended_element(const std::string& json_text);
GrassmannPoint read_grassmann_point(const std::string& json_text);

// Writers emit numbers with 17 significant digits so that output is
// byte-identical across runs and round-trips exactly.
std::string format_double(double v);

void write_block_operator(std::ostream& os, const BlockOperator& op);
void write_extended_element(std::ostream& os, const ExtendedElement& x);
void write_grassmann_point(std::ostream& os, const GrassmannPoint& w);
void write_riccati_report(std::ostream& os, const RiccatiReport& r);
void write_unbounded_report(std::ostream& os, const UnboundedReport& r);
void write_cartan_report(std::ostream& os, const CartanReport& r);

std::string to_json(const BlockOperator& op);

}  // namespace resgrass
