// Sequence files: CSV "k,re,im" with 17 significant digits, or JSON
// {"p", "u", "ts", "samples": [[re, im], ...]}. Both round-trip binary64
// exactly.

#pragma once

#include <iosfwd>
#include <string>

#include "zcfast/sequences.hpp"

namespace zcfast::io {

std::string format_double(double v);

void write_csv(std::ostream& os, const ComplexSequence& seq);
void write_json(std::ostream& os, const ZcParams& params, const ComplexSequence& seq);

/// Throws std::runtime_error on a malformed header, row or index sequence.
ComplexSequence read_csv(std::istream& is);
ComplexSequence read_json(std::istream& is);

}  // namespace zcfast::io
