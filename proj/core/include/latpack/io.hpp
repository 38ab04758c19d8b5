#pragma once

#include <string>

#include "latpack/codes.hpp"
#include "latpack/packing.hpp"

namespace latpack {

// Lattice files are JSON objects {"name", "dim", "field", "gram"} with every
// Gram entry an exact scalar string ("p/q" or "p/q+r/s*sqrt2"); packing files
// carry an extra "offsets" array of scalar-string vectors in base-lattice
// coordinates.  field is "Q" exactly when every entry is rational.  Output
// uses LF line endings and is byte-stable for equal inputs.
std::string lattice_to_json(const Lattice& l);
std::string packing_to_json(const PeriodicPacking& p);

// Parse failures throw IoError.  packing_from_json accepts a plain lattice
// file and returns it as a one-class packing; lattice_from_json rejects
// files with offsets.
Lattice lattice_from_json(const std::string& text);
PeriodicPacking packing_from_json(const std::string& text);

Lattice load_lattice(const std::string& path);
PeriodicPacking load_packing(const std::string& path);
void save_lattice(const Lattice& l, const std::string& path);
void save_packing(const PeriodicPacking& p, const std::string& path);

// Code files are text: a header line "n k" (linear) or "n nonlinear", then
// one codeword per line as '0'/'1' characters, coordinate 0 leftmost.
std::string code_to_text(const BinaryCode& c);
BinaryCode code_from_text(const std::string& text);

BinaryCode load_code(const std::string& path);
void save_code(const BinaryCode& c, const std::string& path);

} // namespace latpack
