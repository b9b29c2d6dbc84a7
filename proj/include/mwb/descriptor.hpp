#pragma once

#include <string>
#include <vector>

#include "mwb/archgamma.hpp"
#include "mwb/lfactor.hpp"

namespace mwb {

// Wire format for a representation datum:
//   {"kind": "sp"|"gl", "m": int, "field": "padic"|"complex",
//    "q": int (padic only),
//    "eigenvalues": ["zeta(a/b)*q^(u/v)", ...] or [[re, im], ...] (padic only),
//    "characters": [[l, t_re, t_im], ...] (complex only)}
// Schema violations, zero eigenvalues, and p-adic fields without 2m | q-1 are
// input_errors. dump_descriptor emits a canonical form: parsing and re-dumping
// any accepted text reproduces the canonical text byte for byte.
struct RepDescriptor {
  std::string kind;   // "gl" | "sp"
  std::string field;  // "padic" | "complex"
  uint32_t m = 1;
  uint32_t q = 0;  // padic only
  bool exact = false;
  std::vector<ExactEig> exact_eigs;
  std::vector<cx> numeric_eigs;
  std::vector<ComplexCharacter> chars;
};

RepDescriptor parse_descriptor(const std::string& json_text);
RepDescriptor load_descriptor_file(const std::string& path);
std::string dump_descriptor(const RepDescriptor& d);

// Exact eigenvalue text: "1", "zeta(a/b)", "q^(u/v)", or "zeta(a/b)*q^(u/v)",
// the value being e^{2 pi i a/b} q^{u/v}.
std::string exact_eig_str(const ExactEig& e);
ExactEig parse_exact_eig(const std::string& text);

SatakeRepExact descriptor_to_exact(const RepDescriptor& d);
SatakeRepNum descriptor_to_numeric(const RepDescriptor& d);
ComplexRep descriptor_to_complex(const RepDescriptor& d);

}  // namespace mwb
