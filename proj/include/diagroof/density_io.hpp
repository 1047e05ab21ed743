#pragma once

#include <iosfwd>
#include <string>

#include "diagroof/quantum_states.hpp"

namespace diagroof {

// Text format: first line N, then N rows of N whitespace-separated complex
// entries written as "re", "re+imj", "re-imj" or "imj".

std::complex<double> parse_complex(const std::string& token);
std::string format_complex(std::complex<double> c);

/// Throws ParseError on malformed text and DomainError when the matrix is
/// not a valid state.
DensityMatrix read_density_matrix(std::istream& in);
DensityMatrix read_density_matrix_file(const std::string& path);

void write_density_matrix(std::ostream& out, const DensityMatrix& omega);

}  // namespace diagroof
