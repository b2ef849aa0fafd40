#pragma once

#include <string>
#include <vector>

#include "schwarz/functions.hpp"

namespace schwarz {

// Complex literal "x+yi" (also plain "x", pure-imaginary "yi", "i", "-i").
// Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

// Bracketed comma-separated complex list "[a, b, ...]".
std::vector<Complex> parse_complex_list(const std::string& text);

// Function descriptors used by the CLI:
//   rational: [c0,c1,...]/[d0,d1,...]
//   rigid_scaled: a=.., b=.., eta=..
//   blaschke: [(p1,theta1),(p2,theta2),...]
MeroFunction parse_mero_function(const std::string& descriptor);

} // namespace schwarz
