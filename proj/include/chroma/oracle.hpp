#pragma once

#include <map>
#include <string>

#include "chroma/diagram.hpp"
#include "chroma/poly.hpp"

namespace chroma {

/// Laurent polynomial in the bracket variable A (exponent -> coefficient).
using BracketPoly = std::map<int, Int>;

/// Kauffman bracket by brute-force enumeration of all 2^n smoothing
/// states, with loop factor -A^2 - A^-2 and <unknot> = 1. Colors and
/// orientations are ignored. Serial reference implementation.
BracketPoly kauffman_bracket_serial(const ColoredDiagram& d);

/// Same state sum with the states partitioned across OpenMP threads.
/// Falls back to the serial kernel without OpenMP.
BracketPoly kauffman_bracket(const ColoredDiagram& d);

/// Sum of crossing signs.
int writhe(const ColoredDiagram& d);

/// Jones polynomial V = (-A)^(-3 writhe) <D> in the variable s = t^(1/2)
/// (A-exponent e maps to s-exponent -e/2). Exponent -> coefficient.
std::map<int, Int> jones(const ColoredDiagram& d);

/// Rendering of an s-polynomial in the same style as the main values.
std::string render_s_poly(const std::map<int, Int>& p);

}  // namespace chroma
