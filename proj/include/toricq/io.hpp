#pragma once

#include <iosfwd>

#include "toricq/css.hpp"
#include "toricq/lattice.hpp"
#include "toricq/matrix.hpp"
#include "toricq/toric.hpp"

namespace toricq {

/// Header `q=.. p=.. m=.. modulus=c0,c1,.. rows=.. cols=..`, then one line
/// of space-separated canonical encodings per row.
void write_matrix(std::ostream& os, const Mat& m);
Mat read_matrix(std::istream& is);

/// `polytope q=.. r=.. b=..` followed by one `x y` vertex per line.
void write_polytope(std::ostream& os, int q, int r, int b,
                    const Polytope& p);

/// Provenance line (`toric q=.. r=.. b=.. g=..` for family codes, otherwise
/// `exponents: x,y;x,y;...`), then the generator in the matrix format.
void write_code(std::ostream& os, const LinearCode& c, int r, int b);
void write_code(std::ostream& os, const LinearCode& c);

/// `css q=.. r=.. b1=.. b2=.. n=.. k=..`, then labeled GX and GZ blocks.
void write_css(std::ostream& os, int q, int r, int b1, int b2,
               const AsymmetricCssCode& code);

}  // namespace toricq
