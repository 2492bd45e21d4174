#include "toricq/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "toricq/errors.hpp"

namespace toricq {

void write_matrix(std::ostream& os, const Mat& m) {
  const Gf& f = m.field();
  os << "q=" << f.q() << " p=" << f.p() << " m=" << f.m() << " modulus=";
  for (std::size_t i = 0; i < f.modulus().size(); ++i)
    os << (i ? "," : "") << f.modulus()[i];
  os << " rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m.at(r, c);
    os << "\n";
  }
}

namespace {

long long header_value(const std::string& header, const std::string& key) {
  auto pos = header.find(key + "=");
  if (pos == std::string::npos)
    throw ConfigError("matrix header misses " + key);
  return std::stoll(header.substr(pos + key.size() + 1));
}

}  // namespace

Mat read_matrix(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ConfigError("missing matrix header");
  int p = static_cast<int>(header_value(header, "p"));
  int m = static_cast<int>(header_value(header, "m"));
  int rows = static_cast<int>(header_value(header, "rows"));
  int cols = static_cast<int>(header_value(header, "cols"));
  GfPtr f = Gf::make(p, m);

  Mat out(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("truncated matrix");
    std::istringstream row(line);
    for (int c = 0; c < cols; ++c) {
      long long v;
      if (!(row >> v) || v < 0 || v >= f->q())
        throw ConfigError("bad matrix entry");
      out.at(r, c) = static_cast<Elem>(v);
    }
  }
  return out;
}

void write_polytope(std::ostream& os, int q, int r, int b,
                    const Polytope& p) {
  os << "polytope q=" << q << " r=" << r << " b=" << b << "\n";
  for (const Point& v : p.vertices()) os << v.x << " " << v.y << "\n";
}

void write_code(std::ostream& os, const LinearCode& c, int r, int b) {
  os << "toric q=" << c.field().q() << " r=" << r << " b=" << b
     << " g=" << c.field().generator() << "\n";
  write_matrix(os, c.generator());
}

void write_code(std::ostream& os, const LinearCode& c) {
  if (!c.source())
    throw ConfigError("code has no exponent provenance to export");
  os << "exponents: ";
  const auto& pts = c.source()->points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? ";" : "") << pts[i].x << "," << pts[i].y;
  os << "\n";
  write_matrix(os, c.generator());
}

void write_css(std::ostream& os, int q, int r, int b1, int b2,
               const AsymmetricCssCode& code) {
  os << "css q=" << q << " r=" << r << " b1=" << b1 << " b2=" << b2
     << " n=" << code.n << " k=" << code.k << "\n";
  os << "GX\n";
  write_matrix(os, code.gx);
  os << "GZ\n";
  write_matrix(os, code.gz);
}

}  // namespace toricq
