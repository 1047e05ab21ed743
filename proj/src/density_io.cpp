#include "diagroof/density_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace diagroof {

namespace {

bool read_number(const char*& p, double& out) {
  char* end = nullptr;
  errno = 0;
  out = std::strtod(p, &end);
  if (end == p || errno == ERANGE || !std::isfinite(out)) return false;
  p = end;
  return true;
}

}  // namespace

std::complex<double> parse_complex(const std::string& token) {
  const char* p = token.c_str();
  const char* const end = p + token.size();
  double first = 0.0;
  if (!read_number(p, first)) throw ParseError("bad complex entry '" + token + "'");
  if (p == end) return {first, 0.0};
  if ((*p == 'j' || *p == 'i') && p + 1 == end) return {0.0, first};
  if (*p != '+' && *p != '-') throw ParseError("bad complex entry '" + token + "'");
  double second = 0.0;
  if (!read_number(p, second)) throw ParseError("bad imaginary part in '" + token + "'");
  if (p + 1 != end || (*p != 'j' && *p != 'i')) throw ParseError("imaginary part must end with 'j' in '" + token + "'");
  return {first, second};
}

std::string format_complex(std::complex<double> c) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << c.real() << (std::signbit(c.imag()) ? '-' : '+')
     << std::abs(c.imag()) << 'j';
  return os.str();
}

DensityMatrix read_density_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw ParseError("missing dimension line");
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("dimension '" + token + "' is not an integer");
  }
  if (used != token.size() || n < 1 || n > 64) throw ParseError("dimension '" + token + "' is not an integer in [1, 64]");

  ComplexMatrix m(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (!(in >> token)) throw ParseError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(i * n + j));
      m(i, j) = parse_complex(token);
    }
  }
  if (in >> token) throw ParseError("trailing content '" + token + "'");
  return DensityMatrix(m);
}

DensityMatrix read_density_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_density_matrix(in);
}

void write_density_matrix(std::ostream& out, const DensityMatrix& omega) {
  const auto& m = omega.matrix();
  out << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << format_complex(m(i, j));
    out << '\n';
  }
}

}  // namespace diagroof
