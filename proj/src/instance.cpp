#include "hopfield/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "compensated.hpp"
#include "hopfield/rng.hpp"

namespace hopfield {

const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Gaussian: return "gaussian";
    case Ensemble::Bernoulli: return "bernoulli";
    case Ensemble::Explicit: return "explicit";
  }
  return "?";
}

Ensemble parse_ensemble(const std::string& s) {
  if (s == "gaussian") return Ensemble::Gaussian;
  if (s == "bernoulli") return Ensemble::Bernoulli;
  if (s == "explicit") return Ensemble::Explicit;
  throw std::invalid_argument("unknown ensemble: " + s);
}

std::string SpinVector::to_string() const {
  std::string out;
  out.reserve(signs.size());
  for (auto s : signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

SpinVector parse_spins(const std::string& s) {
  SpinVector v;
  v.signs.reserve(s.size());
  for (char c : s) {
    if (c == '+') {
      v.signs.push_back(1);
    } else if (c == '-') {
      v.signs.push_back(-1);
    } else {
      throw std::invalid_argument("spin string must contain only '+' and '-'");
    }
  }
  return v;
}

HopfieldInstance make_instance(int m, int n, std::vector<double> entries) {
  if (m < 1 || n < 1) throw std::invalid_argument("instance dimensions must be positive");
  if (entries.size() != static_cast<std::size_t>(m) * n)
    throw std::invalid_argument("entry count does not match m*n");
  for (double v : entries)
    if (!std::isfinite(v)) throw std::invalid_argument("instance entries must be finite");
  HopfieldInstance h;
  h.m = m;
  h.n = n;
  h.entries = std::move(entries);
  h.ensemble = Ensemble::Explicit;
  return h;
}

HopfieldInstance sample_instance(int m, int n, Ensemble ensemble, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("instance dimensions must be positive");
  if (ensemble == Ensemble::Explicit)
    throw std::invalid_argument("cannot sample the explicit ensemble");
  HopfieldInstance h;
  h.m = m;
  h.n = n;
  h.ensemble = ensemble;
  h.seed = seed;
  h.entries.resize(static_cast<std::size_t>(m) * n);
  Rng rng(seed);
  if (ensemble == Ensemble::Gaussian) {
    for (double& v : h.entries) v = rng.normal();
  } else {
    for (double& v : h.entries) v = static_cast<double>(rng.sign());
  }
  return h;
}

double evaluate(const HopfieldInstance& h, const SpinVector& s) {
  if (s.size() != h.n) throw std::invalid_argument("spin vector length does not match instance");
  const auto row_term = [&](int i) {
    const double* row = h.entries.data() + static_cast<std::size_t>(i) * h.n;
    double acc = 0.0;
    for (int j = 0; j < h.n; ++j) acc += s.signs[j] > 0 ? row[j] : -row[j];
    return acc * acc;
  };
  double sq;
  if (h.m > detail::kCompensateRows) {
    detail::CompensatedSum cs;
    for (int i = 0; i < h.m; ++i) cs.add(row_term(i));
    sq = cs.total();
  } else {
    sq = 0.0;
    for (int i = 0; i < h.m; ++i) sq += row_term(i);
  }
  return std::sqrt(sq / h.n);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

HopfieldInstance read_matrix(std::istream& in) {
  int m = 0, n = 0;
  if (!(in >> m >> n)) throw std::invalid_argument("matrix file: missing 'm n' header");
  if (m < 1 || n < 1) throw std::invalid_argument("matrix file: dimensions must be positive");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  double v;
  while (entries.size() < static_cast<std::size_t>(m) * n && (in >> v)) entries.push_back(v);
  if (entries.size() != static_cast<std::size_t>(m) * n)
    throw std::invalid_argument("matrix file: expected " + std::to_string(m) + "*" +
                                std::to_string(n) + " entries");
  return make_instance(m, n, std::move(entries));
}

HopfieldInstance read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const HopfieldInstance& h) {
  out << h.m << ' ' << h.n << '\n';
  for (int i = 0; i < h.m; ++i) {
    for (int j = 0; j < h.n; ++j) {
      if (j) out << ' ';
      out << format_double(h.at(i, j));
    }
    out << '\n';
  }
}

}  // namespace hopfield
