#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hopfield {

enum class Ensemble { Gaussian, Bernoulli, Explicit };

const char* to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& s);

/// An m x n pattern matrix H with sampling metadata. Immutable after
/// creation; safe to share across threads.
struct HopfieldInstance {
  int m = 0;
  int n = 0;
  std::vector<double> entries;  // row-major, size m*n, all finite
  Ensemble ensemble = Ensemble::Explicit;
  std::optional<std::uint64_t> seed;

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// Spin assignment s in {-1,+1}^n; represents x = s/sqrt(n).
struct SpinVector {
  std::vector<std::int8_t> signs;

  int size() const { return static_cast<int>(signs.size()); }
  std::string to_string() const;  // e.g. "+-++"
};

SpinVector parse_spins(const std::string& s);

/// Build an Explicit instance, validating dimensions and finiteness.
HopfieldInstance make_instance(int m, int n, std::vector<double> entries);

/// Sample an instance with i.i.d. entries: standard normal (Gaussian) or
/// uniform +-1 (Bernoulli). Deterministic function of (m, n, ensemble, seed).
HopfieldInstance sample_instance(int m, int n, Ensemble ensemble, std::uint64_t seed);

/// ||H s||_2 / sqrt(n), i.e. ||H x||_2 for x = s/sqrt(n).
double evaluate(const HopfieldInstance& h, const SpinVector& s);

// Matrix file format: first line "m n", then m lines of n space-separated
// decimal floats; UTF-8, LF line endings. The writer emits shortest
// round-trip representations.
HopfieldInstance read_matrix(std::istream& in);
HopfieldInstance read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const HopfieldInstance& h);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace hopfield
