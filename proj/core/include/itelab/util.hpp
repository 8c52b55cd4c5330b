#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace itelab {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Least-squares line fit y = slope*x + intercept with the standard error of
// the slope (used for zero-density and log-log decay-rate fits).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> linspace(double a, double b, int n);
std::vector<double> geomspace(double a, double b, int n);

// Formats with 17 significant digits; round-trips any double exactly.
std::string fmt17(double v);

// FNV-1a 64-bit over bytes, hex-encoded. Cheap deterministic content hash
// used to stamp artifacts with the config they came from.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

// Runs fn(i) for i in [0, n); with threads > 1 the index range is split into
// contiguous chunks, so results written by index are deterministic.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace itelab
