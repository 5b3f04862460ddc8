#pragma once

#include <string_view>
#include <vector>

namespace hwcm {

enum class Verdict { decayed, bounded, grew };

std::string_view to_string(Verdict v);

/// Least-squares slope of log(amp) against t over samples with t >= t_from.
double log_slope(const std::vector<double>& t, const std::vector<double>& amp, double t_from);

/// grew: max amplitude above 10x the initial reference and positive log slope
/// over the last 20% of the time span. decayed: final amplitude below 1e-3x
/// the reference. The reference is the largest amplitude in the first 5% of
/// the span (always including the first sample). Otherwise bounded.
Verdict classify(const std::vector<double>& t, const std::vector<double>& amp);

} // namespace hwcm
