#include "hwcm/harness/verdict.hpp"

#include "hwcm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hwcm {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::decayed: return "decayed";
    case Verdict::bounded: return "bounded";
    case Verdict::grew: return "grew";
    }
    return "?";
}

double log_slope(const std::vector<double>& t, const std::vector<double>& amp, double t_from) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_from || !(amp[i] > 0.0)) continue;
        const double y = std::log(amp[i]);
        sx += t[i];
        sy += y;
        sxx += t[i] * t[i];
        sxy += t[i] * y;
        ++cnt;
    }
    if (cnt < 2) return 0.0;
    const double den = cnt * sxx - sx * sx;
    return den == 0.0 ? 0.0 : (cnt * sxy - sx * sy) / den;
}

Verdict classify(const std::vector<double>& t, const std::vector<double>& amp) {
    if (t.empty() || t.size() != amp.size()) throw DomainError("classify needs matching nonempty series");
    const double t0 = t.front(), span = t.back() - t.front();
    double ref = amp.front();
    for (std::size_t i = 0; i < t.size() && t[i] <= t0 + 0.05 * span; ++i) ref = std::max(ref, amp[i]);
    const double peak = *std::max_element(amp.begin(), amp.end());
    if (peak > 10.0 * ref && log_slope(t, amp, t0 + 0.8 * span) > 0.0) return Verdict::grew;
    if (amp.back() < 1e-3 * ref) return Verdict::decayed;
    return Verdict::bounded;
}

} // namespace hwcm
