#pragma once

#include "hwcm/spectral/field.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hwcm {

/// Sampled time series of complex observables plus run metadata.
struct RunRecord {
    std::vector<std::string> labels; ///< one per observable column
    std::vector<double> t;
    std::vector<std::vector<cplx>> values; ///< values[sample][column]

    nlohmann::json meta;       ///< params, seed, config hash, ...
    long steps = 0;
    long rejected = 0;
    double wall_seconds = 0.0;
    std::string stop_reason = "completed"; ///< completed | amplitude_cap | wall_budget | failed

    std::size_t columns() const { return labels.size(); }
    /// |value| of one column over all samples.
    std::vector<double> amplitude(std::size_t column) const;

    /// Header t,"re_<label>","im_<label>",... (quoted: labels contain commas), then one line per sample.
    void write_csv(std::ostream& os) const;
    nlohmann::json sidecar() const;
    /// Writes <dir>/<stem>.csv and <dir>/<stem>.json.
    void save(const std::string& dir, const std::string& stem) const;
};

/// Column label for a Fourier mode, e.g. "phi(0,-1)".
std::string mode_label(const std::string& field, ModeIndex k);

} // namespace hwcm
