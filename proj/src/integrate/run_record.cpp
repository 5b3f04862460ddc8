#include "hwcm/integrate/run_record.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace hwcm {

std::vector<double> RunRecord::amplitude(std::size_t column) const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& row : values) out.push_back(std::abs(row.at(column)));
    return out;
}

void RunRecord::write_csv(std::ostream& os) const {
    os << "t";
    for (const auto& l : labels) os << ",\"re_" << l << "\",\"im_" << l << '"';
    os << '\n';
    os.precision(17);
    for (std::size_t s = 0; s < t.size(); ++s) {
        os << t[s];
        for (const auto& v : values[s]) os << ',' << v.real() << ',' << v.imag();
        os << '\n';
    }
}

nlohmann::json RunRecord::sidecar() const {
    nlohmann::json j = meta;
    j["steps"] = steps;
    j["rejected_steps"] = rejected;
    j["wall_seconds"] = wall_seconds;
    j["stop_reason"] = stop_reason;
    j["samples"] = t.size();
    j["t_final"] = t.empty() ? 0.0 : t.back();
    j["columns"] = labels;
    return j;
}

void RunRecord::save(const std::string& dir, const std::string& stem) const {
    std::filesystem::create_directories(dir);
    const auto base = std::filesystem::path(dir) / stem;
    std::ofstream csv(base.string() + ".csv");
    if (!csv) throw std::runtime_error("cannot write " + base.string() + ".csv");
    write_csv(csv);
    std::ofstream js(base.string() + ".json");
    js << sidecar().dump(2) << '\n';
}

std::string mode_label(const std::string& field, ModeIndex k) {
    return field + "(" + std::to_string(k.kx) + "," + std::to_string(k.ky) + ")";
}

} // namespace hwcm
