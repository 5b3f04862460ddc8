#include "hwcm/util/config.hpp"

#include <cstdio>

namespace hwcm {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const nlohmann::json& doc) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(doc.dump())));
    return buf;
}

nlohmann::json to_json(const PhysParams& p) {
    return {{"alpha", p.alpha}, {"kappa", p.kappa}, {"beta_phi", p.beta_phi},
            {"beta_rho", p.beta_rho}, {"p", p.p}, {"n", p.n}};
}

PhysParams params_from_json(const nlohmann::json& j, PhysParams d) {
    d.alpha = j.value("alpha", d.alpha);
    d.kappa = j.value("kappa", d.kappa);
    if (j.contains("beta")) d.beta_phi = d.beta_rho = j.at("beta").get<double>();
    d.beta_phi = j.value("beta_phi", d.beta_phi);
    d.beta_rho = j.value("beta_rho", d.beta_rho);
    d.p = j.value("p", d.p);
    d.n = j.value("n", d.n);
    d.validate();
    return d;
}

} // namespace hwcm
