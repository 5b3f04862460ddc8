#include "hwcm/manifold/reduced_io.hpp"

#include "hwcm/util/config.hpp"

#include <fstream>

namespace hwcm {

namespace {

using nlohmann::json;

json slot_json(EigenSlot s) {
    return {{"kx", s.mode.kx}, {"ky", s.mode.ky}, {"branch", s.branch == Branch::plus ? "+" : "-"}};
}

json sparse_json(const SparseC& m) {
    json arr = json::array();
    for (int col = 0; col < m.outerSize(); ++col) {
        for (SparseC::InnerIterator it(m, col); it; ++it) {
            arr.push_back({{"row", it.row()}, {"col", col}, {"re", it.value().real()}, {"im", it.value().imag()}});
        }
    }
    return arr;
}

} // namespace

json reduced_to_json(const ReducedSystem& sys) {
    json gen = {{"params", to_json(sys.params)},
                {"suspended", std::string(to_string(sys.suspension.which))},
                {"epsilon_star", sys.suspension.epsilon_star},
                {"epsilon", sys.epsilon},
                {"centre_tol", sys.part.tol}};
    json doc;
    doc["generator"] = gen;
    doc["config_hash"] = config_hash(gen);
    doc["centre_modes"] = json::array();
    for (std::size_t j = 0; j < sys.a(); ++j) {
        json e = slot_json(sys.part.centre[j]);
        e["lambda_re"] = sys.lambda_x[j].real();
        e["lambda_im"] = sys.lambda_x[j].imag();
        doc["centre_modes"].push_back(e);
    }
    doc["stable_count"] = sys.b();
    doc["M11"] = sparse_json(sys.m11);
    doc["M12"] = sparse_json(sys.m12);
    doc["M21"] = sparse_json(sys.m21);
    doc["M22"] = sparse_json(sys.m22);
    doc["psi_l"] = sparse_json(sys.psi_l);
    doc["xi"] = json::array();
    for (const auto& t : sys.xi) {
        json e = slot_json(sys.part.stable[t.row]);
        e["j1"] = t.j1;
        e["j2"] = t.j2;
        e["re"] = t.xi.real();
        e["im"] = t.xi.imag();
        doc["xi"].push_back(e);
    }
    doc["linear_coefficients"] = json::array();
    for (const auto& c : linear_coefficients(sys)) {
        json e = slot_json(c.slot);
        e["lambda"] = {c.lambda.real(), c.lambda.imag()};
        e["eps1"] = {c.eps1.real(), c.eps1.imag()};
        e["eps2"] = {c.eps2.real(), c.eps2.imag()};
        doc["linear_coefficients"].push_back(e);
    }
    return doc;
}

void write_reduced_json(const std::string& path, const ReducedSystem& sys) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << reduced_to_json(sys).dump(1) << '\n';
}

} // namespace hwcm
