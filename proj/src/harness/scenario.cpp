#include "hwcm/harness/scenario.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/harness/init.hpp"
#include "hwcm/linear/stability.hpp"
#include "hwcm/spectral/sine.hpp"
#include "hwcm/util/config.hpp"

#include <filesystem>
#include <functional>
#include <map>

namespace hwcm {

using nlohmann::json;

namespace {

const std::map<InitSpec::Kind, std::string>& kind_names() {
    static const std::map<InitSpec::Kind, std::string> names{
        {InitSpec::Kind::box_random, "box_random"},
        {InitSpec::Kind::model_gamma, "model_gamma"},
        {InitSpec::Kind::zero_bc_sin, "zero_bc_sin"},
        {InitSpec::Kind::centre, "centre"}};
    return names;
}

InitSpec::Kind kind_from(const std::string& s) {
    for (const auto& [k, v] : kind_names()) {
        if (v == s) return k;
    }
    throw DomainError("unknown initial-condition kind '" + s + "'");
}

PhysParams drift(double alpha, int n) {
    PhysParams p;
    p.alpha = alpha;
    p.kappa = 1.5;
    p.beta_phi = p.beta_rho = 1e-3;
    p.p = 1;
    p.n = n;
    return p;
}

// Field amplitudes start near 1e-2, so atol is set relative to that scale.
ImexOptions scenario_imex() {
    ImexOptions o;
    o.atol = 1e-10;
    return o;
}

Scenario periodic(std::string name, double alpha, int n, double t_end) {
    Scenario s;
    s.imex = scenario_imex();
    s.name = std::move(name);
    s.params = drift(alpha, n);
    s.t_end = t_end;
    s.tracked = {{0, 1}, {1, 1}, {1, 2}};
    return s;
}

Scenario model(std::string name, double beta) {
    Scenario s;
    s.imex = scenario_imex();
    s.name = std::move(name);
    s.params.alpha = 1.0;
    s.params.kappa = 1.0;
    s.params.beta_phi = s.params.beta_rho = beta;
    s.params.p = 2;
    s.params.n = 32;
    s.initial.kind = InitSpec::Kind::model_gamma;
    s.initial.gamma = 1e-4;
    s.t_end = 2000.0;
    s.tracked = {{0, 1}, {1, 1}, {1, 0}};
    return s;
}

Scenario zero(std::string name, PhysParams p, double t_end) {
    Scenario s;
    s.imex = scenario_imex();
    s.name = std::move(name);
    s.boundary = Boundary::zero_y;
    s.params = p;
    s.initial.kind = InitSpec::Kind::zero_bc_sin;
    s.initial.s = 0.01;
    s.t_end = t_end;
    s.tracked = {{1, 1}, {1, 0}, {1, 2}};
    return s;
}

std::vector<Scenario> registry() {
    std::vector<Scenario> r;
    r.push_back(periodic("alpha300", 300.0, 32, 5000.0));
    r.push_back(periodic("alpha280", 280.0, 32, 5000.0));
    r.push_back(periodic("alpha83", 83.0, 32, 3000.0));
    r.push_back(periodic("alpha41", 41.0, 32, 5000.0));
    r.push_back(periodic("alpha41_smallgrid", 41.0, 16, 5000.0));
    for (auto [tag, beta] : {std::pair{"1e-2", 1e-2}, {"1e-3", 1e-3}, {"1e-5", 1e-5}}) {
        r.push_back(model(std::string("model_p2_beta") + tag, beta));
        PhysParams p = r.back().params;
        r.push_back(zero(std::string("zero_model_p2_beta") + tag, p, 2000.0));
        r.back().initial.kind = InitSpec::Kind::zero_bc_sin;
    }
    r.push_back(zero("zero_alpha70", drift(70.0, 256), 5000.0));
    r.push_back(zero("zero_alpha41", drift(41.0, 256), 5000.0));

    Scenario c = periodic("compare_alpha281", 281.2, 16, 0.0);
    c.initial.kind = InitSpec::Kind::centre;
    c.compare = CompareSpec{{0, 1}, 200.0, 400.0, 1e-3, 1.0};
    c.tracked = {{0, 1}, {0, -1}};
    r.push_back(c);
    Scenario c2 = periodic("compare_alpha83", 83.2, 16, 2000.0);
    c2.initial.kind = InitSpec::Kind::centre;
    c2.compare = CompareSpec{{1, 1}, 60.0, 120.0, 1e-3, 0.0};
    c2.tracked = {{1, 1}, {-1, -1}};
    r.push_back(c2);
    return r;
}

json mode_list(const std::vector<ModeIndex>& ks) {
    json a = json::array();
    for (const auto& k : ks) a.push_back({k.kx, k.ky});
    return a;
}

} // namespace

void Scenario::validate() const {
    params.validate();
    for (const auto& k : tracked) {
        if (!in_lattice(k, params.n)) throw DomainError("tracked mode outside lattice in scenario " + name);
    }
    if (boundary == Boundary::zero_y && initial.kind != InitSpec::Kind::zero_bc_sin) {
        throw DomainError("zero_y boundary needs zero_bc_sin initial data");
    }
    if (initial.kind == InitSpec::Kind::centre && !compare) {
        throw DomainError("centre initial data needs a compare block");
    }
    if (!(sample_dt > 0.0)) throw DomainError("sample_dt must be positive");
}

json to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["boundary"] = s.boundary == Boundary::periodic ? "periodic" : "zero_y";
    j["params"] = to_json(s.params);
    j["initial"] = {{"kind", kind_names().at(s.initial.kind)}, {"seed", s.initial.seed},
                    {"cap", s.initial.cap}, {"s", s.initial.s}, {"gamma", s.initial.gamma}};
    j["t_end"] = s.t_end;
    j["sample_dt"] = s.sample_dt;
    j["grid"] = s.params.m();
    j["tracked_modes"] = mode_list(s.tracked);
    j["outputs"] = s.outputs;
    j["rtol"] = s.imex.rtol;
    j["atol"] = s.imex.atol;
    j["dt_max"] = s.imex.dt_max;
    j["nonlinear"] = s.imex.nonlinear == NonlinearPath::direct          ? "direct"
                     : s.imex.nonlinear == NonlinearPath::fft_dealiased ? "fft_dealiased"
                                                                        : "fft_aliased";
    j["stop_amplitude"] = std::isfinite(s.stop_amplitude) ? json(s.stop_amplitude) : json(nullptr);
    j["wall_budget_seconds"] =
        std::isfinite(s.wall_budget_seconds) ? json(s.wall_budget_seconds) : json(nullptr);
    if (s.compare) {
        j["compare"] = {{"mode", {s.compare->mode.kx, s.compare->mode.ky}},
                        {"bracket", {s.compare->lo, s.compare->hi}},
                        {"amplitude", s.compare->amplitude},
                        {"efoldings", s.compare->efoldings}};
    }
    return j;
}

Scenario scenario_from_json(const json& j, const Scenario& base) {
    Scenario s = base;
    s.name = j.value("name", s.name);
    if (j.contains("boundary")) {
        const auto b = j.at("boundary").get<std::string>();
        if (b == "periodic") s.boundary = Boundary::periodic;
        else if (b == "zero_y") s.boundary = Boundary::zero_y;
        else throw DomainError("unknown boundary '" + b + "'");
    }
    if (j.contains("params")) s.params = params_from_json(j.at("params"), s.params);
    if (j.contains("grid")) s = with_grid(s, j.at("grid").get<int>());
    if (j.contains("initial")) {
        const auto& i = j.at("initial");
        if (i.contains("kind")) s.initial.kind = kind_from(i.at("kind").get<std::string>());
        s.initial.seed = i.value("seed", s.initial.seed);
        s.initial.cap = i.value("cap", s.initial.cap);
        s.initial.s = i.value("s", s.initial.s);
        s.initial.gamma = i.value("gamma", s.initial.gamma);
    }
    s.t_end = j.value("t_end", s.t_end);
    s.sample_dt = j.value("sample_dt", s.sample_dt);
    if (j.contains("tracked_modes")) {
        s.tracked.clear();
        for (const auto& k : j.at("tracked_modes")) s.tracked.push_back({k.at(0).get<int>(), k.at(1).get<int>()});
    }
    s.outputs = j.value("outputs", s.outputs);
    s.imex.rtol = j.value("rtol", s.imex.rtol);
    s.imex.atol = j.value("atol", s.imex.atol);
    s.imex.dt_max = j.value("dt_max", s.imex.dt_max);
    if (j.contains("nonlinear")) {
        const auto v = j.at("nonlinear").get<std::string>();
        if (v == "direct") s.imex.nonlinear = NonlinearPath::direct;
        else if (v == "fft_dealiased") s.imex.nonlinear = NonlinearPath::fft_dealiased;
        else if (v == "fft_aliased") s.imex.nonlinear = NonlinearPath::fft_aliased;
        else throw DomainError("unknown nonlinear path '" + v + "'");
    }
    if (j.contains("stop_amplitude") && !j.at("stop_amplitude").is_null()) {
        s.stop_amplitude = j.at("stop_amplitude").get<double>();
    }
    if (j.contains("wall_budget_seconds") && !j.at("wall_budget_seconds").is_null()) {
        s.wall_budget_seconds = j.at("wall_budget_seconds").get<double>();
    }
    if (j.contains("compare")) {
        const auto& c = j.at("compare");
        CompareSpec cs = s.compare.value_or(CompareSpec{});
        if (c.contains("mode")) cs.mode = {c.at("mode").at(0).get<int>(), c.at("mode").at(1).get<int>()};
        if (c.contains("bracket")) {
            cs.lo = c.at("bracket").at(0).get<double>();
            cs.hi = c.at("bracket").at(1).get<double>();
        }
        cs.amplitude = c.value("amplitude", cs.amplitude);
        cs.efoldings = c.value("efoldings", cs.efoldings);
        s.compare = cs;
    }
    s.validate();
    return s;
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& s : registry()) names.push_back(s.name);
    return names;
}

Scenario find_scenario(const std::string& name) {
    for (auto& s : registry()) {
        if (s.name == name) return s;
    }
    throw DomainError("unknown scenario '" + name + "'");
}

Scenario with_grid(Scenario s, int grid) {
    if (grid < 2 || grid % 2 != 0) throw DomainError("grid must be a positive even number");
    s.params.n = grid / 2;
    return s;
}

StateVector make_initial(const Scenario& s) {
    const int n = s.params.n;
    switch (s.initial.kind) {
    case InitSpec::Kind::box_random: return init_box_random(s.initial.seed, n, s.initial.cap);
    case InitSpec::Kind::model_gamma: return init_model_gamma(s.initial.seed, n, s.initial.gamma);
    case InitSpec::Kind::zero_bc_sin: return init_zero_bc(s.initial.seed, n, s.initial.s);
    case InitSpec::Kind::centre: {
        const auto& c = s.compare.value();
        PhysParams star = s.params;
        star.alpha = critical_alpha(c.mode, s.params, c.lo, c.hi);
        const auto sys = build_reduced_system(star, SuspendedParam::alpha);
        const std::vector<cplx> x(sys.a(), c.amplitude);
        return lift(rebind_epsilon(sys, s.params.alpha - star.alpha), x, s.params.alpha - star.alpha);
    }
    }
    throw DomainError("unhandled initial-condition kind");
}

std::string run_directory(const Scenario& s) {
    return (std::filesystem::path(s.outputs) /
            (s.name + "_g" + std::to_string(s.params.m()) + "_s" + std::to_string(s.initial.seed)))
        .string();
}

ScenarioResult run_scenario(const Scenario& s) {
    s.validate();
    const json cfg = to_json(s);
    FullRunConfig fc;
    fc.t_end = s.t_end;
    fc.sample_dt = s.sample_dt;
    fc.tracked = s.tracked;
    fc.imex = s.imex;
    fc.imex.odd_x = s.boundary == Boundary::zero_y;
    fc.stop_amplitude = s.stop_amplitude;
    fc.wall_budget_seconds = s.wall_budget_seconds;
    fc.meta = {{"scenario", cfg}, {"params", to_json(s.params)}, {"seed", s.initial.seed},
               {"config_hash", config_hash(cfg)}};

    ScenarioResult out;
    out.directory = run_directory(s);
    fc.failure_dump_dir = out.directory;
    const StateVector init = make_initial(s);
    RunRecord partial;
    try {
        out.record = integrate_full(init, s.params, fc, &partial);
    } catch (const IntegrationError& e) {
        partial.meta["error"] = e.what();
        partial.save(out.directory, "run");
        throw;
    }
    json verdicts = json::object();
    for (std::size_t c = 0; c < s.tracked.size(); ++c) {
        out.verdicts.push_back(classify(out.record.t, out.record.amplitude(c)));
        verdicts[out.record.labels[c]] = std::string(to_string(out.verdicts.back()));
    }
    out.record.meta["verdicts"] = verdicts;
    out.record.save(out.directory, "run");
    return out;
}

} // namespace hwcm
