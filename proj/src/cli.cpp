#include "wigstat/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wigstat/io.hpp"
#include "wigstat/spin.hpp"

namespace wig {

namespace {

Command parse_command(const std::string& s) {
    static const std::map<std::string, Command> names = {{"gaussian", Command::Gaussian},
                                                         {"harmonium", Command::Harmonium},
                                                         {"spin", Command::Spin},
                                                         {"classify", Command::Classify},
                                                         {"dump", Command::Dump}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown command: " + s);
    return it->second;
}

cplx parse_complex(const nlohmann::json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    return cplx(j.value("re", 0.0), j.value("im", 0.0));
}

// Ordered deterministic report: "key = value" lines, floats at 12
// significant digits.
class Report {
  public:
    void add(const std::string& key, const std::string& v) { lines_.emplace_back(key, v); }
    void add(const std::string& key, const char* v) { add(key, std::string(v)); }
    void add(const std::string& key, double v) { add(key, format_g12(v)); }
    void add(const std::string& key, int v) { add(key, std::to_string(v)); }
    void add(const std::string& key, bool v) { add(key, std::string(v ? "true" : "false")); }
    void add(const std::string& key, cplx v) {
        add(key, format_g12(v.real()) + " " + format_g12(v.imag()));
    }

    void write(std::ostream& os) const {
        for (const auto& [k, v] : lines_) os << k << " = " << v << '\n';
    }

  private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

void add_verdict(Report& rep, const StatisticsVerdict& v) {
    rep.add("classification", std::string(to_string(v.classification)));
    rep.add("residual_sym", v.residual_sym);
    rep.add("residual_antisym", v.residual_antisym);
    rep.add("residual_indist", v.residual_indist);
    rep.add("slices_checked", v.slices_checked);
    rep.add("tolerance", v.tolerance);
}

WignerFunction build_state(const RunConfig& cfg) {
    if (cfg.state_type == "gaussian_pair") {
        if (cfg.orbitals.size() != 2)
            throw std::invalid_argument("gaussian_pair state needs exactly 2 orbitals");
        PairGrid grid = pair_grid_for(cfg.orbitals[0], cfg.orbitals[1], cfg.grid_points);
        if (cfg.half_width) grid.dx = 2.0 * *cfg.half_width / cfg.grid_points;
        return pair_quasidensity(cfg.orbitals[0], cfg.orbitals[1], cfg.sign, grid);
    }
    if (cfg.state_type == "harmonium") {
        PairGrid grid = harmonium_grid(cfg.harmonium, cfg.grid_points);
        if (cfg.half_width) grid.dx = 2.0 * *cfg.half_width / cfg.grid_points;
        return sample_eigen_wigner(cfg.harmonium, cfg.eigen, grid);
    }
    throw std::invalid_argument("unknown state type: " + cfg.state_type);
}

int run_gaussian(const RunConfig& cfg, Report& rep) {
    if (cfg.orbitals.size() != 2) throw std::invalid_argument("gaussian: 2 orbitals required");
    const GaussianOrbital& o1 = cfg.orbitals[0];
    const GaussianOrbital& o2 = cfg.orbitals[1];
    rep.add("orbital1.d", o1.d);
    rep.add("orbital1.b", o1.b);
    rep.add("orbital2.d", o2.d);
    rep.add("orbital2.b", o2.b);
    rep.add("sign", cfg.sign);

    Grid2 g2{256, 0.0625};
    const double lam = lambda_identity_residual(o1, o2, g2);
    rep.add("lambda_identity_residual", lam);

    PairGrid grid = pair_grid_for(o1, o2, cfg.grid_points);
    if (cfg.half_width) grid.dx = 2.0 * *cfg.half_width / cfg.grid_points;
    rep.add("grid.n_points", grid.n_points);
    rep.add("grid.dx", grid.dx);
    const WignerFunction w = pair_quasidensity(o1, o2, cfg.sign, grid);
    rep.add("normalization", w.normalization().real());
    const StatisticsVerdict v = classify(w, cfg.tolerance);
    add_verdict(rep, v);

    const Statistics expected = cfg.sign > 0 ? Statistics::Bose : Statistics::Fermi;
    const bool pass = v.classification == expected && lam <= std::max(cfg.tolerance, 1e-7);
    rep.add("pass", pass);
    return pass ? 0 : 2;
}

int run_harmonium(const RunConfig& cfg, Report& rep) {
    rep.add("k", cfg.harmonium.k);
    rep.add("delta", cfg.harmonium.delta);
    rep.add("nu", cfg.harmonium.nu());
    rep.add("mu", cfg.harmonium.mu());
    rep.add("n", cfg.eigen.n);
    rep.add("m", cfg.eigen.m);

    const double half = 8.0 / std::sqrt(std::min(cfg.harmonium.nu(), cfg.harmonium.mu()));
    Grid2 g2{256, 2.0 * half / 256.0};
    const double parity = gamma_parity_residual(cfg.eigen.m, cfg.harmonium.mu(), g2);
    rep.add("gamma_parity_residual", parity);
    const double series = generating_function_residual(cfg.harmonium.mu(), cfg.series_x,
                                                       cfg.series_order, g2);
    rep.add("generating_function_residual", series);
    rep.add("series_x", cfg.series_x);
    rep.add("series_order", cfg.series_order);

    StatisticsVerdict v;
    if (cfg.half_width) {
        PairGrid grid{cfg.grid_points, 2.0 * *cfg.half_width / cfg.grid_points, 0.0};
        v = classify(sample_eigen_wigner(cfg.harmonium, cfg.eigen, grid), cfg.tolerance);
    } else {
        v = statistics_of_eigenstate(cfg.harmonium, cfg.eigen, cfg.grid_points, cfg.tolerance);
    }
    add_verdict(rep, v);

    const Statistics expected = cfg.eigen.m % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
    const bool pass = v.classification == expected && parity <= std::max(cfg.tolerance, 1e-7) &&
                      series <= std::max(cfg.tolerance, 1e-6);
    rep.add("pass", pass);
    return pass ? 0 : 2;
}

int run_spin(const RunConfig& cfg, Report& rep) {
    const SpinAlgebraCheck alg = spin_algebra_selftest(cfg.seed, cfg.random_draws);
    rep.add("seed", static_cast<int>(cfg.seed));
    rep.add("random_draws", cfg.random_draws);
    rep.add("sign_table_residual", alg.sign_table_residual);
    rep.add("multiplet_round_trip_residual", alg.round_trip_residual);
    rep.add("conjugate_pair_residual", alg.conjugate_pair_residual);

    GaussianOrbital o1 = cfg.orbitals.size() == 2 ? cfg.orbitals[0] : make_orbital(1.0, 0.0);
    GaussianOrbital o2 = cfg.orbitals.size() == 2 ? cfg.orbitals[1] : make_orbital(1.5, 0.0);
    const bool singlet = cfg.spin_state == "singlet";
    rep.add("spin_state", cfg.spin_state);
    const int orbital_sign = singlet ? +1 : -1;
    PairGrid grid = pair_grid_for(o1, o2, cfg.grid_points);
    WignerFunction w = pair_quasidensity(o1, o2, orbital_sign, grid);

    SpinProductState st;
    if (singlet) {
        st = singlet_state(std::move(w), cfg.tolerance);
    } else {
        st = triplet_state(cfg.alpha, cfg.beta, cfg.gamma, std::move(w), cfg.tolerance);
        rep.add("alpha", cfg.alpha);
        rep.add("beta", cfg.beta);
        rep.add("gamma", cfg.gamma);
    }
    rep.add("orbital_class", std::string(to_string(st.orbital_class)));
    rep.add("symmetry_warning", st.symmetry_warning);

    const Multiplet<SampledField> tm = tilde_multiplet(st);
    const MultipletSwapReport swap = check_fermi_multiplet(tm, cfg.tolerance);
    for (int i = 0; i < 16; ++i) {
        const std::string base = std::string("multiplet.") + multiplet_slot_name(i);
        rep.add(base + ".norm", swap.components[static_cast<std::size_t>(i)].norm);
        rep.add(base + ".residual", swap.components[static_cast<std::size_t>(i)].residual);
    }
    rep.add("fermi_check_worst", swap.worst);

    const OneBodyReduction red = reduce_one_body(st);
    rep.add("one_body.w0", red.physical[0]);
    rep.add("one_body.wx", red.physical[1]);
    rep.add("one_body.wy", red.physical[2]);
    rep.add("one_body.wz", red.physical[3]);

    const bool pass = swap.pass() && !st.symmetry_warning &&
                      alg.sign_table_residual <= 1e-12 && alg.round_trip_residual <= 1e-12;
    rep.add("pass", pass);
    return pass ? 0 : 2;
}

int run_classify(const RunConfig& cfg, Report& rep) {
    rep.add("state_type", cfg.state_type);
    const WignerFunction w = build_state(cfg);
    rep.add("normalization", w.normalization().real());
    rep.add("boundary_ratio", boundary_ratio(w.data()));
    const StatisticsVerdict v = classify(w, cfg.tolerance);
    add_verdict(rep, v);
    bool pass = true;
    if (cfg.expect) {
        pass = std::string(to_string(v.classification)) == *cfg.expect;
        rep.add("expected", *cfg.expect);
    }
    rep.add("pass", pass);
    return pass ? 0 : 2;
}

int run_dump(const RunConfig& cfg, Report& rep) {
    if (cfg.output_path.empty()) throw std::invalid_argument("dump: output path required");
    const WignerFunction w = build_state(cfg);
    SampledField out;
    if (cfg.dump_target == "wigner") {
        out = w.data();
    } else if (cfg.dump_target == "marginal") {
        out = marginal_position(w);
    } else if (cfg.dump_target == "slice") {
        IntraculeWigner iw = to_intracule(w);
        out = slice(iw, iw.source_x().n_points, iw.source_p().n_points).data;
    } else {
        throw std::invalid_argument("dump: unknown target " + cfg.dump_target);
    }
    const bool csv = cfg.output_path.size() > 4 &&
                     cfg.output_path.substr(cfg.output_path.size() - 4) == ".csv";
    if (csv)
        export_csv(out, cfg.output_path);
    else
        save_field(out, cfg.output_path);
    rep.add("dump_target", cfg.dump_target);
    rep.add("dump_path", cfg.output_path);
    rep.add("dump_values", static_cast<int>(out.size()));
    rep.add("pass", true);
    return 0;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed config " + path + ": " + e.what());
    }

    RunConfig cfg;
    cfg.command = parse_command(j.value("command", "classify"));
    if (j.contains("state")) {
        const auto& s = j["state"];
        cfg.state_type = s.value("type", "");
        if (s.contains("orbitals"))
            for (const auto& o : s["orbitals"])
                cfg.orbitals.push_back(make_orbital(o.value("d", 1.0), o.value("b", 0.0)));
        cfg.sign = s.value("sign", +1);
        if (s.contains("k")) cfg.harmonium = make_harmonium(s.value("k", 1.0), s.value("delta", 0.0));
        cfg.eigen.n = s.value("n", 0);
        cfg.eigen.m = s.value("m", 0);
        if (s.contains("alpha")) cfg.alpha = parse_complex(s["alpha"]);
        if (s.contains("beta")) cfg.beta = parse_complex(s["beta"]);
        if (s.contains("gamma")) cfg.gamma = parse_complex(s["gamma"]);
        cfg.spin_state = s.value("spin", cfg.spin_state);
        if (s.contains("expect")) cfg.expect = s["expect"].get<std::string>();
    }
    if (j.contains("grid")) {
        cfg.grid_points = j["grid"].value("n_points", 64);
        if (j["grid"].contains("half_width")) cfg.half_width = j["grid"]["half_width"].get<double>();
    }
    if (j.contains("series")) {
        cfg.series_order = j["series"].value("order", 20);
        cfg.series_x = j["series"].value("x", 0.5);
    }
    cfg.tolerance = j.value("tolerance", 1e-6);
    cfg.output_path = j.value("output", "");
    cfg.dump_target = j.value("dump_target", cfg.dump_target);
    cfg.seed = j.value("seed", 1u);
    cfg.random_draws = j.value("random_draws", 50);
    if (!is_power_of_two(cfg.grid_points) || cfg.grid_points < 2)
        throw std::invalid_argument("grid.n_points must be a power of two >= 2");
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& os) {
    if (cfg.threads > 0) set_max_threads(cfg.threads);
    Report rep;
    rep.add("command", [&] {
        switch (cfg.command) {
            case Command::Gaussian: return "gaussian";
            case Command::Harmonium: return "harmonium";
            case Command::Spin: return "spin";
            case Command::Classify: return "classify";
            case Command::Dump: return "dump";
        }
        return "?";
    }());
    int code = 1;
    switch (cfg.command) {
        case Command::Gaussian: code = run_gaussian(cfg, rep); break;
        case Command::Harmonium: code = run_harmonium(cfg, rep); break;
        case Command::Spin: code = run_spin(cfg, rep); break;
        case Command::Classify: code = run_classify(cfg, rep); break;
        case Command::Dump: code = run_dump(cfg, rep); break;
    }
    rep.write(os);
    return code;
}

}  // namespace wig
