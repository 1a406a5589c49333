#include "wigstat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wig {

std::string format_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

static std::string format_g17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void save_field(const SampledField& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_field: cannot open " + path);
    nlohmann::ordered_json header;
    header["axes"] = nlohmann::ordered_json::array();
    for (const Axis& a : f.axes()) {
        nlohmann::ordered_json ja;
        ja["n_points"] = a.n_points;
        ja["spacing"] = a.spacing;
        ja["origin_index"] = a.origin_index;
        header["axes"].push_back(ja);
    }
    header["layout"] = "row-major";
    out << header.dump() << '\n';
    for (const cplx& v : f.values())
        out << format_g17(v.real()) << ' ' << format_g17(v.imag()) << '\n';
    if (!out) throw std::runtime_error("save_field: write failed for " + path);
}

SampledField load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_field: missing header");
    nlohmann::json header = nlohmann::json::parse(line);
    std::vector<Axis> axes;
    for (const auto& ja : header.at("axes")) {
        Axis a;
        a.n_points = ja.at("n_points").get<int>();
        a.spacing = ja.at("spacing").get<double>();
        a.origin_index = ja.at("origin_index").get<int>();
        axes.push_back(a);
    }
    std::size_t n = 1;
    for (const Axis& a : axes) n *= static_cast<std::size_t>(a.n_points);
    std::vector<cplx> values;
    values.reserve(n);
    double re = 0.0, im = 0.0;
    while (values.size() < n && (in >> re >> im)) values.emplace_back(re, im);
    if (values.size() != n) throw std::runtime_error("load_field: truncated value block");
    return SampledField(std::move(axes), std::move(values));
}

void export_csv(const SampledField& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_csv: cannot open " + path);
    const int rank = f.rank();
    for (int a = 0; a < rank; ++a) out << "x" << a << ',';
    out << "re,im\n";
    const auto vals = f.values();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < vals.size(); ++flat) {
        std::size_t rem = flat;
        for (int a = rank - 1; a >= 0; --a) {
            const auto n = static_cast<std::size_t>(f.axis(a).n_points);
            idx[static_cast<std::size_t>(a)] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int a = 0; a < rank; ++a)
            out << format_g12(f.axis(a).coordinate(idx[static_cast<std::size_t>(a)])) << ',';
        out << format_g12(vals[flat].real()) << ',' << format_g12(vals[flat].imag()) << '\n';
    }
    if (!out) throw std::runtime_error("export_csv: write failed for " + path);
}

}  // namespace wig
