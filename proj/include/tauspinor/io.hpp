#pragma once

// File formats: plot-ready CSV plus JSON sidecars. All doubles are written
// with 17 significant digits so round-trips are bit-faithful.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tauspinor/kinematics.hpp"
#include "tauspinor/linalg.hpp"
#include "tauspinor/solver.hpp"

namespace tauspinor {

using json = nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    return os;
}

/// Timeline CSV: header `t,tau,x,y,z`, one row per sample.
inline void write_timeline_csv(const Timeline& tl, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "t,tau,x,y,z\n";
    for (std::size_t i = 0; i < tl.t.size(); ++i)
        os << fmt_g17(tl.t[i]) << ',' << fmt_g17(tl.tau[i]) << ',' << fmt_g17(tl.x[i].x) << ','
           << fmt_g17(tl.x[i].y) << ',' << fmt_g17(tl.x[i].z) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

/// Spectrum CSV: `kappa,weight`.
inline void write_spectrum_csv(const std::vector<SpectrumRow>& rows,
                               const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "kappa,weight\n";
    for (const auto& r : rows) os << fmt_g17(r.kappa) << ',' << fmt_g17(r.weight) << '\n';
    if (!os) throw IoError("write failed: " + path.string());
}

/// Field snapshot CSV: `ix,itau,c0re,c0im,...,c3im`; grid geometry and the
/// snapshot time go to a JSON sidecar next to it.
inline void write_field_csv(const Field& f, double t, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "ix,itau,c0re,c0im,c1re,c1im,c2re,c2im,c3re,c3im\n";
    for (int ix = 0; ix < f.nx; ++ix)
        for (int it = 0; it < f.ntau; ++it) {
            os << ix << ',' << it;
            for (int c = 0; c < 4; ++c)
                os << ',' << fmt_g17(f.at(ix, it, c).real()) << ','
                   << fmt_g17(f.at(ix, it, c).imag());
            os << '\n';
        }
    if (!os) throw IoError("write failed: " + path.string());

    const json sidecar = {{"nx", f.nx}, {"ntau", f.ntau}, {"lx", f.lx},
                          {"ltau", f.ltau}, {"t", t}};
    auto side = open_out(std::filesystem::path(path).concat(".json"));
    side << sidecar.dump(2) << '\n';
    if (!side) throw IoError("write failed: " + path.string() + ".json");
}

/// Matrix dump: JSON array of rows of [re, im] pairs, row-major.
template <std::size_t N>
json matrix_to_json(const Matrix<N>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < N; ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

/// Spinor dump: JSON array of [re, im] pairs.
template <std::size_t N>
json spinor_to_json(const Vector<N>& v) {
    json out = json::array();
    for (std::size_t i = 0; i < N; ++i) out.push_back({v[i].real(), v[i].imag()});
    return out;
}

}  // namespace tauspinor
