#include "dirac/io.hpp"

#include <nlohmann/json.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

using nlohmann::json;

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

json field_header(const LatticeField& f) {
    return json{{"n", f.grid.dim},
                {"N", f.grid.points},
                {"eps", f.grid.spacing},
                {"d", f.spinor_dim()}};
}

LatticeField field_from_header(const json& h) {
    return LatticeField(GridSpec(h.at("n").get<int>(), h.at("N").get<int>(),
                                 h.at("eps").get<double>()),
                        h.at("d").get<int>());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void save_field(const LatticeField& field, const std::string& path) {
    const std::int64_t sites = field.grid.sites();
    const int d = field.spinor_dim();
    if (is_json_path(path)) {
        json doc = field_header(field);
        json data = json::array();
        for (std::int64_t s = 0; s < sites; ++s)
            for (int c = 0; c < d; ++c) {
                data.push_back(field.values(s, c).real());
                data.push_back(field.values(s, c).imag());
            }
        doc["data"] = std::move(data);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("save_field: cannot open " + path);
        out << doc.dump() << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_field: cannot open " + path);
    out << field_header(field).dump() << '\n';
    std::vector<double> buf(static_cast<std::size_t>(sites) * d * 2);
    std::size_t p = 0;
    for (std::int64_t s = 0; s < sites; ++s)
        for (int c = 0; c < d; ++c) {
            buf[p++] = field.values(s, c).real();
            buf[p++] = field.values(s, c).imag();
        }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(double)));
}

LatticeField load_field(const std::string& path) {
    if (is_json_path(path)) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("load_field: cannot open " + path);
        json doc = json::parse(in);
        LatticeField field = field_from_header(doc);
        const auto& data = doc.at("data");
        const std::int64_t expected = field.grid.sites() * field.spinor_dim() * 2;
        if (static_cast<std::int64_t>(data.size()) != expected)
            throw std::runtime_error("load_field: sample count does not match the header");
        std::size_t p = 0;
        for (std::int64_t s = 0; s < field.grid.sites(); ++s)
            for (int c = 0; c < field.spinor_dim(); ++c) {
                const double re = data[p++].get<double>();
                const double im = data[p++].get<double>();
                field.values(s, c) = Complex(re, im);
            }
        return field;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    std::string header;
    std::getline(in, header);
    LatticeField field = field_from_header(json::parse(header));
    std::vector<double> buf(static_cast<std::size_t>(field.grid.sites()) * field.spinor_dim() * 2);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(double)))
        throw std::runtime_error("load_field: truncated sample block");
    std::size_t p = 0;
    for (std::int64_t s = 0; s < field.grid.sites(); ++s)
        for (int c = 0; c < field.spinor_dim(); ++c) {
            const double re = buf[p++];
            const double im = buf[p++];
            field.values(s, c) = Complex(re, im);
        }
    return field;
}

nlohmann::json describe_walk(const WalkOperator& w) {
    json factors = json::array();
    for (const auto& f : w.factors) {
        if (const auto* coin = std::get_if<CoinFactor>(&f)) {
            factors.push_back(json{{"type", "coin"},
                                   {"label", coin->label},
                                   {"matrix", matrix_to_json(coin->u)}});
        } else {
            const auto& sh = std::get<ShiftFactor>(f);
            factors.push_back(json{{"type", "shift"},
                                   {"axis", sh.axis},
                                   {"steps", sh.steps},
                                   {"substep", w.eps / w.substeps}});
        }
    }
    return json{{"dim", w.dim},
                {"spinor_dim", w.spinor_dim},
                {"eps", w.eps},
                {"substeps", w.substeps},
                {"factors", std::move(factors)}};
}

nlohmann::json report_to_json(const ConvergenceReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back(json{{"l", r.l},
                            {"eps", r.eps},
                            {"error", r.error},
                            {"bound", r.bound},
                            {"ratio", r.error / r.bound},
                            {"in_fit", r.in_fit}});
    json doc{{"dim", report.dim},
             {"mass", report.mass},
             {"x0", report.x0},
             {"s", report.s},
             {"constants", json{{"C", report.c}, {"C_prime", report.c_prime}}},
             {"rows", std::move(rows)}};
    if (std::isnan(report.fitted_order))
        doc["fitted_order"] = nullptr;
    else
        doc["fitted_order"] = report.fitted_order;
    return doc;
}

std::string report_to_csv(const ConvergenceReport& report, const std::string& config_hash) {
    std::string out = "# config_hash=" + config_hash + "\n";
    out += "# C=" + format_double(report.c) + " C_prime=" + format_double(report.c_prime);
    if (!std::isnan(report.fitted_order))
        out += " fitted_order=" + format_double(report.fitted_order);
    out += "\n";
    out += "l,eps,error,bound,ratio\n";
    for (const auto& r : report.rows) {
        out += std::to_string(r.l) + "," + format_double(r.eps) + "," + format_double(r.error) +
               "," + format_double(r.bound) + "," + format_double(r.error / r.bound) + "\n";
    }
    return out;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace dirac
