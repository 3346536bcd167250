#include "nlgauge/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nlg {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    if (!j.is_object()) throw IoError("expected a JSON object");
    return j;
}

double number_or(const json& j, const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw IoError(std::string("key '") + key + "' is not a number");
    return it->get<double>();
}

std::string format17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

CoefficientVector coeffs_from_json(const std::string& text) {
    json j = parse(text);
    const auto& names = CoefficientVector::field_names();
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* n : names) known = known || it.key() == n;
        if (!known) throw IoError("unknown coefficient key '" + it.key() + "'");
    }
    std::array<double, 15> a{};
    for (std::size_t i = 0; i < names.size(); ++i)
        a[i] = number_or(j, names[i], 0.0);
    return CoefficientVector::from_array(a);
}

std::string coeffs_to_json(const CoefficientVector& c) {
    json j;
    const auto a = c.as_array();
    const auto& names = CoefficientVector::field_names();
    for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = a[i];
    return j.dump(2);
}

CoefficientVector load_coeffs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open coefficient file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return coeffs_from_json(ss.str());
}

void save_coeffs(const CoefficientVector& c, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write coefficient file: " + path);
    os << coeffs_to_json(c) << "\n";
}

GaugeParams gauge_from_json(const std::string& text) {
    json j = parse(text);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "gamma" && it.key() != "lambda" && it.key() != "eta")
            throw IoError("unknown gauge key '" + it.key() + "'");
    }
    GaugeParams g;
    g.gamma = number_or(j, "gamma", 0.0);
    g.lambda = number_or(j, "lambda", 1.0);
    g.eta = number_or(j, "eta", 0.0);
    if (g.lambda == 0.0) throw IoError("gauge lambda must be nonzero");
    return g;
}

std::string gauge_to_json(const GaugeParams& g) {
    json j;
    j["gamma"] = g.gamma;
    j["lambda"] = g.lambda;
    j["eta"] = g.eta;
    return j.dump(2);
}

GaugeParams load_gauge(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open gauge file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return gauge_from_json(ss.str());
}

std::string invariants_to_json(const InvariantVector& t) {
    json j;
    const auto a = t.as_array();
    const auto& names = InvariantVector::component_names();
    for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = a[i];
    return j.dump(2);
}

std::string classification_to_json(const ClassificationReport& r) {
    json j;
    j["linear_equivalent"] = r.linear_equivalent;
    j["dg_equivalent"] = r.dg_equivalent;
    j["galilean"] = r.galilean;
    j["time_reversal"] = r.time_reversal;
    j["tolerance_used"] = r.tolerance_used;
    j["residuals"] = {{"linear", r.linear_residual},
                      {"dg", r.dg_residual},
                      {"galilean", r.galilean_residual},
                      {"time_reversal", r.time_reversal_residual}};
    if (r.linear_equivalent) j["hbar_over_m"] = r.hbar_over_m;
    return j.dump(2);
}

void write_field_csv(std::ostream& os, const WaveField& psi,
                     const std::vector<std::string>& extra_names,
                     const std::vector<const RealField*>& extra) {
    if (extra_names.size() != extra.size())
        throw PreconditionError("extra column names/fields mismatch");
    const GridSpec& g = psi.grid;
    os << (g.dim == 2 ? "x,y,re(psi),im(psi)" : "x,re(psi),im(psi)");
    for (const auto& n : extra_names) os << "," << n;
    os << "\n";
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
        for (int i1 = 0; i1 < g.n[1]; ++i1) {
            os << format17(g.coord(0, i0));
            if (g.dim == 2) os << "," << format17(g.coord(1, i1));
            const complex_t v = psi.at(i0, i1);
            os << "," << format17(v.real()) << "," << format17(v.imag());
            for (const RealField* f : extra)
                os << "," << format17(f->at(i0, i1));
            os << "\n";
        }
    }
}

void save_field_csv(const WaveField& psi, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write field file: " + path);
    write_field_csv(os, psi);
}

WaveField read_field_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw IoError("empty field file");
    if (header.rfind("x,re(psi)", 0) != 0)
        throw IoError("field CSV must start with columns x,re(psi),im(psi)");
    std::vector<double> xs, re, im;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() < 3) throw IoError("field CSV row with fewer than 3 columns");
        xs.push_back(row[0]);
        re.push_back(row[1]);
        im.push_back(row[2]);
    }
    if (xs.size() < 16) throw IoError("field CSV needs at least 16 rows");
    const double dx = xs[1] - xs[0];
    if (!(dx > 0.0)) throw IoError("field CSV x column must increase");
    GridSpec g = GridSpec::line(static_cast<int>(xs.size()), dx);
    WaveField psi(g);
    for (std::size_t i = 0; i < xs.size(); ++i)
        psi.values[i] = complex_t(re[i], im[i]);
    if (!all_finite(psi)) throw IoError("field CSV contains non-finite samples");
    return psi;
}

WaveField load_field_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open field file: " + path);
    return read_field_csv(is);
}

std::string diagnostics_json_line(double time, double total_probability,
                                  double continuity_residual,
                                  double max_amplitude) {
    std::ostringstream os;
    os << "{\"time\": " << format17(time)
       << ", \"norm\": " << format17(total_probability)
       << ", \"continuity_residual\": " << format17(continuity_residual)
       << ", \"max_amp\": " << format17(max_amplitude) << "}";
    return os.str();
}

} // namespace nlg
